import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from avnkit.gf2 import Gf2System, certificate_is_sound, gf2_solve, rank, satisfies
from avnkit.pauli import (
    CheckVector,
    PauliElement,
    all_words,
    commutes,
    format_word_list,
    from_check_vector,
    mul,
    parse_word_list,
    product,
    symplectic_product,
    to_check_vector,
)

from conftest import pauli_matrix


def words(n):
    return st.builds(
        lambda x, z, ph: PauliElement(n, x, z, ph),
        st.integers(0, (1 << n) - 1),
        st.integers(0, (1 << n) - 1),
        st.integers(0, 3),
    )


def test_multiplication_matches_matrices_exhaustively_at_two_qubits():
    elems = [w.with_phase(ph) for w in all_words(2) for ph in range(4)]
    for p in elems:
        for q in elems:
            assert np.allclose(pauli_matrix(mul(p, q)), pauli_matrix(p) @ pauli_matrix(q))


@given(words(4), words(4))
def test_multiplication_matches_matrices(p, q):
    assert np.allclose(pauli_matrix(p * q), pauli_matrix(p) @ pauli_matrix(q))


@given(words(5), words(5))
def test_commutation_agrees_with_symplectic_form(p, q):
    a, b = pauli_matrix(p), pauli_matrix(q)
    matrix_says = np.allclose(a @ b, b @ a)
    assert commutes(p, q) == matrix_says
    assert symplectic_product(to_check_vector(p), to_check_vector(q)) == (not matrix_says)


@given(words(3), words(3), words(3))
def test_multiplication_is_associative(p, q, r):
    assert (p * q) * r == p * (q * r)


def test_single_qubit_products():
    x, y, z = (PauliElement.parse(c) for c in "XYZ")
    assert x * y == PauliElement.parse("iZ")
    assert y * x == PauliElement.parse("-iZ")
    assert z * x == PauliElement.parse("iY")
    assert x * x == PauliElement.identity(1)


def test_check_vector_round_trip():
    rng = random.Random(7)
    for _ in range(1000):
        p = PauliElement(6, rng.getrandbits(6), rng.getrandbits(6), rng.choice((0, 2)))
        v = to_check_vector(p)
        assert len(v.bits()) == 12
        assert CheckVector.from_bits(v.bits()) == v
        assert from_check_vector(v, p.phase) == p


def test_check_vector_layout_is_x_then_z():
    v = to_check_vector(PauliElement.parse("XYZI"))
    assert v.bits() == (1, 1, 0, 0, 0, 1, 1, 0)


@pytest.mark.parametrize(
    "text, letters, phase",
    [("XYZ", "XYZ", 0), ("-XYY", "XYY", 2), ("+ZZ", "ZZ", 0), ("iX", "X", 1), ("-iZI", "ZI", 3), ("xyz", "XYZ", 0)],
)
def test_parse(text, letters, phase):
    p = PauliElement.parse(text)
    assert (p.letters, p.phase) == (letters, phase)


def test_format_round_trip():
    text = "XXX,-XYY,iZZI,-iIIZ"
    assert format_word_list(parse_word_list(text)) == text


@pytest.mark.parametrize("bad", ["", "XQ", "-"])
def test_parse_rejects_garbage(bad):
    with pytest.raises(ValueError):
        PauliElement.parse(bad)


def test_length_mismatch_is_an_error():
    with pytest.raises(ValueError):
        mul(PauliElement.parse("XX"), PauliElement.parse("X"))


def test_views():
    p = PauliElement.parse("-XIYZ")
    assert p.weight == 3
    assert p.support == 0b1101
    assert p.sign_bit == 1
    assert p.restrict([0, 2]) == PauliElement.parse("-XY")
    assert product([PauliElement.parse("XX"), PauliElement.parse("ZZ")]) == PauliElement.parse("-YY")


# -- GF(2) ----------------------------------------------------------------


def test_pr_box_system_is_refuted_by_all_four_rows():
    # a1+b1=0, a1+b2=0, a2+b1=0, a2+b2=1 over variables a1,a2,b1,b2
    sys_ = Gf2System(4)
    sys_.add([0, 2], 0)
    sys_.add([0, 3], 0)
    sys_.add([1, 2], 0)
    sys_.add([1, 3], 1)
    res = gf2_solve(sys_)
    assert not res.consistent
    assert sorted(res.certificate) == [0, 1, 2, 3]


def test_consistent_system_returns_a_solution():
    sys_ = Gf2System(3)
    sys_.add([0, 1], 1)
    sys_.add([1, 2], 0)
    res = gf2_solve(sys_)
    assert res.consistent and satisfies(sys_.rows, res.assignment)


def _brute_consistent(rows, nv):
    return any(satisfies(rows, tuple((a >> v) & 1 for v in range(nv))) for a in range(1 << nv))


@given(st.lists(st.tuples(st.integers(0, 63), st.integers(0, 1)), max_size=10))
def test_elimination_agrees_with_brute_force(rows):
    sys_ = Gf2System(6)
    for mask, rhs in rows:
        sys_.add([v for v in range(6) if (mask >> v) & 1], rhs)
    res = gf2_solve(sys_)
    assert res.consistent == _brute_consistent(sys_.rows, 6)
    if res.consistent:
        assert satisfies(sys_.rows, res.assignment)
    else:
        assert certificate_is_sound(sys_.rows, res.certificate)


def test_rank():
    assert rank([0b011, 0b110, 0b101]) == 2
    assert rank([]) == 0
