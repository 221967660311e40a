import random
from fractions import Fraction
from functools import reduce
from itertools import combinations

import numpy as np
import pytest

from avnkit.checks import galois_case_holds, random_group
from avnkit.graphstate import Graph, graph_group
from avnkit.pauli import PauliElement, all_words
from avnkit.semantics import (
    ExactScalar,
    ExactState,
    apply_pauli,
    empirical_model,
    expectation,
    fixture,
    ghz_state,
    is_no_signalling,
    is_strongly_contextual,
    isotropy_group,
    pr_box,
    projector_trace,
    stabilised_subspace,
    stabiliser_state,
    subspace_contains,
    xor_theory_of_model,
)
from avnkit.subgroup import SizeCapError, StabiliserGroup, elements, is_avn, stabiliser_dimension, xor_theory

from conftest import SINGLE, pauli_matrix

P = PauliElement.parse
EVEN = ["000", "011", "101", "110"]
ODD = ["001", "010", "100", "111"]


def dense(state):
    return np.array([complex(a, b) for a, b in state.pairs]) / np.sqrt(state.norm2)


def eigenbasis(letter):
    """Columns: +1 eigenvector then -1 eigenvector."""
    _, vecs = np.linalg.eigh(SINGLE[letter])
    return vecs[:, ::-1]


def born(state, letters, outcome):
    psi = dense(state)
    basis = reduce(np.kron, [eigenbasis(c)[:, int(b)] for c, b in zip(letters, outcome)])
    return abs(np.vdot(basis, psi)) ** 2


def test_exact_scalar_arithmetic():
    half = ExactScalar(1, 0, 1)
    assert half + half == ExactScalar(1, 0, 0)
    assert (half * half).real == Fraction(1, 4)
    assert ExactScalar(2, 2, 2) == ExactScalar(1, 1, 1)
    assert ExactScalar(1, 1).abs2() == 2


def test_pauli_action_matches_matrices():
    rng = random.Random(0)
    for _ in range(50):
        amps = [(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(8)]
        s = ExactState.from_amplitudes(3, amps)
        p = PauliElement(3, rng.getrandbits(3), rng.getrandbits(3), rng.randrange(4))
        vec = np.array([complex(*a) for a in amps])
        got = np.array([complex(*a) for a in apply_pauli(p, s).pairs])
        assert np.allclose(got, pauli_matrix(p) @ vec)


def test_ghz_state_and_stabiliser():
    s = stabiliser_state(StabiliserGroup.parse("XXX,ZZI,IZZ"))
    assert s == ghz_state(3)
    assert s.format() == "1|000> + 1|111>"
    assert expectation(s, P("-XYY")) == 1
    assert expectation(s, P("ZII")) == 0


def test_table_of_mermin_contexts():
    m = fixture("ghz3")
    assert m.support(["x1", "x2", "x3"]) == EVEN
    for ctx in (["x1", "y2", "y3"], ["y1", "x2", "y3"], ["y1", "y2", "x3"]):
        assert m.support(ctx) == ODD
        assert set(m.distribution(ctx)) == {Fraction(0), Fraction(1, 4)}
    assert is_strongly_contextual(m)
    assert is_no_signalling(m)


@pytest.mark.parametrize("graph", [Graph.complete(3), Graph.path(3), Graph.path(4)])
def test_model_probabilities_follow_the_born_rule(graph):
    state = stabiliser_state(graph_group(graph))
    m = empirical_model(state)
    for ctx, row in zip(m.contexts, m.table):
        letters = "".join("XYZ"[j] for j in ctx)
        for s, p in enumerate(row):
            assert float(p) == pytest.approx(born(state, letters, f"{s:0{graph.n}b}"), abs=1e-12)


def test_pr_box_is_contextual_and_refuted_by_its_four_rows():
    m = pr_box()
    assert is_no_signalling(m)
    assert is_strongly_contextual(m)
    theory = xor_theory_of_model(m)
    assert theory.format().splitlines() == ["a1+b1 = 0", "a1+b2 = 0", "a2+b1 = 0", "a2+b2 = 1"]
    from avnkit.gf2 import gf2_solve

    res = gf2_solve(theory.system())
    assert not res.consistent and sorted(res.certificate) == [0, 1, 2, 3]


def test_product_state_is_not_contextual():
    m = empirical_model(stabiliser_state(StabiliserGroup.parse("ZII,IZI,IIZ")))
    assert not is_strongly_contextual(m)


def test_group_theory_is_contained_in_model_theory():
    rng = random.Random(6)
    for _ in range(15):
        s = random_group(3, rng, 3)
        model_eqs = set(xor_theory_of_model(empirical_model(stabiliser_state(s))).equations)
        assert set(xor_theory(s).equations) <= model_eqs


def test_avn_groups_give_strongly_contextual_models():
    rng = random.Random(12)
    seen = 0
    for _ in range(30):
        s = random_group(3, rng, 3)
        if is_avn(s):
            seen += 1
            assert is_strongly_contextual(empirical_model(stabiliser_state(s)))
    assert seen


def test_dimension_law():
    rng = random.Random(13)
    for _ in range(100):
        n = rng.randint(1, 4)
        s = random_group(n, rng)
        trace = projector_trace(s)
        assert trace == stabiliser_dimension(s) == 2 ** (s.n - s.k)
        proj = reduce(lambda a, b: a @ b, [(np.eye(2**n) + pauli_matrix(g)) / 2 for g in s.generators], np.eye(2**n))
        assert np.trace(proj).real == pytest.approx(trace)
        assert len(stabilised_subspace(s.generators, n)) == trace


def single_qubit_elements():
    return [w.with_phase(ph) for w in all_words(1) for ph in range(4)]


def test_galois_unit_law_on_every_single_qubit_subset():
    elems = single_qubit_elements()
    cache = {}
    for mask in range(1 << 16):
        subset = frozenset(e for i, e in enumerate(elems) if (mask >> i) & 1)
        # the isotropy group only depends on the fixed space, so memoise on it
        fixed = stabilised_subspace(subset, 1)
        fk = tuple(fixed)
        if fk not in cache:
            cache[fk] = set(isotropy_group(fixed, 1))
        assert subset <= cache[fk]
    assert len(cache) == 8  # zero space, whole plane, six eigenlines


def test_galois_closure_on_single_qubit_maximal_groups():
    for text in ["X", "-X", "Y", "-Y", "Z", "-Z"]:
        g = set(elements(StabiliserGroup.parse(text)))
        assert set(isotropy_group(stabilised_subspace(g, 1), 1)) == g


def test_galois_unit_law_on_single_qubit_subspaces():
    states = [stabiliser_state(StabiliserGroup.parse(t)) for t in ["X", "-X", "Y", "-Y", "Z", "-Z"]]
    families = [[]] + [[s] for s in states] + [list(p) for p in combinations(states, 2)]
    for v in families:
        back = stabilised_subspace(isotropy_group(v, 1), 1)
        assert subspace_contains(back, v)


def test_galois_random_cases():
    rng = random.Random(21)
    assert all(galois_case_holds(rng.randint(1, 3), rng) for _ in range(50))


def test_caps():
    with pytest.raises(SizeCapError):
        empirical_model(ExactState.basis(6, 0))
    with pytest.raises(SizeCapError):
        stabilised_subspace([P("ZZZZZ")])
    with pytest.raises(ValueError):
        stabiliser_state(StabiliserGroup.parse("ZZ"))
