import random
from functools import reduce

import numpy as np
import pytest

from avnkit.checks import all_graphs, random_frame
from avnkit.graphstate import (
    HADAMARD,
    IDENTITY_SITE,
    PHASE_GATE,
    Graph,
    LocalCliffordFrame,
    conjugate,
    conjugate_group,
    extract_avn_triple,
    graph_generators,
    graph_group,
    has_avn,
    lc_orbit,
    local_complement,
    local_complement_frame,
    parse_graph,
    same_group,
    single_qubit_cliffords,
)
from avnkit.pauli import PauliElement
from avnkit.semantics import apply_frame, clifford_matrix, stabiliser_state
from avnkit.subgroup import SizeCapError, StabiliserGroup, is_avn

from conftest import pauli_matrix

P = PauliElement.parse


def frame_unitary(frame):
    mats = [np.array([[complex(*e) for e in row] for row in clifford_matrix(s)]) for s in frame.images]
    u = reduce(np.kron, mats)
    # unnormalised Gaussian-integer matrices: rescale to unitary
    return u / np.sqrt(abs((u @ u.conj().T)[0, 0]))


def test_generators():
    gens = graph_generators(Graph.path(3))
    assert [str(g) for g in gens] == ["XZI", "ZXZ", "IZX"]


def test_complete_graph_complement_is_a_star():
    for v in range(3):
        assert local_complement(Graph.complete(3), v) == Graph.star(3, v)


def test_local_complement_is_an_involution():
    for g in all_graphs(4):
        for v in range(4):
            assert local_complement(local_complement(g, v), v) == g


def test_three_vertex_connected_graphs_form_one_orbit():
    connected = {g for g in all_graphs(3) if len(g.edges) >= 2}
    assert len(connected) == 4
    for g in connected:
        assert lc_orbit(g) == connected


def test_orbit_cap():
    with pytest.raises(SizeCapError):
        lc_orbit(Graph.empty(9))


def test_parse_formats():
    g = parse_graph("n=3\nedges=0-1,1-2\n")
    assert g == Graph.path(3)
    assert parse_graph("011\n101\n110") == Graph.complete(3)
    assert parse_graph(g.format()) == g
    for bad in ["", "n=2\nedges=0-0", "n=2\nedges=0-5", "01\n00", "n=2\nfoo"]:
        with pytest.raises(ValueError):
            parse_graph(bad)


def test_has_avn_and_extraction_cases():
    assert not has_avn(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert extract_avn_triple(Graph.from_edges(4, [(0, 1), (2, 3)])) is None
    (u, v, w), t, case = extract_avn_triple(Graph.complete(3))
    assert case == 1 and [str(p) for p in t] == ["XZZ", "ZXZ", "ZZX"]
    (u, v, w), t, case = extract_avn_triple(Graph.star(3))
    assert case == 2 and [str(p) for p in t] == ["XZZ", "YYZ", "YZY"]
    assert t.is_valid()


def test_twenty_four_single_qubit_frames_match_matrices():
    sites = single_qubit_cliffords()
    assert len(sites) == 24 and len(set(sites)) == 24
    for site in sites:
        frame = LocalCliffordFrame((site,))
        u = frame_unitary(frame)
        for letter in "XYZ":
            p = P(letter)
            assert np.allclose(u @ pauli_matrix(p) @ u.conj().T, pauli_matrix(conjugate(frame, p)))


def test_random_frames_match_matrices_on_three_qubits():
    rng = random.Random(2)
    for _ in range(100):
        frame = random_frame(3, rng)
        p = PauliElement(3, rng.getrandbits(3), rng.getrandbits(3), rng.randrange(4))
        u = frame_unitary(frame)
        assert np.allclose(u @ pauli_matrix(p) @ u.conj().T, pauli_matrix(conjugate(frame, p)))


def test_named_sites():
    assert conjugate(LocalCliffordFrame((HADAMARD,)), P("X")) == P("Z")
    assert conjugate(LocalCliffordFrame((HADAMARD,)), P("Y")) == P("-Y")
    assert conjugate(LocalCliffordFrame((PHASE_GATE,)), P("Y")) == P("-X")
    assert conjugate(LocalCliffordFrame.identity(2), P("-XY")) == P("-XY")
    with pytest.raises(ValueError):
        LocalCliffordFrame.from_strings([("X", "X")])


def test_ghz_is_a_star_up_to_hadamards():
    ghz = StabiliserGroup.parse("XXX,ZZI,IZZ")
    frame = LocalCliffordFrame((IDENTITY_SITE, HADAMARD, HADAMARD))
    assert same_group(conjugate_group(frame, ghz), graph_group(Graph.star(3)))


def test_local_complement_frame_maps_graph_groups():
    for g in all_graphs(4):
        for v in range(4):
            image = conjugate_group(local_complement_frame(g, v), graph_group(g))
            assert same_group(image, graph_group(local_complement(g, v)))


def test_frame_acts_on_states_like_it_acts_on_groups():
    rng = random.Random(4)
    for g in list(all_graphs(3))[::2]:
        frame = random_frame(3, rng)
        s = graph_group(g)
        moved = apply_frame(frame, stabiliser_state(s))
        assert moved.same_ray(stabiliser_state(conjugate_group(frame, s)))


def test_frames_preserve_avn():
    rng = random.Random(8)
    for g in all_graphs(4):
        s = graph_group(g)
        assert bool(is_avn(s)) == bool(is_avn(conjugate_group(random_frame(4, rng), s)))
