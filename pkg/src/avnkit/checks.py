"""Cross-module invariant checks, shared by ``avnkit verify`` and the test suite.

Each check returns a :class:`CheckResult`; none of them raise on a failed
property, so a caller can run all of them and report.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from itertools import product as cartesian

from .gf2 import certificate_is_sound, rank
from .graphstate import (
    Graph,
    LocalCliffordFrame,
    conjugate,
    extract_avn_triple,
    graph_group,
    has_avn,
    single_qubit_cliffords,
)
from .pauli import PauliElement, commutes
from .semantics import (
    isotropy_group,
    stabilised_subspace,
    stabiliser_state,
    subspace_contains,
)
from .subgroup import StabiliserGroup, elements, equation_of, is_avn
from .triples import (
    COLUMNS,
    AvnTriple,
    certificate_elements,
    count_brute,
    count_formula,
    count_structured,
    enumerate_triples,
    is_avn_triple_def2,
    pattern_counts,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}" + (f": {self.detail}" if self.detail else "")


def all_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [e for i, e in enumerate(pairs) if (mask >> i) & 1])


def four_equation_refutation(t: AvnTriple) -> bool:
    rows = [(equation_of(p).mask, equation_of(p).rhs) for p in certificate_elements(t)]
    return certificate_is_sound(rows, range(4))


def check_graph_triples(max_n: int = 5) -> CheckResult:
    """Graph groups: AvN <=> max degree >= 2 <=> a triple is extracted."""
    graphs = failures = 0
    for n in range(1, max_n + 1):
        for g in all_graphs(n):
            graphs += 1
            verdict = bool(is_avn(graph_group(g)))
            found = extract_avn_triple(g)
            ok = verdict == has_avn(g) == (found is not None)
            if found is not None:
                _, triple, _ = found
                group = graph_group(g)
                ok = ok and triple.is_valid() and four_equation_refutation(triple)
                ok = ok and all(group.contains(p) for p in triple)
            failures += not ok
    return CheckResult(
        f"graph groups: AvN <=> degree >= 2 <=> triple found, n <= {max_n}",
        failures == 0,
        f"{graphs} graphs, {failures} failures",
    )


def _condition1_columns():
    return [(a, b, c) for a, b, c, _ in COLUMNS]


def _parity_matches_commutation(e: PauliElement, f: PauliElement, g: PauliElement) -> bool:
    pairwise = commutes(e, f) and commutes(f, g) and commutes(e, g)
    c = pattern_counts(e, f, g)
    same = c.n_e % 2 == c.n_f % 2 == c.n_g % 2
    return pairwise == same


def _triple_from_columns(cols):
    e = PauliElement.from_codes([a for a, _, _ in cols])
    f = PauliElement.from_codes([b for _, b, _ in cols])
    g = PauliElement.from_codes([c for _, _, c in cols])
    return e, f, g


def check_parity_commutation(samples: int = 100_000, max_n: int = 6, seed: int = 0) -> CheckResult:
    """Commutation <=> equal parities, exhaustive at n=3 and sampled up to ``max_n``."""
    cols = _condition1_columns()
    bad = total = 0
    for combo in cartesian(cols, repeat=3):
        total += 1
        bad += not _parity_matches_commutation(*_triple_from_columns(combo))
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(3, max_n)
        total += 1
        bad += not _parity_matches_commutation(*_triple_from_columns([rng.choice(cols) for _ in range(n)]))
    return CheckResult(
        "commutation <=> equal parity counts",
        bad == 0,
        f"{total} triples, {bad} counterexamples",
    )


def random_frame(n: int, rng: random.Random) -> LocalCliffordFrame:
    sites = single_qubit_cliffords()
    return LocalCliffordFrame(tuple(rng.choice(sites) for _ in range(n)))


def random_triple(n: int, rng: random.Random) -> AvnTriple:
    """Uniform-ish valid triple: random columns conditioned on all-odd counts."""
    while True:
        e, f, g = _triple_from_columns([rng.choice(_condition1_columns()) for _ in range(n)])
        if is_avn_triple_def2(e, f, g):
            signs = [rng.choice((0, 2)) for _ in range(3)]
            return AvnTriple(e.with_phase(signs[0]), f.with_phase(signs[1]), g.with_phase(signs[2]))


def check_lc_preservation(samples: int = 10_000, max_n: int = 5, seed: int = 0) -> CheckResult:
    rng = random.Random(seed)
    bad = 0
    for _ in range(samples):
        n = rng.randint(3, max_n)
        t = random_triple(n, rng)
        frame = random_frame(n, rng)
        bad += not is_avn_triple_def2(*(conjugate(frame, p) for p in t))
    return CheckResult(
        "local Clifford frames preserve AvN triples",
        bad == 0,
        f"{samples} cases, {bad} failures",
    )


def check_counts(max_n: int = 4) -> CheckResult:
    details = []
    ok = True
    for n in range(3, max_n + 1):
        listed = sum(1 for _ in enumerate_triples(n))
        brute = count_brute(n)
        dp = count_structured(n)
        formula = count_formula(n) // 8
        ok &= listed == brute == dp == formula
        details.append(f"n={n}: listed={listed} brute={brute} dp={dp} formula={formula}")
    return CheckResult("triple counts agree across engines", ok, "; ".join(details))


def random_group(n: int, rng: random.Random, k: int | None = None) -> StabiliserGroup:
    """Random valid stabiliser group of rank ``k`` (random rank if None)."""
    if k is None:
        k = rng.randint(0, n)
    while True:
        gens: list[PauliElement] = []
        for _ in range(200 * (k + 1)):
            if len(gens) == k:
                break
            cand = PauliElement(n, rng.getrandbits(n), rng.getrandbits(n), rng.choice((0, 2)))
            if cand.is_identity() or not all(commutes(cand, g) for g in gens):
                continue
            masks = [g.x | (g.z << n) for g in gens + [cand]]
            if rank(masks) == len(gens) + 1:
                gens.append(cand)
        if len(gens) == k:
            return StabiliserGroup(n, tuple(gens))


def random_pauli(n: int, rng: random.Random) -> PauliElement:
    return PauliElement(n, rng.getrandbits(n), rng.getrandbits(n), rng.randrange(4))


def galois_case_holds(n: int, rng: random.Random) -> bool:
    """One random instance of both unit laws, antitonicity, and G(F(S)) = S."""
    # S <= (S^perp)^perp, and adding elements can only shrink S^perp
    s = {random_pauli(n, rng) for _ in range(rng.randint(1, 3))}
    if rng.random() < 0.5:
        s |= set(elements(random_group(n, rng)))
    fixed = stabilised_subspace(s, n)
    if not s <= set(isotropy_group(fixed, n)):
        return False
    bigger = s | {random_pauli(n, rng)}
    if not subspace_contains(fixed, stabilised_subspace(bigger, n)):
        return False
    # V <= (V^perp)^perp, and enlarging V can only shrink V^perp
    group = random_group(n, rng, n)
    v = [stabiliser_state(group)]
    if rng.random() < 0.5:
        v.append(stabiliser_state(random_group(n, rng, n)))
    iso = isotropy_group(v, n)
    if not subspace_contains(stabilised_subspace(iso, n), v):
        return False
    v_more = v + [stabiliser_state(random_group(n, rng, n))]
    if not set(isotropy_group(v_more, n)) <= set(iso):
        return False
    # closure is the identity on maximal groups
    return set(isotropy_group(stabilised_subspace(elements(group), n), n)) == set(elements(group))


def check_galois(samples: int = 50, max_n: int = 3, seed: int = 0) -> CheckResult:
    rng = random.Random(seed)
    bad = sum(not galois_case_holds(rng.randint(1, max_n), rng) for _ in range(samples))
    return CheckResult("Galois unit laws and closure", bad == 0, f"{samples} cases, {bad} failures")


SUITES = {
    "graphs": check_graph_triples,
    "parity": check_parity_commutation,
    "lc": check_lc_preservation,
    "counts": check_counts,
    "galois": check_galois,
}
