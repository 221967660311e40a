"""Exact small-n quantum semantics for Pauli measurements on stabiliser states.

States are rays stored as Gaussian-integer amplitude vectors together with
their squared norm, so every probability is an exact rational and nothing
here touches floating point.  Basis index bits are read left to right:
qubit 0 is the most significant bit, matching kets like ``|011>``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product as cartesian
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .pauli import PauliElement
from .subgroup import SizeCapError, StabiliserGroup, XorEquation, XorTheory

STATE_CAP = 10
MODEL_CAP = 5
GALOIS_CAP = 4
ASSIGNMENT_CAP = 15

GaussInt = tuple[int, int]


def _gmul(a: GaussInt, b: GaussInt) -> GaussInt:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gsub(a: GaussInt, b: GaussInt) -> GaussInt:
    return (a[0] - b[0], a[1] - b[1])


def _unit(k: int, a: GaussInt) -> GaussInt:
    """Multiply by ``i**k``."""
    k %= 4
    if k == 0:
        return a
    if k == 1:
        return (-a[1], a[0])
    if k == 2:
        return (-a[0], -a[1])
    return (a[1], -a[0])


@dataclass(frozen=True)
class ExactScalar:
    """``(re + i*im) / 2**exp2`` in normal form (numerators not both even when exp2 > 0)."""

    re: int = 0
    im: int = 0
    exp2: int = 0

    def __post_init__(self):
        re, im, e = self.re, self.im, self.exp2
        if e < 0:
            raise ValueError("exp2 must be non-negative")
        if re == 0 and im == 0:
            e = 0
        while e > 0 and re % 2 == 0 and im % 2 == 0:
            re //= 2
            im //= 2
            e -= 1
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)
        object.__setattr__(self, "exp2", e)

    def _aligned(self, other: "ExactScalar"):
        e = max(self.exp2, other.exp2)
        return (
            self.re << (e - self.exp2),
            self.im << (e - self.exp2),
            other.re << (e - other.exp2),
            other.im << (e - other.exp2),
            e,
        )

    def __add__(self, other: "ExactScalar") -> "ExactScalar":
        a, b, c, d, e = self._aligned(other)
        return ExactScalar(a + c, b + d, e)

    def __sub__(self, other: "ExactScalar") -> "ExactScalar":
        a, b, c, d, e = self._aligned(other)
        return ExactScalar(a - c, b - d, e)

    def __mul__(self, other: "ExactScalar") -> "ExactScalar":
        re, im = _gmul((self.re, self.im), (other.re, other.im))
        return ExactScalar(re, im, self.exp2 + other.exp2)

    def __neg__(self) -> "ExactScalar":
        return ExactScalar(-self.re, -self.im, self.exp2)

    def conjugate(self) -> "ExactScalar":
        return ExactScalar(self.re, -self.im, self.exp2)

    def abs2(self) -> Fraction:
        return Fraction(self.re**2 + self.im**2, 4**self.exp2)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    @property
    def real(self) -> Fraction:
        return Fraction(self.re, 2**self.exp2)

    @property
    def imag(self) -> Fraction:
        return Fraction(self.im, 2**self.exp2)


@dataclass(frozen=True)
class ExactState:
    """Unnormalised state vector with Gaussian-integer amplitudes."""

    n: int
    re: tuple[int, ...]
    im: tuple[int, ...]

    def __post_init__(self):
        if len(self.re) != 1 << self.n or len(self.im) != 1 << self.n:
            raise ValueError(f"need {1 << self.n} amplitudes for {self.n} qubits")

    @classmethod
    def from_amplitudes(cls, n: int, amps: Sequence[GaussInt | int]) -> "ExactState":
        pairs = [(a, 0) if isinstance(a, int) else a for a in amps]
        return cls(n, tuple(a for a, _ in pairs), tuple(b for _, b in pairs))

    @classmethod
    def basis(cls, n: int, index: int | str) -> "ExactState":
        if isinstance(index, str):
            index = int(index, 2)
        amps = [(0, 0)] * (1 << n)
        amps[index] = (1, 0)
        return cls.from_amplitudes(n, amps)

    @classmethod
    def zero(cls, n: int) -> "ExactState":
        return cls(n, (0,) * (1 << n), (0,) * (1 << n))

    @property
    def pairs(self) -> list[GaussInt]:
        return list(zip(self.re, self.im))

    def amplitude(self, index: int) -> ExactScalar:
        return ExactScalar(self.re[index], self.im[index])

    @property
    def amplitudes(self) -> tuple[ExactScalar, ...]:
        return tuple(ExactScalar(a, b) for a, b in zip(self.re, self.im))

    @property
    def norm2(self) -> int:
        return sum(a * a + b * b for a, b in zip(self.re, self.im))

    def is_zero(self) -> bool:
        return not any(self.re) and not any(self.im)

    def __add__(self, other: "ExactState") -> "ExactState":
        return ExactState(
            self.n,
            tuple(a + b for a, b in zip(self.re, other.re)),
            tuple(a + b for a, b in zip(self.im, other.im)),
        )

    def scaled(self, c: GaussInt) -> "ExactState":
        pairs = [_gmul(c, a) for a in self.pairs]
        return ExactState.from_amplitudes(self.n, pairs)

    def inner(self, other: "ExactState") -> GaussInt:
        """``<self|other>``."""
        re = im = 0
        for a, b, c, d in zip(self.re, self.im, other.re, other.im):
            re += a * c + b * d
            im += a * d - b * c
        return re, im

    def canonical(self) -> "ExactState":
        """Ray representative: first nonzero amplitude real positive, coprime entries."""
        lead = next(((a, -b) for a, b in self.pairs if a or b), None)
        if lead is None:
            return self
        pairs = [_gmul(lead, p) for p in self.pairs]
        g = reduce(gcd, (abs(v) for p in pairs for v in p), 0)
        return ExactState.from_amplitudes(self.n, [(a // g, b // g) for a, b in pairs])

    def same_ray(self, other: "ExactState") -> bool:
        return self.n == other.n and self.canonical() == other.canonical()

    def format(self) -> str:
        terms = []
        for idx, (a, b) in enumerate(self.pairs):
            if a or b:
                coeff = f"({a}{b:+d}i)" if b else str(a)
                terms.append(f"{coeff}|{idx:0{self.n}b}>")
        return " + ".join(terms) or "0"


def _index_masks(p: PauliElement) -> tuple[int, int]:
    """Element masks re-expressed in basis-index bit order."""
    n = p.n
    xm = zm = 0
    for q in range(n):
        bit = 1 << (n - 1 - q)
        if (p.x >> q) & 1:
            xm |= bit
        if (p.z >> q) & 1:
            zm |= bit
    return xm, zm


def _apply_pairs(p: PauliElement, pairs: list[GaussInt]) -> list[GaussInt]:
    xm, zm = _index_masks(p)
    base = p.phase + (p.x & p.z).bit_count()
    out: list[GaussInt] = [(0, 0)] * len(pairs)
    for i, a in enumerate(pairs):
        if a[0] or a[1]:
            out[i ^ xm] = _unit(base + 2 * (i & zm).bit_count(), a)
    return out


def apply_pauli(p: PauliElement, s: ExactState) -> ExactState:
    """Act with ``p`` letterwise: X flips, Z signs ``|1>``, Y = i X Z."""
    if p.n != s.n:
        raise ValueError(f"length mismatch: {p.n} vs {s.n} qubits")
    return ExactState.from_amplitudes(s.n, _apply_pairs(p, s.pairs))


def expectation(s: ExactState, p: PauliElement) -> Fraction:
    """Normalised ``<s|p|s>`` for a real-phase element."""
    re, im = s.inner(apply_pauli(p, s))
    if im:
        raise ValueError(f"{p} has a non-real expectation")
    return Fraction(re, s.norm2)


def _project(gens: Sequence[PauliElement], pairs: list[GaussInt]) -> list[GaussInt]:
    """Apply ``prod (I + P)`` (unnormalised projector)."""
    for g in gens:
        moved = _apply_pairs(g, pairs)
        pairs = [(a[0] + b[0], a[1] + b[1]) for a, b in zip(pairs, moved)]
    return pairs


def projector_trace(s: StabiliserGroup, cap: int = STATE_CAP) -> int:
    """Trace of ``prod (I + P)/2`` over the generators, summed from the diagonal."""
    if s.n > cap:
        raise SizeCapError(f"dense projector is capped at n={cap}")
    dim = 1 << s.n
    total = 0
    for j in range(dim):
        col = [(0, 0)] * dim
        col[j] = (1, 0)
        re, im = _project(s.generators, col)[j]
        if im:
            raise AssertionError("projector has a non-real diagonal")
        total += re
    value = Fraction(total, 1 << s.k)
    if value.denominator != 1:
        raise AssertionError("projector trace is not an integer")
    return int(value)


def stabiliser_state(s: StabiliserGroup, cap: int = STATE_CAP) -> ExactState:
    """The unique ray fixed by a maximal group, in canonical form."""
    if not s.is_maximal:
        raise ValueError(f"group has rank {s.k} < {s.n}; no unique state")
    if s.n > cap:
        raise SizeCapError(f"state construction is capped at n={cap}")
    dim = 1 << s.n
    for j in range(dim):
        col = [(0, 0)] * dim
        col[j] = (1, 0)
        pairs = _project(s.generators, col)
        if any(a or b for a, b in pairs):
            state = ExactState.from_amplitudes(s.n, pairs).canonical()
            for g in s.generators:
                if apply_pauli(g, state) != state:
                    raise AssertionError(f"{g} does not fix the projected state")
            return state
    raise AssertionError("projector annihilated every basis vector")


# -- empirical models ------------------------------------------------------


def _frac_text(p: Fraction) -> str:
    return f"{p.numerator}/{p.denominator}"


@dataclass(frozen=True)
class EmpiricalModel:
    """Exact outcome distributions on maximal contexts.

    ``parties[i]`` lists the measurement labels of party ``i``; a context
    picks one label index per party; ``table[c][s]`` is the probability of
    joint outcome ``s`` (party 0 as the most significant bit).
    """

    parties: tuple[tuple[str, ...], ...]
    contexts: tuple[tuple[int, ...], ...]
    table: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        m = len(self.parties)
        for ctx, row in zip(self.contexts, self.table, strict=True):
            if len(ctx) != m or len(row) != 1 << m:
                raise ValueError("context/table shape mismatch")
            if any(p < 0 for p in row) or sum(row) != 1:
                raise ValueError(f"context {ctx} is not a probability distribution")

    @property
    def num_parties(self) -> int:
        return len(self.parties)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(lab for party in self.parties for lab in party)

    def variable(self, party: int, index: int) -> int:
        return sum(len(p) for p in self.parties[:party]) + index

    def context_labels(self, ctx: Sequence[int]) -> tuple[str, ...]:
        return tuple(self.parties[i][j] for i, j in enumerate(ctx))

    def context_index(self, labels: Sequence[str]) -> int:
        ctx = tuple(self.parties[i].index(lab) for i, lab in enumerate(labels))
        return self.contexts.index(ctx)

    def distribution(self, labels: Sequence[str]) -> tuple[Fraction, ...]:
        return self.table[self.context_index(labels)]

    def support(self, labels: Sequence[str]) -> list[str]:
        m = self.num_parties
        return [f"{s:0{m}b}" for s, p in enumerate(self.distribution(labels)) if p]

    def marginal(self, c: int, parties: Sequence[int]) -> dict[tuple[int, ...], Fraction]:
        m = self.num_parties
        out: dict[tuple[int, ...], Fraction] = {}
        for s, p in enumerate(self.table[c]):
            key = tuple((s >> (m - 1 - i)) & 1 for i in parties)
            out[key] = out.get(key, Fraction(0)) + p
        return out

    def format(self) -> str:
        m = self.num_parties
        lines = []
        for ctx, row in zip(self.contexts, self.table):
            probs = " ".join(f"{s:0{m}b}:{_frac_text(p)}" for s, p in enumerate(row))
            lines.append(" ".join(self.context_labels(ctx)) + " | " + probs)
        return "\n".join(lines)


def _wht(values: list[int]) -> list[int]:
    """Unnormalised Walsh-Hadamard transform: out[s] = sum_A (-1)^{|s&A|} v[A]."""
    v = list(values)
    h = 1
    while h < len(v):
        for i in range(0, len(v), 2 * h):
            for j in range(i, i + h):
                a, b = v[j], v[j + h]
                v[j], v[j + h] = a + b, a - b
        h *= 2
    return v


def empirical_model(state: ExactState, cap: int = MODEL_CAP) -> EmpiricalModel:
    """Model of local X/Y/Z measurements on every qubit of ``state``.

    The probability of outcome ``s`` in context ``(P_1..P_n)`` is the
    expectation of ``prod (I + (-1)^{s_i} P_i)/2``, expanded over subsets of
    the context and evaluated with one Walsh-Hadamard transform per context.
    """
    n = state.n
    if n > cap:
        raise SizeCapError(f"empirical models are capped at n={cap}")
    if state.is_zero():
        raise ValueError("the zero vector has no empirical model")
    norm2 = state.norm2
    pairs = state.pairs
    expect: dict[tuple[int, ...], int] = {}
    for codes in cartesian(range(4), repeat=n):
        p = PauliElement.from_codes(codes)
        moved = _apply_pairs(p, pairs)
        expect[codes] = sum(a[0] * b[0] + a[1] * b[1] for a, b in zip(pairs, moved))
    parties = tuple(tuple(f"{m}{q + 1}" for m in "xyz") for q in range(n))
    contexts = tuple(cartesian(range(3), repeat=n))
    dim = 1 << n
    table = []
    for ctx in contexts:
        sub = []
        for mask in range(dim):
            codes = tuple(
                ctx[q] + 1 if (mask >> (n - 1 - q)) & 1 else 0 for q in range(n)
            )
            sub.append(expect[codes])
        nums = _wht(sub)
        table.append(tuple(Fraction(v, dim * norm2) for v in nums))
    return EmpiricalModel(parties, contexts, tuple(table))


def xor_theory_of_model(m: EmpiricalModel) -> XorTheory:
    """Parity equations of every (sub-)context whose support has a single parity."""
    k = m.num_parties
    seen: dict[frozenset[int], int] = {}
    for c, ctx in enumerate(m.contexts):
        for mask in range(1, 1 << k):
            parties = [i for i in range(k) if (mask >> i) & 1]
            support = frozenset(m.variable(i, ctx[i]) for i in parties)
            if support in seen:
                continue
            parities = {sum(key) & 1 for key, p in m.marginal(c, parties).items() if p}
            if len(parities) == 1:
                seen[support] = parities.pop()
    eqs = tuple(XorEquation(s, r) for s, r in seen.items())
    return XorTheory(eqs, labels=m.labels)


def is_no_signalling(m: EmpiricalModel) -> bool:
    """Marginals agree wherever two contexts share measurements."""
    k = m.num_parties
    for a in range(len(m.contexts)):
        for b in range(a + 1, len(m.contexts)):
            shared = [i for i in range(k) if m.contexts[a][i] == m.contexts[b][i]]
            if shared and m.marginal(a, shared) != m.marginal(b, shared):
                return False
    return True


def is_strongly_contextual(m: EmpiricalModel, cap: int = ASSIGNMENT_CAP) -> bool:
    """True iff no global assignment lands in every context's support."""
    used = sorted({m.variable(i, j) for ctx in m.contexts for i, j in enumerate(ctx)})
    if len(used) > cap:
        raise SizeCapError(f"{len(used)} labels exceed the 2^{cap} assignment cap")
    pos = {v: i for i, v in enumerate(used)}
    assignments = np.arange(1 << len(used), dtype=np.int64)
    alive = np.ones(assignments.shape, dtype=bool)
    k = m.num_parties
    for ctx, row in zip(m.contexts, m.table):
        outcome = np.zeros_like(assignments)
        for i, j in enumerate(ctx):
            bit = (assignments >> pos[m.variable(i, j)]) & 1
            outcome |= bit << (k - 1 - i)
        supported = np.array([p > 0 for p in row])
        alive &= supported[outcome]
        if not alive.any():
            return True
    return False


# -- fixtures --------------------------------------------------------------


def ghz_state(n: int = 3) -> ExactState:
    amps = [(0, 0)] * (1 << n)
    amps[0] = amps[-1] = (1, 0)
    return ExactState.from_amplitudes(n, amps)


def pr_box() -> EmpiricalModel:
    half = Fraction(1, 2)
    even = (half, 0, 0, half)
    odd = (0, half, half, 0)
    return EmpiricalModel(
        parties=(("a1", "a2"), ("b1", "b2")),
        contexts=((0, 0), (0, 1), (1, 0), (1, 1)),
        table=(even, even, even, odd),
    )


def fixture(name: str) -> EmpiricalModel:
    """Named models: ``ghz3``, ``prbox``, ``cluster4``."""
    if name == "ghz3":
        return empirical_model(ghz_state(3))
    if name == "prbox":
        return pr_box()
    if name == "cluster4":
        from .graphstate import Graph, graph_group

        square = Graph.from_edges(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
        return empirical_model(stabiliser_state(graph_group(square)))
    raise KeyError(f"unknown fixture {name!r}; choose ghz3, prbox or cluster4")


# -- exact linear algebra and the Galois maps ----------------------------------


def _content(row: list[GaussInt]) -> int:
    return reduce(gcd, (abs(v) for p in row for v in p), 0)


def _echelon(rows: list[list[GaussInt]], ncols: int):
    """Fraction-free reduced echelon form over Z[i]; returns (rows, pivot columns)."""
    rows = [list(r) for r in rows if any(a or b for a, b in r)]
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        src = next((r for r in range(rank, len(rows)) if rows[r][col] != (0, 0)), None)
        if src is None:
            continue
        rows[rank], rows[src] = rows[src], rows[rank]
        piv = rows[rank][col]
        for t in range(len(rows)):
            if t == rank:
                continue
            a = rows[t][col]
            if a == (0, 0):
                continue
            new = [_gsub(_gmul(piv, x), _gmul(a, y)) for x, y in zip(rows[t], rows[rank])]
            g = _content(new)
            rows[t] = [(x // g, y // g) for x, y in new] if g > 1 else new
        pivots.append(col)
        rank += 1
    return rows[:rank], pivots


def _kernel(rows: list[list[GaussInt]], ncols: int) -> list[list[GaussInt]]:
    red, pivots = _echelon(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    heads = [r[c] for r, c in zip(red, pivots)]
    for f in free:
        vec: list[GaussInt] = [(0, 0)] * ncols
        vec[f] = reduce(_gmul, heads, (1, 0))
        for i, r in enumerate(red):
            others = reduce(_gmul, heads[:i] + heads[i + 1 :], (1, 0))
            prod = _gmul(r[f], others)
            vec[pivots[i]] = (-prod[0], -prod[1])
        g = _content(vec)
        basis.append([(x // g, y // g) for x, y in vec])
    return basis


def _pauli_rows(p: PauliElement) -> list[list[GaussInt]]:
    """Rows of the matrix ``p - I`` acting on amplitude vectors."""
    dim = 1 << p.n
    cols = []
    for j in range(dim):
        e = [(0, 0)] * dim
        e[j] = (1, 0)
        cols.append(_apply_pairs(p, e))
    rows = []
    for r in range(dim):
        row = [cols[j][r] for j in range(dim)]
        row[r] = (row[r][0] - 1, row[r][1])
        rows.append(row)
    return rows


def stabilised_subspace(
    elems: Iterable[PauliElement], n: int | None = None, cap: int = GALOIS_CAP
) -> list[ExactState]:
    """Basis of the common +1 eigenspace: the kernel of the stacked ``P - I``."""
    elems = list(elems)
    if n is None:
        if not elems:
            raise ValueError("an empty element set needs an explicit qubit count")
        n = elems[0].n
    if n > cap:
        raise SizeCapError(f"subspace computations are capped at n={cap}")
    rows: list[list[GaussInt]] = []
    for p in set(elems):
        if p.n != n:
            raise ValueError("elements act on different qubit counts")
        rows.extend(_pauli_rows(p))
    basis = _kernel(rows, 1 << n)
    return [ExactState.from_amplitudes(n, v).canonical() for v in basis]


def isotropy_group(
    basis: Iterable[ExactState], n: int | None = None, cap: int = GALOIS_CAP
) -> list[PauliElement]:
    """Every element of P_n (all four phases) fixing each vector of ``basis``."""
    basis = list(basis)
    if n is None:
        if not basis:
            raise ValueError("an empty basis needs an explicit qubit count")
        n = basis[0].n
    if n > cap:
        raise SizeCapError(f"isotropy scans are capped at n={cap}")
    out = []
    for codes in cartesian(range(4), repeat=n):
        word = PauliElement.from_codes(codes)
        moved = [_apply_pairs(word, v.pairs) for v in basis]
        for phase in range(4):
            ok = all(
                [_unit(phase, a) for a in mv] == v.pairs for mv, v in zip(moved, basis)
            )
            if ok:
                out.append(word.with_phase(phase))
    return out


def subspace_rank(vectors: Iterable[ExactState]) -> int:
    vectors = list(vectors)
    if not vectors:
        return 0
    return len(_echelon([v.pairs for v in vectors], 1 << vectors[0].n)[1])


def in_span(v: ExactState, basis: Sequence[ExactState]) -> bool:
    return subspace_rank(list(basis) + [v]) == subspace_rank(basis)


def subspace_contains(big: Sequence[ExactState], small: Sequence[ExactState]) -> bool:
    return all(in_span(v, big) for v in small)


# -- local Clifford unitaries ----------------------------------------------

Matrix2 = tuple[tuple[GaussInt, GaussInt], tuple[GaussInt, GaussInt]]

_PAULI_MATRICES: dict[int, Matrix2] = {
    1: (((0, 0), (1, 0)), ((1, 0), (0, 0))),
    2: (((0, 0), (0, -1)), ((0, 1), (0, 0))),
    3: (((1, 0), (0, 0)), ((0, 0), (-1, 0))),
}


def _mm(a: Matrix2, b: Matrix2) -> Matrix2:
    return tuple(
        tuple(
            (
                _gmul(a[i][0], b[0][j])[0] + _gmul(a[i][1], b[1][j])[0],
                _gmul(a[i][0], b[0][j])[1] + _gmul(a[i][1], b[1][j])[1],
            )
            for j in range(2)
        )
        for i in range(2)
    )


def _dagger(a: Matrix2) -> Matrix2:
    return tuple(tuple((a[j][i][0], -a[j][i][1]) for j in range(2)) for i in range(2))


def _reduce_matrix(a: Matrix2) -> Matrix2:
    """Strip integer content and common factors of ``1+i``."""
    entries = [a[0][0], a[0][1], a[1][0], a[1][1]]
    while all((x + y) % 2 == 0 for x, y in entries):
        entries = [((x + y) // 2, (y - x) // 2) for x, y in entries]
    g = reduce(gcd, (abs(v) for p in entries for v in p), 0)
    entries = [(x // g, y // g) for x, y in entries]
    return ((entries[0], entries[1]), (entries[2], entries[3]))


def conjugation_image(u: Matrix2, code: int) -> tuple[int, int]:
    """Signed letter ``(phase, code)`` with ``u P u^dagger`` proportional to it."""
    m = _mm(_mm(u, _PAULI_MATRICES[code]), _dagger(u))
    scale = _mm(u, _dagger(u))[0][0][0]
    for c, pm in _PAULI_MATRICES.items():
        for phase, sign in ((0, 1), (2, -1)):
            target = tuple(tuple((sign * scale * x, sign * scale * y) for x, y in row) for row in pm)
            if m == target:
                return phase, c
    raise ValueError("matrix is not a Clifford unitary")


_HADAMARD: Matrix2 = (((1, 0), (1, 0)), ((1, 0), (-1, 0)))
_S_GATE: Matrix2 = (((1, 0), (0, 0)), ((0, 0), (0, 1)))


def _clifford_table() -> dict[tuple, Matrix2]:
    """One unnormalised matrix per single-qubit Clifford action, found by BFS."""
    ident: Matrix2 = (((1, 0), (0, 0)), ((0, 0), (1, 0)))
    key = (conjugation_image(ident, 1), conjugation_image(ident, 3))
    table = {key: ident}
    queue = deque([ident])
    while queue:
        cur = queue.popleft()
        for gate in (_HADAMARD, _S_GATE):
            nxt = _reduce_matrix(_mm(gate, cur))
            k = (conjugation_image(nxt, 1), conjugation_image(nxt, 3))
            if k not in table:
                table[k] = nxt
                queue.append(nxt)
    return table


_CLIFFORDS: dict[tuple, Matrix2] | None = None


def clifford_matrix(site) -> Matrix2:
    """Unnormalised 2x2 Gaussian-integer unitary realising a frame site."""
    global _CLIFFORDS
    if _CLIFFORDS is None:
        _CLIFFORDS = _clifford_table()
    return _CLIFFORDS[tuple(site)]


def apply_frame(frame, s: ExactState) -> ExactState:
    """Apply the product of per-site Clifford matrices to ``s`` (up to scale)."""
    if frame.n != s.n:
        raise ValueError("frame and state sizes differ")
    pairs = s.pairs
    n = s.n
    for q, site in enumerate(frame.images):
        u = clifford_matrix(site)
        bit = 1 << (n - 1 - q)
        out = list(pairs)
        for i in range(len(pairs)):
            if i & bit:
                continue
            a0, a1 = pairs[i], pairs[i | bit]
            out[i] = tuple(x + y for x, y in zip(_gmul(u[0][0], a0), _gmul(u[0][1], a1)))
            out[i | bit] = tuple(x + y for x, y in zip(_gmul(u[1][0], a0), _gmul(u[1][1], a1)))
        pairs = out
    return ExactState.from_amplitudes(n, pairs)
