"""Stabiliser subgroups, their XOR theories, and AvN decisions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .gf2 import Eliminator, Gf2System, certificate_is_sound, rank
from .pauli import PauliElement, commutes, mul, parse_word_list

ELEMENT_CAP = 24
TRIPLE_SEARCH_CAP = 12


class SizeCapError(ValueError):
    """Raised when a request exceeds a configured size cap."""


@dataclass(frozen=True)
class StabiliserGroup:
    """Group generated by independent, commuting, real-phase Pauli elements.

    Independent check vectors already rule out ``-I``: any non-empty product
    of generators has a non-zero check vector, so it cannot be ``+-I``.
    """

    n: int
    generators: tuple[PauliElement, ...] = ()

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        for g in gens:
            if g.n != self.n:
                raise ValueError(f"generator {g} does not act on {self.n} qubits")
            if not g.has_real_phase():
                raise ValueError(f"generator {g} has an imaginary phase")
        for i, a in enumerate(gens):
            for b in gens[i + 1 :]:
                if not commutes(a, b):
                    raise ValueError(f"generators {a} and {b} anticommute")
        masks = [g.x | (g.z << self.n) for g in gens]
        if rank(masks) != len(gens):
            raise ValueError("generators are not independent")

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "StabiliserGroup":
        gens = parse_word_list(text)
        if not gens:
            if n is None:
                raise ValueError("empty generator list needs an explicit qubit count")
            return cls(n, ())
        return cls(gens[0].n, tuple(gens))

    @property
    def k(self) -> int:
        return len(self.generators)

    @property
    def is_maximal(self) -> bool:
        return self.k == self.n

    def __str__(self) -> str:
        return ",".join(str(g) for g in self.generators)

    def contains(self, p: PauliElement) -> bool:
        """Membership test by solving for the generator combination."""
        return decompose(self, p) is not None


def decompose(s: StabiliserGroup, p: PauliElement) -> int | None:
    """Bitmask of generators whose product is ``p``, or None if ``p`` is not in ``s``."""
    if p.n != s.n:
        return None
    n = s.n
    basis = [g.x | (g.z << n) for g in s.generators]
    # rhs 1 marks the target row, so reducing it to zero surfaces its combination
    target = p.x | (p.z << n)
    sub = Eliminator(2 * n)
    for i, m in enumerate(basis):
        sub.add(m, 0, i)
    sub.add(target, 1, s.k)
    if sub.contradiction is None:
        return None
    combo = sub.contradiction & ~(1 << s.k)
    return combo if _element(s, combo) == p else None


def _element(s: StabiliserGroup, mask: int) -> PauliElement:
    acc = PauliElement.identity(s.n)
    for i, g in enumerate(s.generators):
        if (mask >> i) & 1:
            acc = mul(acc, g)
    return acc


def _check_cap(s: StabiliserGroup, cap: int) -> None:
    if s.k > cap:
        raise SizeCapError(f"group has 2^{s.k} elements, above the cap 2^{cap}")


def elements(s: StabiliserGroup, cap: int = ELEMENT_CAP) -> Iterator[PauliElement]:
    """All ``2**k`` elements; element ``m`` is the product of generators in bitmask ``m``."""
    _check_cap(s, cap)
    cache = [PauliElement.identity(s.n)]
    yield cache[0]
    for m in range(1, 1 << s.k):
        top = m.bit_length() - 1
        el = mul(cache[m ^ (1 << top)], s.generators[top])
        cache.append(el)
        yield el


@dataclass(frozen=True)
class XorEquation:
    support: frozenset[int]
    rhs: int

    @property
    def mask(self) -> int:
        m = 0
        for v in self.support:
            m |= 1 << v
        return m

    def format(self, labels: Sequence[str]) -> str:
        lhs = "+".join(labels[v] for v in sorted(self.support)) or "0"
        return f"{lhs} = {self.rhs}"


def variable_id(qubit: int, letter: str) -> int:
    """Variable of measuring ``letter`` at ``qubit``: ``3*qubit + {X:0, Y:1, Z:2}``."""
    return 3 * qubit + "XYZ".index(letter)


def qubit_labels(n: int) -> tuple[str, ...]:
    return tuple(f"{m}{q + 1}" for q in range(n) for m in "xyz")


def equation_of(p: PauliElement) -> XorEquation:
    support = frozenset(
        variable_id(q, p.letter(q)) for q in range(p.n) if p.letter(q) != "I"
    )
    return XorEquation(support, p.sign_bit)


@dataclass(frozen=True)
class XorTheory:
    equations: tuple[XorEquation, ...]
    num_qubits: int | None = None
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not self.labels:
            if self.num_qubits is None:
                raise ValueError("an XOR theory needs qubits or labels")
            object.__setattr__(self, "labels", qubit_labels(self.num_qubits))

    @property
    def num_vars(self) -> int:
        return len(self.labels)

    def system(self) -> Gf2System:
        sys = Gf2System(self.num_vars)
        sys.rows = [(eq.mask, eq.rhs) for eq in self.equations]
        return sys

    def format(self) -> str:
        return "\n".join(eq.format(self.labels) for eq in self.equations)

    def __len__(self) -> int:
        return len(self.equations)


def xor_theory(s: StabiliserGroup, cap: int = ELEMENT_CAP) -> XorTheory:
    eqs = tuple(equation_of(p) for p in elements(s, cap) if not p.is_identity())
    return XorTheory(eqs, s.n)


@dataclass(frozen=True)
class AvnVerdict:
    """Result of :func:`is_avn`.

    ``certificate`` lists group elements whose equations sum to ``0 = 1``;
    ``assignment`` is a global outcome assignment when the theory is consistent.
    """

    avn: bool
    certificate: tuple[PauliElement, ...] = ()
    assignment: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.avn


def is_avn(s: StabiliserGroup, cap: int = ELEMENT_CAP) -> AvnVerdict:
    """Decide whether the XOR theory of ``s`` is inconsistent.

    Equations are streamed through the eliminator in element order, so the
    memory footprint stays at O(n) basis rows even for 2^k equations.
    """
    elim = Eliminator(3 * s.n)
    kept: dict[int, PauliElement] = {}
    for idx, p in enumerate(elements(s, cap)):
        if idx == 0:
            continue
        eq = equation_of(p)
        kept[idx] = p
        if not elim.add(eq.mask, eq.rhs, idx):
            break
    if elim.contradiction is None:
        return AvnVerdict(False, assignment=elim.solution())
    cert = tuple(kept[i] for i in elim.certificate())
    rows = [(equation_of(p).mask, equation_of(p).rhs) for p in cert]
    if not certificate_is_sound(rows, range(len(rows))):
        raise AssertionError("unsound AvN certificate")
    return AvnVerdict(True, certificate=cert)


def stabiliser_dimension(s: StabiliserGroup) -> int:
    return 1 << (s.n - s.k)


# -- triple search -------------------------------------------------------


def _pattern_masks(ex, ez, fx, fz, gx, gz, full):
    """Per-column masks for condition 1 and the three deviation patterns.

    Works on Python ints and on numpy uint64 arrays alike.
    """
    eq_ef = ~((ex ^ fx) | (ez ^ fz)) & full
    eq_fg = ~((fx ^ gx) | (fz ^ gz)) & full
    eq_eg = ~((ex ^ gx) | (ez ^ gz)) & full
    cond1 = eq_ef | eq_fg | eq_eg
    nz_e = ex | ez
    nz_f = fx | fz
    nz_g = gx | gz
    dev_g = eq_ef & ~eq_eg & nz_e & nz_g & full
    dev_e = eq_fg & ~eq_ef & nz_e & nz_f & full
    dev_f = eq_eg & ~eq_ef & nz_e & nz_f & full
    return cond1, dev_e, dev_f, dev_g


def find_avn_triple(s: StabiliserGroup, cap: int = TRIPLE_SEARCH_CAP):
    """Smallest AvN triple ``e < f < g`` among the elements of ``s``, or None.

    Validity is symmetric in the three slots, so the lexicographically
    smallest ordered triple is always sorted and scanning ``i < j < l`` over
    canonically sorted elements finds it first.
    """
    from .triples import AvnTriple

    _check_cap(s, cap)
    elems = sorted(elements(s, cap), key=PauliElement.sort_key)
    n = s.n
    if n > 64:
        return _find_triple_python(elems, n)
    full = np.uint64((1 << n) - 1) if n < 64 else np.uint64(2**64 - 1)
    xs = np.array([p.x for p in elems], dtype=np.uint64)
    zs = np.array([p.z for p in elems], dtype=np.uint64)
    count = len(elems)
    for i in range(count):
        ex, ez = xs[i], zs[i]
        for j in range(i + 1, count - 1):
            gx, gz = xs[j + 1 :], zs[j + 1 :]
            cond1, de, df, dg = _pattern_masks(ex, ez, xs[j], zs[j], gx, gz, full)
            ok = (
                (cond1 == full)
                & (np.bitwise_count(de) & 1).astype(bool)
                & (np.bitwise_count(df) & 1).astype(bool)
                & (np.bitwise_count(dg) & 1).astype(bool)
            )
            hits = np.flatnonzero(ok)
            if hits.size:
                return AvnTriple(elems[i], elems[j], elems[j + 1 + int(hits[0])])
    return None


def _find_triple_python(elems, n):
    from .triples import AvnTriple, is_avn_triple_def2

    for i, e in enumerate(elems):
        for j in range(i + 1, len(elems)):
            for l in range(j + 1, len(elems)):
                if is_avn_triple_def2(e, elems[j], elems[l]):
                    return AvnTriple(e, elems[j], elems[l])
    return None
