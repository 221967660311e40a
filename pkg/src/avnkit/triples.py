"""AvN triples: predicates, counting, and exhaustive enumeration.

A triple ``<e, f, g>`` is read column by column.  Every column must repeat at
least one letter (condition 1).  Columns where exactly one slot deviates from
the other two, with all three letters non-identity, are *active*; they are
counted as ``n_e`` (``e != f = g``), ``n_f`` (``e = g != f``) and ``n_g``
(``e = f != g``).  A triple is AvN when all three counts are odd.

Counts reported by :func:`enumerate_triples` and :func:`count_structured`
default to unordered triples (one representative ``e < f < g`` per set), which
is ``1/6`` of the ordered count since permuting the slots permutes the three
counts and the three words are always pairwise distinct.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product as cartesian
from math import comb
from typing import Iterator, NamedTuple

import numpy as np

from .pauli import PauliElement, commutes, mul
from .subgroup import SizeCapError, _pattern_masks

ENUMERATION_CAP = 6
BRUTE_FORCE_CAP = 4


class PatternError(ValueError):
    """A column holds three pairwise-distinct letters."""


class PatternCounts(NamedTuple):
    n_e: int
    n_f: int
    n_g: int

    def all_odd(self) -> bool:
        return bool(self.n_e & self.n_f & self.n_g & 1)


@dataclass(frozen=True)
class AvnTriple:
    e: PauliElement
    f: PauliElement
    g: PauliElement

    def __post_init__(self):
        if not self.e.n == self.f.n == self.g.n:
            raise ValueError("triple elements must have equal length")

    @property
    def n(self) -> int:
        return self.e.n

    def __iter__(self):
        return iter((self.e, self.f, self.g))

    def is_valid(self) -> bool:
        return is_avn_triple_def2(self.e, self.f, self.g)

    def counts(self) -> PatternCounts:
        return pattern_counts(self.e, self.f, self.g)

    def format(self) -> str:
        return f"{self.e} | {self.f} | {self.g}"

    def record(self) -> dict:
        c = self.counts()
        return {
            "n": self.n,
            "e": str(self.e),
            "f": str(self.f),
            "g": str(self.g),
            "ne": c.n_e,
            "nf": c.n_f,
            "ng": c.n_g,
        }

    def to_json(self) -> str:
        return json.dumps(self.record(), separators=(",", ":"))

    def sort_key(self) -> tuple:
        return (self.e.codes, self.f.codes, self.g.codes, self.e.phase, self.f.phase, self.g.phase)

    @classmethod
    def parse(cls, text: str) -> "AvnTriple":
        parts = [p.strip() for p in text.split("|")]
        if len(parts) != 3:
            raise ValueError(f"expected 'e | f | g', got {text!r}")
        return cls(*(PauliElement.parse(p) for p in parts))


def _same_length(e, f, g):
    if not e.n == f.n == g.n:
        raise ValueError("triple elements must have equal length")


def _masks(e, f, g):
    full = (1 << e.n) - 1
    return _pattern_masks(e.x, e.z, f.x, f.z, g.x, g.z, full), full


def satisfies_condition1(e: PauliElement, f: PauliElement, g: PauliElement) -> bool:
    _same_length(e, f, g)
    (cond1, *_), full = _masks(e, f, g)
    return cond1 == full


def pattern_counts(e: PauliElement, f: PauliElement, g: PauliElement) -> PatternCounts:
    _same_length(e, f, g)
    (cond1, de, df, dg), full = _masks(e, f, g)
    if cond1 != full:
        bad = (full & ~cond1).bit_length() - 1
        raise PatternError(
            f"column {bad} holds three distinct letters "
            f"{e.letter(bad)}{f.letter(bad)}{g.letter(bad)}"
        )
    return PatternCounts(de.bit_count(), df.bit_count(), dg.bit_count())


def is_avn_triple_def1(e: PauliElement, f: PauliElement, g: PauliElement) -> bool:
    """Pairwise commuting, condition 1, and an odd ``n_f``."""
    _same_length(e, f, g)
    if not all(p.has_real_phase() for p in (e, f, g)):
        return False
    if not (commutes(e, f) and commutes(f, g) and commutes(e, g)):
        return False
    if not satisfies_condition1(e, f, g):
        return False
    return pattern_counts(e, f, g).n_f % 2 == 1


def is_avn_triple_def2(e: PauliElement, f: PauliElement, g: PauliElement) -> bool:
    """Condition 1 and all three deviation counts odd; commutation is implied."""
    _same_length(e, f, g)
    if not all(p.has_real_phase() for p in (e, f, g)):
        return False
    (cond1, de, df, dg), full = _masks(e, f, g)
    if cond1 != full:
        return False
    return bool(de.bit_count() & df.bit_count() & dg.bit_count() & 1)


def certificate_elements(t: AvnTriple) -> tuple[PauliElement, ...]:
    """``e, f, g, efg``: their four XOR equations sum to ``0 = 1``."""
    return (t.e, t.f, t.g, mul(mul(t.e, t.f), t.g))


def reduce_to_three(t: AvnTriple) -> tuple[tuple[int, int, int], AvnTriple]:
    """Restrict a valid triple to one active column of each pattern.

    Picks the first column of each of the patterns ``e=f!=g``, ``e!=f=g``
    and ``e=g!=f``; the returned indices are sorted and the restricted
    triple keeps the original column order and signs.
    """
    if not t.is_valid():
        raise ValueError(f"not an AvN triple: {t.format()}")
    (_, de, df, dg), _ = _masks(t.e, t.f, t.g)

    def lowest(mask: int) -> int:
        return (mask & -mask).bit_length() - 1

    cols = tuple(sorted((lowest(dg), lowest(de), lowest(df))))
    return cols, AvnTriple(*(p.restrict(cols) for p in t))


# -- counting ------------------------------------------------------------


def count_formula(n: int) -> int:
    """Closed-form sum over odd numbers ``2k+1`` of active columns, times 8 for signs.

    The sum weights each size by the number of odd compositions
    ``comb(k+1, k-1)`` only, without the multinomial placement of the three
    patterns; it agrees with exhaustive counts at n=3 and n=4 and falls
    below them from n=5 on (see :func:`count_structured`).
    """
    if n < 3:
        raise ValueError("counting needs n >= 3")
    top = (n + n % 2) // 2 - 1
    total = sum(
        comb(n, 2 * k + 1) * comb(k + 1, k - 1) * 6 ** (2 * k + 1) * 22 ** (n - 2 * k - 1)
        for k in range(1, top + 1)
    )
    return 8 * total


def _column_patterns() -> list[tuple[int, int, int, int]]:
    """All 40 condition-1 columns as (e, f, g, parity bits) with bits e=1, f=2, g=4."""
    out = []
    for a, b, c in cartesian(range(4), repeat=3):
        if a != b and b != c and a != c:
            continue
        bits = 0
        if a == b != c and a and c:
            bits |= 4
        if b == c != a and a and b:
            bits |= 1
        if a == c != b and a and b:
            bits |= 2
        out.append((a, b, c, bits))
    return out


COLUMNS = _column_patterns()


def count_structured(n: int, include_phases: bool = False, ordered: bool = False) -> int:
    """Exact triple count by dynamic programming over column patterns.

    Tracks the parity vector of ``(n_e, n_f, n_g)`` column by column; the
    count is the number of length-``n`` column sequences ending at all-odd.
    """
    if n < 1:
        raise ValueError("n must be positive")
    states = [0] * 8
    states[0] = 1
    for _ in range(n):
        nxt = [0] * 8
        for p, c in enumerate(states):
            if c:
                for *_, bits in COLUMNS:
                    nxt[p ^ bits] += c
        states = nxt
    total = states[7]
    if not ordered:
        total //= 6
    if include_phases:
        total *= 8
    return total


# -- word tables ---------------------------------------------------------


def _word_table(n: int) -> list[tuple[int, ...]]:
    return list(cartesian(range(4), repeat=n))


def _word_bits(n: int):
    words = _word_table(n)
    xs = np.zeros(len(words), dtype=np.uint64)
    zs = np.zeros(len(words), dtype=np.uint64)
    for w, codes in enumerate(words):
        p = PauliElement.from_codes(codes)
        xs[w] = p.x
        zs[w] = p.z
    return words, xs, zs


def _valid_matrix(ex, ez, xs, zs, full):
    fx, fz = xs[:, None], zs[:, None]
    gx, gz = xs[None, :], zs[None, :]
    cond1, de, df, dg = _pattern_masks(ex, ez, fx, fz, gx, gz, full)
    odd = np.bitwise_count(de) & np.bitwise_count(df) & np.bitwise_count(dg) & 1
    return (cond1 == full) & odd.astype(bool)


def brute_force_triples(
    n: int, ordered: bool = False, cap: int = BRUTE_FORCE_CAP
) -> Iterator[AvnTriple]:
    """Phase-free triples found by testing every triple of words (numpy-vectorised)."""
    if n > cap:
        raise SizeCapError(f"brute force is capped at n={cap}")
    words, xs, zs = _word_bits(n)
    elems = [PauliElement.from_codes(c) for c in words]
    full = np.uint64((1 << n) - 1)
    size = len(words)
    for a in range(size):
        ok = _valid_matrix(xs[a], zs[a], xs, zs, full)
        if not ordered:
            ok = np.triu(ok, 1)
            ok[: a + 1, :] = False
        for b, c in zip(*np.nonzero(ok)):
            yield AvnTriple(elems[a], elems[b], elems[c])


def count_brute(n: int, ordered: bool = False, cap: int = BRUTE_FORCE_CAP) -> int:
    if n > cap:
        raise SizeCapError(f"brute force is capped at n={cap}")
    _, xs, zs = _word_bits(n)
    full = np.uint64((1 << n) - 1)
    total = 0
    for a in range(len(xs)):
        ok = _valid_matrix(xs[a], zs[a], xs, zs, full)
        if not ordered:
            ok = np.triu(ok, 1)
            ok[: a + 1, :] = False
        total += int(ok.sum())
    return total


# -- structured enumeration ------------------------------------------------


def _g_options(ea: int, fb: int) -> list[tuple[int, int]]:
    """Allowed g letters for a column ``(e, f)`` with their parity bits, ascending."""
    opts = []
    for c in range(4):
        if ea == fb:
            bits = 4 if (c != ea and ea and c) else 0
        elif c == ea:
            bits = 2 if (ea and fb) else 0
        elif c == fb:
            bits = 1 if (ea and fb) else 0
        else:
            continue
        opts.append((c, bits))
    return opts


_OPTIONS = {(a, b): _g_options(a, b) for a in range(4) for b in range(4)}


def _shift_set(reach: int, bits: int) -> int:
    out = 0
    for p in range(8):
        if (reach >> p) & 1:
            out |= 1 << (p ^ bits)
    return out


_SHIFT = [[_shift_set(r, b) for b in range(8)] for r in range(256)]


def _g_words(e: tuple[int, ...], f: tuple[int, ...], above_f: bool) -> Iterator[int]:
    """Indices of every g (ascending) completing ``<e, f, g>`` to an AvN triple."""
    n = len(e)
    cols = [_OPTIONS[(e[i], f[i])] for i in range(n)]
    # reach[i]: parity vectors achievable by columns i..n-1
    reach = [0] * (n + 1)
    reach[n] = 1
    for i in range(n - 1, -1, -1):
        r = 0
        for _, bits in cols[i]:
            r |= _SHIFT[reach[i + 1]][bits]
        reach[i] = r
    if not (reach[0] >> 7) & 1:
        return

    def walk(i: int, parity: int, index: int, tight: bool):
        if i == n:
            if not tight:
                yield index
            return
        need = reach[i + 1]
        for c, bits in cols[i]:
            if tight and c < f[i]:
                continue
            if not (need >> (7 ^ parity ^ bits)) & 1:
                continue
            yield from walk(i + 1, parity ^ bits, index * 4 + c, tight and c == f[i])

    yield from walk(0, 0, 0, above_f)


def enumerate_triples(
    n: int,
    include_phases: bool = False,
    ordered: bool = False,
    cap: int = ENUMERATION_CAP,
) -> Iterator[AvnTriple]:
    """Every AvN triple in canonical order ``(e, f, g)`` letters, then signs.

    By default one representative ``e < f < g`` is produced per unordered
    triple; ``ordered=True`` yields all six slot orders.  With
    ``include_phases`` each triple appears with all eight sign choices.
    """
    if n < 3:
        raise ValueError("AvN triples need n >= 3")
    if n > cap:
        raise SizeCapError(f"enumeration is capped at n={cap}")
    words = _word_table(n)
    elems = [PauliElement.from_codes(c) for c in words]
    signs = [(0, 0, 0)]
    if include_phases:
        signs = list(cartesian((0, 2), repeat=3))
    size = len(words)
    for a in range(size):
        e = words[a]
        for b in range(0 if ordered else a + 1, size):
            f = words[b]
            for c in _g_words(e, f, above_f=not ordered):
                if include_phases:
                    for pe, pf, pg in signs:
                        yield AvnTriple(
                            elems[a].with_phase(pe),
                            elems[b].with_phase(pf),
                            elems[c].with_phase(pg),
                        )
                else:
                    yield AvnTriple(elems[a], elems[b], elems[c])
