"""Streaming Gaussian elimination for XOR systems over GF(2).

Rows are ``(mask, rhs)`` pairs where bit ``v`` of ``mask`` is the coefficient
of variable ``v``.  Rows are folded one at a time into an echelon basis keyed
by leading bit, so the basis never holds more than ``num_vars`` rows no
matter how many rows are streamed through it.  Every basis row remembers
which input rows were XORed into it, which turns a derived ``0 = 1`` into a
certificate naming original rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


@dataclass
class Gf2System:
    num_vars: int
    rows: list[tuple[int, int]] = field(default_factory=list)

    def add(self, variables: Iterable[int], rhs: int) -> None:
        mask = 0
        for v in variables:
            if not 0 <= v < self.num_vars:
                raise ValueError(f"variable {v} out of range")
            mask ^= 1 << v
        self.rows.append((mask, rhs & 1))


@dataclass(frozen=True)
class Gf2Result:
    """Outcome of :func:`gf2_solve`.

    ``assignment`` is set when the system is consistent, ``certificate``
    (sorted row indices whose sum is ``0 = 1``) when it is not.
    """

    consistent: bool
    assignment: tuple[int, ...] | None = None
    certificate: tuple[int, ...] | None = None


class Eliminator:
    """Incremental echelon basis with row-provenance tracking."""

    def __init__(self, num_vars: int):
        self.num_vars = num_vars
        # leading bit -> (mask, rhs, provenance bitmask over input row indices)
        self._pivots: dict[int, tuple[int, int, int]] = {}
        self.contradiction: int | None = None

    def add(self, mask: int, rhs: int, index: int) -> bool:
        """Fold row ``index`` in; return False once a contradiction is found."""
        if self.contradiction is not None:
            return False
        prov = 1 << index
        while mask:
            lead = mask.bit_length() - 1
            pivot = self._pivots.get(lead)
            if pivot is None:
                self._pivots[lead] = (mask, rhs, prov)
                return True
            mask ^= pivot[0]
            rhs ^= pivot[1]
            prov ^= pivot[2]
        if rhs:
            self.contradiction = prov
            return False
        return True

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def certificate(self) -> tuple[int, ...] | None:
        if self.contradiction is None:
            return None
        return _bits(self.contradiction)

    def solution(self) -> tuple[int, ...]:
        """One satisfying assignment, free variables set to 0."""
        if self.contradiction is not None:
            raise ValueError("system is inconsistent")
        value = 0
        for lead in sorted(self._pivots):
            mask, rhs, _ = self._pivots[lead]
            rest = mask & ~(1 << lead)
            bit = rhs ^ ((rest & value).bit_count() & 1)
            value |= bit << lead
        return tuple((value >> v) & 1 for v in range(self.num_vars))


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def gf2_solve(system: Gf2System) -> Gf2Result:
    elim = Eliminator(system.num_vars)
    for i, (mask, rhs) in enumerate(system.rows):
        if not elim.add(mask, rhs, i):
            break
    if elim.contradiction is not None:
        cert = elim.certificate()
        if not certificate_is_sound(system.rows, cert):
            raise AssertionError("elimination produced an unsound certificate")
        return Gf2Result(False, certificate=cert)
    assignment = elim.solution()
    return Gf2Result(True, assignment=assignment)


def certificate_is_sound(rows: list[tuple[int, int]], indices: Iterable[int]) -> bool:
    """True if the cited rows sum to ``0 = 1``."""
    mask = rhs = 0
    for i in indices:
        mask ^= rows[i][0]
        rhs ^= rows[i][1]
    return mask == 0 and rhs == 1


def satisfies(rows: Iterable[tuple[int, int]], assignment: tuple[int, ...]) -> bool:
    value = sum(b << v for v, b in enumerate(assignment))
    return all(((mask & value).bit_count() & 1) == rhs for mask, rhs in rows)


def rank(masks: Iterable[int]) -> int:
    elim = Eliminator(0)
    for i, m in enumerate(masks):
        elim.add(m, 0, i)
    return elim.rank
