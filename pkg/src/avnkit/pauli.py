"""Pauli n-group elements with exact Z4 phases and bit-packed check vectors.

An element is stored as two integer bitmasks ``x`` and ``z`` (bit ``q`` is
qubit ``q``) together with a phase exponent ``phase`` so that the element is
``i**phase * (P_0, ..., P_{n-1})``.  The letter at qubit ``q`` is read off
the check-vector bits: I=(0,0), X=(1,0), Y=(1,1), Z=(0,1).  Python integers
are unbounded, so there is no limit on ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

LETTERS = "IXYZ"

# (x, z) bits of each letter
_LETTER_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}

_PHASE_PREFIX = {0: "", 1: "i", 2: "-", 3: "-i"}


def _popcount(v: int) -> int:
    return v.bit_count()


def letter_code(x: int, z: int) -> int:
    """Index of the letter with check bits ``(x, z)`` under I < X < Y < Z."""
    if x:
        return 2 if z else 1
    return 3 if z else 0


_CODE_BITS = [(0, 0), (1, 0), (1, 1), (0, 1)]


@dataclass(frozen=True)
class CheckVector:
    """The 2n-bit symplectic encoding ``(x | z)`` of a Pauli word."""

    n: int
    x: int
    z: int

    def bits(self) -> tuple[int, ...]:
        """Flat bit tuple ``(x_1, ..., x_n, z_1, ..., z_n)``."""
        xs = tuple((self.x >> q) & 1 for q in range(self.n))
        zs = tuple((self.z >> q) & 1 for q in range(self.n))
        return xs + zs

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "CheckVector":
        if len(bits) % 2:
            raise ValueError("check vector needs an even number of bits")
        n = len(bits) // 2
        x = sum(int(b) << q for q, b in enumerate(bits[:n]))
        z = sum(int(b) << q for q, b in enumerate(bits[n:]))
        return cls(n, x, z)


@dataclass(frozen=True)
class PauliElement:
    """An element ``i**phase * (P_0, ..., P_{n-1})`` of the Pauli n-group."""

    n: int
    x: int
    z: int
    phase: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("Pauli elements need at least one qubit")
        full = (1 << self.n) - 1
        if self.x & ~full or self.z & ~full:
            raise ValueError("check bits outside the qubit range")
        object.__setattr__(self, "phase", self.phase % 4)

    @classmethod
    def from_letters(cls, letters: Iterable[str], phase: int = 0) -> "PauliElement":
        x = z = 0
        n = 0
        for q, ch in enumerate(letters):
            try:
                bx, bz = _LETTER_BITS[ch.upper()]
            except KeyError:
                raise ValueError(f"not a Pauli letter: {ch!r}") from None
            x |= bx << q
            z |= bz << q
            n = q + 1
        return cls(n, x, z, phase)

    @classmethod
    def from_codes(cls, codes: Sequence[int], phase: int = 0) -> "PauliElement":
        x = z = 0
        for q, c in enumerate(codes):
            bx, bz = _CODE_BITS[c]
            x |= bx << q
            z |= bz << q
        return cls(len(codes), x, z, phase)

    @classmethod
    def identity(cls, n: int) -> "PauliElement":
        return cls(n, 0, 0, 0)

    @classmethod
    def parse(cls, text: str) -> "PauliElement":
        """Parse ``"-XYY"``, ``"+ZZ"``, ``"iX"``, ``"-iZ"`` or lowercase forms.

        A leading lowercase ``i`` followed by more letters is read as the
        phase ``i``; write the identity letter as uppercase ``I`` there.
        """
        s = text.strip()
        phase = 0
        if s and s[0] in "+-":
            phase = 2 if s[0] == "-" else 0
            s = s[1:]
        if len(s) > 1 and s[0] == "i":
            phase += 1
            s = s[1:]
        if not s:
            raise ValueError(f"empty Pauli word in {text!r}")
        return cls.from_letters(s, phase)

    # -- views -----------------------------------------------------------

    @property
    def letters(self) -> str:
        return "".join(LETTERS[c] for c in self.codes)

    @property
    def codes(self) -> tuple[int, ...]:
        return tuple(
            letter_code((self.x >> q) & 1, (self.z >> q) & 1) for q in range(self.n)
        )

    def letter(self, q: int) -> str:
        return LETTERS[letter_code((self.x >> q) & 1, (self.z >> q) & 1)]

    @property
    def support(self) -> int:
        """Bitmask of qubits carrying a non-identity letter."""
        return self.x | self.z

    @property
    def weight(self) -> int:
        return _popcount(self.support)

    def has_real_phase(self) -> bool:
        return self.phase in (0, 2)

    @property
    def sign_bit(self) -> int:
        """``a`` with global phase ``(-1)**a``; only defined for real phases."""
        if self.phase not in (0, 2):
            raise ValueError(f"{self} has an imaginary phase")
        return self.phase // 2

    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    def sort_key(self) -> tuple:
        """Canonical order: letters under I<X<Y<Z, then phase exponent."""
        return (self.codes, self.phase)

    def check_vector(self) -> CheckVector:
        return CheckVector(self.n, self.x, self.z)

    def with_phase(self, phase: int) -> "PauliElement":
        return PauliElement(self.n, self.x, self.z, phase)

    def restrict(self, qubits: Sequence[int]) -> "PauliElement":
        """Letters at the given qubits, in that order, keeping the phase."""
        x = z = 0
        for k, q in enumerate(qubits):
            x |= ((self.x >> q) & 1) << k
            z |= ((self.z >> q) & 1) << k
        return PauliElement(len(qubits), x, z, self.phase)

    def __mul__(self, other: "PauliElement") -> "PauliElement":
        return mul(self, other)

    def __neg__(self) -> "PauliElement":
        return self.with_phase(self.phase + 2)

    def __str__(self) -> str:
        return _PHASE_PREFIX[self.phase] + self.letters

    def __repr__(self) -> str:
        return f"PauliElement({str(self)!r})"


def _check_lengths(p: PauliElement | CheckVector, q: PauliElement | CheckVector):
    if p.n != q.n:
        raise ValueError(f"length mismatch: {p.n} vs {q.n} qubits")


def mul(p: PauliElement, q: PauliElement) -> PauliElement:
    """Group product ``p * q`` with exact phase bookkeeping.

    Writing each letter as ``i**(x z) X**x Z**z``, moving ``Z**z1`` past
    ``X**x2`` costs ``(-1)**(z1 x2)``.
    """
    _check_lengths(p, q)
    rx = p.x ^ q.x
    rz = p.z ^ q.z
    phase = (
        p.phase
        + q.phase
        + _popcount(p.x & p.z)
        + _popcount(q.x & q.z)
        + 2 * _popcount(p.z & q.x)
        - _popcount(rx & rz)
    )
    return PauliElement(p.n, rx, rz, phase)


def product(elements: Iterable[PauliElement], n: int | None = None) -> PauliElement:
    acc = None
    for el in elements:
        acc = el if acc is None else mul(acc, el)
    if acc is None:
        if n is None:
            raise ValueError("empty product needs an explicit qubit count")
        return PauliElement.identity(n)
    return acc


def commutes(p: PauliElement, q: PauliElement) -> bool:
    _check_lengths(p, q)
    return symplectic_product(p.check_vector(), q.check_vector()) == 0


def symplectic_product(r: CheckVector, s: CheckVector) -> int:
    _check_lengths(r, s)
    return (_popcount(r.x & s.z) + _popcount(s.x & r.z)) & 1


def to_check_vector(p: PauliElement) -> CheckVector:
    return p.check_vector()


def from_check_vector(r: CheckVector, phase: int = 0) -> PauliElement:
    return PauliElement(r.n, r.x, r.z, phase)


def parse_word_list(text: str) -> list[PauliElement]:
    """Parse a comma-separated list of signed words such as ``"XXX,ZZI,IZZ"``."""
    words = [w for w in (t.strip() for t in text.split(",")) if w]
    elems = [PauliElement.parse(w) for w in words]
    if elems and len({e.n for e in elems}) != 1:
        raise ValueError("all words must have the same length")
    return elems


def format_word_list(elements: Iterable[PauliElement]) -> str:
    return ",".join(str(e) for e in elements)


def all_words(n: int) -> Iterable[PauliElement]:
    """Every phase-free word of length ``n`` in canonical order."""
    from itertools import product as cartesian

    for codes in cartesian(range(4), repeat=n):
        yield PauliElement.from_codes(codes)
