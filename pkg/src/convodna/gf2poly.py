"""Polynomials over Z2 and their bit-sequence forms.

Coefficients are little-endian throughout: index ``i`` holds the
coefficient of ``x**i``, so the first transmitted bit is the constant term.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import LengthError, ParseError

BitSeq = tuple[int, ...]

#: Degree of the zero polynomial. Kept as -inf so that deg(p*q) = deg p + deg q
#: and ``deg <= m`` comparisons stay valid without special cases.
ZERO_DEGREE = float("-inf")


def to_bits(value: str | Iterable[int]) -> BitSeq:
    """Coerce ``"1011"`` or an iterable of 0/1 ints into a bit tuple."""
    if isinstance(value, str):
        value = value.replace(" ", "").replace(",", "")
        if set(value) - {"0", "1"}:
            raise ParseError(f"not a bit string: {value!r}")
        return tuple(int(c) for c in value)
    out = tuple(int(b) for b in value)
    if any(b not in (0, 1) for b in out):
        raise ParseError(f"not a bit sequence: {out!r}")
    return out


def bits_str(bits: Iterable[int]) -> str:
    return "".join(str(b) for b in bits)


@dataclass(frozen=True)
class BinaryPoly:
    coeffs: BitSeq = ()

    def __post_init__(self):
        c = tuple(int(b) & 1 for b in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_int(cls, mask: int) -> BinaryPoly:
        return cls(tuple((mask >> i) & 1 for i in range(mask.bit_length())))

    @classmethod
    def parse(cls, text: str) -> BinaryPoly:
        """Accept a little-endian bit string (``"101"``) or ``"1+x^2"``."""
        text = text.strip().replace(" ", "")
        if not text:
            raise ParseError("empty polynomial")
        if re.fullmatch(r"[01]+", text):
            return cls(to_bits(text))
        mask = 0
        for term in text.split("+"):
            m = re.fullmatch(r"(1|x(?:\^(\d+))?)", term)
            if not m:
                raise ParseError(f"bad polynomial term {term!r} in {text!r}")
            power = 0 if term == "1" else int(m.group(2) or 1)
            mask ^= 1 << power
        return cls.from_int(mask)

    def to_int(self) -> int:
        return sum(b << i for i, b in enumerate(self.coeffs))

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: BinaryPoly) -> BinaryPoly:
        return poly_add(self, other)

    def __mul__(self, other: BinaryPoly) -> BinaryPoly:
        return poly_mul(self, other)

    def __str__(self) -> str:
        return bits_str(self.coeffs) or "0"

    def pretty(self) -> str:
        terms = [("1" if i == 0 else "x" if i == 1 else f"x^{i}")
                 for i, b in enumerate(self.coeffs) if b]
        return "+".join(terms) or "0"


def poly_add(p: BinaryPoly, q: BinaryPoly) -> BinaryPoly:
    return BinaryPoly.from_int(p.to_int() ^ q.to_int())


def poly_mul(p: BinaryPoly, q: BinaryPoly) -> BinaryPoly:
    """Carry-less product."""
    a, b = p.to_int(), q.to_int()
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        a <<= 1
        b >>= 1
    return BinaryPoly.from_int(acc)


def poly_from_bits(bits: str | Sequence[int]) -> BinaryPoly:
    return BinaryPoly(to_bits(bits))


def poly_to_bits(p: BinaryPoly, length: int) -> BitSeq:
    if length <= p.degree:
        raise LengthError(f"{length} bits cannot hold a degree-{p.degree} polynomial")
    return p.coeffs + (0,) * (length - len(p.coeffs))
