"""DNA strands and the constraint checks used to vet DNA codeword sets.

Strands are plain uppercase ``str`` over ACGT, written 5' to 3'.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from .errors import DomainError, LengthError, MissingDataError, ParseError

ALPHABET = "ACGT"
_COMPLEMENT = str.maketrans("ACGT", "TGCA")


def parse_dna(text: str, *, line: int | None = None) -> str:
    seq = "".join(text.split()).upper()
    bad = set(seq) - set(ALPHABET)
    if bad:
        raise ParseError(f"invalid base(s) {''.join(sorted(bad))} in {text.strip()!r}", line)
    return seq


def complement(x: str) -> str:
    return x.translate(_COMPLEMENT)


def reverse(x: str) -> str:
    return x[::-1]


def reverse_complement(x: str) -> str:
    return complement(reverse(x))


def hamming(x: str, y: str) -> int:
    if len(x) != len(y):
        raise LengthError(f"length mismatch: {len(x)} vs {len(y)}")
    return sum(a != b for a, b in zip(x, y))


def gc_weight(x: str) -> int:
    return sum(c in "GC" for c in x)


def correlation(x: str, y: str) -> str:
    """Overlap vector of ``y`` slid along ``x``.

    Bit i (i = 0..n-2) is 1 when the suffix x[i:] equals the prefix y[:n-i].
    The single-base overlap at shift n-1 is not reported.
    """
    if len(x) != len(y):
        raise LengthError(f"length mismatch: {len(x)} vs {len(y)}")
    n = len(x)
    return "".join("1" if x[i:] == y[:n - i] else "0" for i in range(n - 1))


def chargaff_composition(frac_a: float) -> dict[str, float]:
    if not 0.0 <= frac_a <= 0.5:
        raise DomainError(f"fraction of A must lie in [0, 0.5], got {frac_a}")
    gc = (1.0 - 2.0 * frac_a) / 2.0
    return {"A": frac_a, "T": frac_a, "C": gc, "G": gc}


@dataclass(frozen=True)
class Violation:
    subject: tuple
    value: object
    bound: object

    def describe(self) -> str:
        return "/".join(str(s) for s in self.subject)


@dataclass
class ConstraintReport:
    name: str
    violations: list[Violation] = field(default_factory=list)

    @property
    def satisfied(self) -> bool:
        return not self.violations

    def to_rows(self) -> list[tuple]:
        if self.satisfied:
            return [(self.name, "ok", "", "", "")]
        return [(self.name, "violation", v.describe(), v.value, v.bound) for v in self.violations]


@dataclass(frozen=True)
class DnaCodeSet:
    words: tuple[str, ...]
    d: int | None = None

    def __post_init__(self):
        words = tuple(sorted(self.words))
        if len(set(words)) != len(words):
            dupes = sorted({w for w in words if words.count(w) > 1})
            raise ParseError(f"duplicate codewords: {', '.join(dupes)}")
        if len({len(w) for w in words}) > 1:
            raise LengthError("codewords do not share one length")
        object.__setattr__(self, "words", words)

    @property
    def n(self) -> int:
        return len(self.words[0]) if self.words else 0

    def __iter__(self):
        return iter(self.words)

    def __len__(self):
        return len(self.words)


def read_code_set(lines: Iterable[str], d: int | None = None) -> DnaCodeSet:
    words = []
    for no, raw in enumerate(lines, start=1):
        text = raw.split("#", 1)[0].strip()
        if text:
            words.append(parse_dna(text, line=no))
    return DnaCodeSet(tuple(words), d)


def _words(code) -> tuple[str, ...]:
    return code.words if isinstance(code, DnaCodeSet) else tuple(sorted(code))


def _pair_check(name, code, d, measure, pairs) -> ConstraintReport:
    report = ConstraintReport(name)
    for x, y in pairs(_words(code)):
        value = measure(x, y)
        if value < d:
            report.violations.append(Violation((x, y), value, d))
    return report


def check_hd(code, d: int) -> ConstraintReport:
    return _pair_check("hd", code, d, hamming, lambda ws: itertools.combinations(ws, 2))


def check_reverse(code, d: int) -> ConstraintReport:
    """H(x^R, y) >= d over ordered pairs with x != y."""
    return _pair_check("reverse", code, d, lambda x, y: hamming(reverse(x), y),
                       lambda ws: itertools.permutations(ws, 2))


def check_rc(code, d: int) -> ConstraintReport:
    """H(x^R, y^C) >= d over all ordered pairs, x = y included."""
    return _pair_check("rc", code, d, lambda x, y: hamming(reverse(x), complement(y)),
                       lambda ws: itertools.product(ws, repeat=2))


def check_gc(code, w: int | None = None) -> ConstraintReport:
    words = _words(code)
    if w is None:
        w = (len(words[0]) if words else 0) // 2
    report = ConstraintReport("gc")
    for x in words:
        if gc_weight(x) != w:
            report.violations.append(Violation((x,), gc_weight(x), w))
    return report


def check_forbidden(code, motifs: Iterable[str]) -> ConstraintReport:
    report = ConstraintReport("forbidden")
    motifs = sorted(set(motifs))
    for x in _words(code):
        for motif in motifs:
            if not motif:
                continue
            for i in range(len(x) - len(motif) + 1):
                if x.startswith(motif, i):
                    report.violations.append(Violation((x, motif), i, "absent"))
    return report


def check_uncorrelated(code) -> ConstraintReport:
    report = ConstraintReport("uncorrelated")
    for x, y in itertools.permutations(_words(code), 2):
        vec = correlation(x, y)
        if "1" in vec[1:]:
            report.violations.append(Violation((x, y), vec, "no overlap at shift >= 1"))
    return report


def check_free_energy(code, energy: Mapping[str, float] | Callable[[str], float],
                      delta: float, name: str = "free-energy") -> ConstraintReport:
    """|E(x) - E(y)| <= delta for every pair. ``energy`` may be a table or a
    function, so melting temperatures plug in the same way."""
    if delta <= 0:
        raise DomainError("delta must be positive")
    words = _words(code)
    if isinstance(energy, Mapping):
        missing = [x for x in words if x not in energy]
        if missing:
            raise MissingDataError(f"no energy value for {', '.join(missing)}")
        lookup = energy.__getitem__
    else:
        lookup = energy
    values = {x: lookup(x) for x in words}
    report = ConstraintReport(name)
    for x, y in itertools.combinations(words, 2):
        gap = abs(values[x] - values[y])
        if gap > delta:
            report.violations.append(Violation((x, y), gap, delta))
    return report
