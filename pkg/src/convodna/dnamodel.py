"""A (6, 3, 2) convolutional model over Z4 for codon-level DNA analysis.

Bases are digitised A=0, G=1, C=2, T=3 and read as non-overlapping codon
blocks. Each block is encoded together with the block before it:

    out = (cur @ g1 + prev @ g2) mod 4

and the code distance of a block is the number of symbol mismatches
between the first three output symbols and the previous block. The CACD of
a record is the mean of that distance over the whole record (not per ORF).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Sequence

import numpy as np

from .dna import parse_dna
from .errors import DomainError, LengthError, ParseError

DIGITS = {"A": 0, "G": 1, "C": 2, "T": 3}

LIU_GENG_ROW = (1, 1, 0, 1, 1, 0)


@dataclass(frozen=True)
class ModelConfig:
    g1: tuple
    g2: tuple
    modulus: int = 4
    label: str = "custom"
    base_weights: tuple | None = None

    def __post_init__(self):
        for name in ("g1", "g2"):
            mat = tuple(tuple(int(v) for v in row) for row in getattr(self, name))
            if len(mat) != 3 or any(len(r) != 6 for r in mat):
                raise DomainError(f"{name} must be 3x6")
            if any(not 0 <= v < self.modulus for r in mat for v in r):
                raise DomainError(f"{name} entries must lie in 0..{self.modulus - 1}")
            object.__setattr__(self, name, mat)
        if self.modulus != 4:
            raise DomainError("only Z4 arithmetic is implemented")

    def equation(self, j: int) -> tuple[int, ...]:
        """Coefficients of output j over the 6-base window
        (current codon bases 1-3, then previous codon bases 1-3)."""
        return tuple(r[j] for r in self.g1) + tuple(r[j] for r in self.g2)

    def to_json(self) -> str:
        return json.dumps({"label": self.label, "g1": self.g1, "g2": self.g2, "modulus": self.modulus})

    @classmethod
    def from_json(cls, text: str) -> ModelConfig:
        try:
            raw = json.loads(text)
            return cls(raw["g1"], raw["g2"], raw.get("modulus", 4), raw.get("label", "custom"))
        except (KeyError, TypeError, json.JSONDecodeError) as exc:
            raise ParseError(f"bad model config: {exc}") from None


def default_config() -> ModelConfig:
    rows = (LIU_GENG_ROW,) * 3
    return ModelConfig(rows, rows, 4, "liu-geng")


def revised_config(weights: Sequence[int] = (2, 3, 1)) -> ModelConfig:
    """Weighted variant: base 2 outweighs base 1, which outweighs base 3.

    Each codon position scales the outputs it feeds by its weight, and the
    third output equation reads the first two bases of both codons in the
    window (coefficients 1,1,0,1,1,0) instead of nothing.
    """
    w1, w2, w3 = weights
    if not w2 > w1 > w3:
        raise DomainError(f"weights must satisfy w2 > w1 > w3, got {tuple(weights)}")
    rows = []
    for r, w in enumerate((w1, w2, w3)):
        row = [w * c for c in LIU_GENG_ROW]
        row[2] = 1 if r < 2 else 0
        rows.append(tuple(row))
    return ModelConfig(tuple(rows), tuple(rows), 4, "revised", (w1, w2, w3))


def digitize(seq: str) -> list[int]:
    try:
        return [DIGITS[c] for c in seq.upper()]
    except KeyError as exc:
        raise ParseError(f"cannot digitise base {exc.args[0]!r}") from None


def encode_block(prev: Sequence[int], cur: Sequence[int], cfg: ModelConfig | None = None) -> tuple[int, ...]:
    cfg = cfg or default_config()
    if len(prev) != 3 or len(cur) != 3:
        raise LengthError("blocks must have 3 symbols")
    out = (np.asarray(cur) @ np.asarray(cfg.g1) + np.asarray(prev) @ np.asarray(cfg.g2)) % cfg.modulus
    return tuple(int(v) for v in out)


def block_distance(out: Sequence[int], prev: Sequence[int]) -> int:
    return sum(a != b for a, b in zip(out[:3], prev))


@dataclass(frozen=True)
class CacdReport:
    record_id: str
    length: int
    gc_content: float
    cacd: float
    block_count: int


def cacd(seq: str, cfg: ModelConfig | None = None, frame: int = 0, record_id: str = "") -> CacdReport:
    cfg = cfg or default_config()
    if frame not in (0, 1, 2):
        raise DomainError("frame must be 0, 1 or 2")
    digits = digitize(seq)
    framed = digits[frame:]
    blocks = [framed[i:i + 3] for i in range(0, len(framed) - len(framed) % 3, 3)]
    if len(blocks) < 2:
        raise LengthError(f"need at least two codon blocks, got {len(seq)} bases")
    dists = [block_distance(encode_block(p, c, cfg), p) for p, c in zip(blocks, blocks[1:])]
    gc = sum(b in "GC" for b in seq.upper()) / len(seq)
    return CacdReport(record_id, len(seq), gc, sum(dists) / len(dists), len(blocks))


@dataclass(frozen=True)
class RecordError:
    record_id: str
    message: str


@dataclass
class FastaRecord:
    record_id: str
    line: int
    chunks: list = field(default_factory=list)

    @property
    def sequence(self) -> str:
        return "".join(self.chunks)


def read_fasta(lines) -> Iterator[FastaRecord]:
    record = None
    for no, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text or text.startswith(";"):
            continue
        if text.startswith(">"):
            if record is not None:
                yield record
            header = text[1:].strip()
            if not header:
                raise ParseError("empty FASTA header", no)
            record = FastaRecord(header.split()[0], no)
        elif record is None:
            raise ParseError("sequence data before the first '>' header", no)
        else:
            record.chunks.append("".join(text.split()))
    if record is not None:
        yield record


def analyze_fasta(path, cfg: ModelConfig | None = None, frame: int = 0) -> list[CacdReport | RecordError]:
    """One result per record, in file order; bad records become RecordError."""
    cfg = cfg or default_config()
    results = []
    with open(Path(path), encoding="utf-8") as fh:
        for rec in read_fasta(fh):
            try:
                seq = parse_dna(rec.sequence, line=rec.line)
                results.append(cacd(seq, cfg, frame, rec.record_id))
            except (ParseError, LengthError) as exc:
                results.append(RecordError(rec.record_id, str(exc)))
    return results


CSV_HEADER = ("record_id", "length", "gc_content", "cacd", "block_count")
