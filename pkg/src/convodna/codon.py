"""Transcription and the 6-bit binary codon index.

Each RNA base gets two bits: purine flag, then strong-pairing flag. A codon
index concatenates the bits of its bases in the order 2nd, 1st, 3rd, so the
most informative base leads.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

from .errors import DomainError, ParseError

log = logging.getLogger(__name__)

BASE_BITS = {"U": "00", "C": "01", "A": "10", "G": "11"}
_BITS_BASE = {v: k for k, v in BASE_BITS.items()}

# codon, printed index, amino acid -- one row per codon of the published table
TABLE = """
UUU 000000 Phe  UCU 010000 Ser  UAU 100000 Tyr  UGU 110000 Cys
UUC 000001 Phe  UCC 010001 Ser  UAC 100001 Tyr  UGC 110001 Cys
UUA 000010 Leu  UCA 010010 Ser  UAA 100010 Stp  UGA 110010 Stp
UUG 000011 Leu  UCG 010011 Ser  UAG 100011 Stp  UGG 110011 Trp
CUU 000100 Leu  CCU 010100 Pro  CAU 100100 His  CGU 110100 Arg
CUC 000101 Leu  CCC 010101 Pro  CAC 100101 His  CGC 110101 Arg
CUA 000110 Leu  CCA 010110 Pro  CAA 100110 Gln  CGA 110110 Arg
CUG 000111 Leu  CCG 010111 Pro  CAG 100111 Gln  CGG 110111 Arg
AUU 001000 Ile  ACU 011000 Thr  AAU 101000 Asn  AGU 111000 Ser
AUC 001001 Ile  ACC 011001 Thr  AAC 101001 Asn  AGC 111001 Ser
AUA 001010 Ile  ACA 011010 Thr  AAA 101010 Lys  AGA 111010 Arg
AUG 001011 Met  ACG 011011 Thr  AAG 101011 Lys  AGG 111011 Arg
GUU 001100 Val  GCU 011100 Ala  GAU 101100 Asp  GGU 111100 Gly
GUC 001101 Val  GCC 011101 Ala  GAC 101101 Asp  GGC 111101 Gly
GUA 001110 Val  GCA 011110 Ala  GAA 101110 Glu  GGA 111110 Gly
GUG 001111 Val  GCG 011111 Ala  GAG 101111 Glu  GGG 111111 Gly
"""


@dataclass(frozen=True)
class CodonEntry:
    codon: str
    index: int
    amino: str

    @property
    def bits(self) -> str:
        return format(self.index, "06b")


def _load() -> dict[str, CodonEntry]:
    tokens = TABLE.split()
    rows = [tokens[i:i + 3] for i in range(0, len(tokens), 3)]
    return {c: CodonEntry(c, int(b, 2), a) for c, b, a in rows}


ENTRIES = _load()
AMINO = {c: e.amino for c, e in ENTRIES.items()}


def transcribe(dna: str) -> str:
    return dna.upper().replace("T", "U")


def _codon(c: str) -> str:
    c = c.upper()
    if len(c) != 3 or set(c) - set(BASE_BITS):
        raise ParseError(f"not an RNA codon: {c!r}")
    return c


def base_bits(base: str) -> str:
    try:
        return BASE_BITS[base.upper()]
    except KeyError:
        raise ParseError(f"not an RNA base: {base!r}") from None


def classify(base: str) -> dict[str, int]:
    """purine / strong flags are the two bits; amino = their XOR (0 means keto)."""
    bits = base_bits(base)
    purine, strong = int(bits[0]), int(bits[1])
    return {"purine": purine, "strong": strong, "amino": purine ^ strong}


def codon_index(codon: str) -> int:
    c = _codon(codon)
    return int(base_bits(c[1]) + base_bits(c[0]) + base_bits(c[2]), 2)


def codon_bits(codon: str) -> str:
    return format(codon_index(codon), "06b")


def codon_to_amino(codon: str) -> str:
    return AMINO[_codon(codon)]


def index_to_codon(index: int | str) -> str:
    if isinstance(index, str):
        index = int(index, 2)
    if not 0 <= index <= 63:
        raise DomainError(f"codon index {index} outside 0..63")
    bits = format(index, "06b")
    second, first, third = (_BITS_BASE[bits[i:i + 2]] for i in (0, 2, 4))
    return first + second + third


def split_codons(rna: str) -> tuple[list[str], str]:
    """Non-overlapping codons from offset 0 and the leftover (< 3 bases)."""
    rna = "".join(rna.split()).upper()
    cut = len(rna) - len(rna) % 3
    rest = rna[cut:]
    if rest:
        log.warning("ignoring %d trailing base(s) %r", len(rest), rest)
    return [rna[i:i + 3] for i in range(0, cut, 3)], rest
