import pytest

from convodna.codon import (AMINO, ENTRIES, base_bits, classify, codon_bits, codon_index,
                            codon_to_amino, index_to_codon, split_codons, transcribe)
from convodna.errors import DomainError, ParseError


def test_transcribe():
    assert transcribe("ATG") == "AUG"
    assert transcribe("ACGT") == "ACGU"
    assert transcribe("") == ""


def test_base_bits():
    assert [base_bits(b) for b in "UGAC"] == ["00", "11", "10", "01"]
    with pytest.raises(ParseError):
        base_bits("T")


def test_classify():
    assert classify("U") == {"purine": 0, "strong": 0, "amino": 0}
    assert classify("A") == {"purine": 1, "strong": 0, "amino": 1}
    assert classify("G") == {"purine": 1, "strong": 1, "amino": 0}
    assert classify("C") == {"purine": 0, "strong": 1, "amino": 1}


def test_codon_bits():
    assert codon_bits("AUG") == "001011"
    assert codon_bits("UUU") == "000000"
    assert codon_bits("GGG") == "111111"


def test_amino():
    assert codon_to_amino("AUG") == "Met"
    assert codon_to_amino("UAA") == "Stp"
    assert codon_to_amino("CGU") == "Arg"
    assert {codon_to_amino("GG" + b) for b in "UCAG"} == {"Gly"}


def test_index_to_codon():
    assert index_to_codon("001011") == "AUG"
    assert index_to_codon(0) == "UUU"
    with pytest.raises(DomainError):
        index_to_codon(64)


def test_table_is_complete_bijection():
    assert len(ENTRIES) == 64 == len(AMINO)
    assert sorted(codon_index(c) for c in ENTRIES) == list(range(64))
    for i in range(64):
        assert codon_index(index_to_codon(i)) == i
    for c, e in ENTRIES.items():
        assert e.index == codon_index(c)
    assert sum(a == "Stp" for a in AMINO.values()) == 3
    assert len(set(AMINO.values())) == 21


def test_split_codons(caplog):
    assert split_codons("AUGGCU") == (["AUG", "GCU"], "")
    with caplog.at_level("WARNING"):
        assert split_codons("AUGGC") == (["AUG"], "GC")
    assert "trailing" in caplog.text
