import random

import pytest
from hypothesis import given, settings, strategies as st

from convodna.analysis import tau as tau_of
from convodna.channel import apply, constrained_patterns
from convodna.convcode import build_state_diagram, encode_register, encoder_states
from convodna.decode import (STAR, TernaryWord, TruncatedViterbi, decode, exhaustive_decode,
                             is_e_ready, parse_received, viterbi_general, viterbi_k1)
from convodna.errors import ParseError, ShapeError, UnsupportedError
from convodna.gf2poly import bits_str

from .codes import code, gens
from .oracles import brute_exhaustive, brute_viterbi

CLEAN = "11,10,00,01,00,10,10"
FULL = CLEAN + ",10,00,11"


def rand_groups(rng, ticks, n):
    return [tuple(rng.randint(0, 1) for _ in range(n)) for _ in range(ticks)]


def test_parse_received():
    assert parse_received("11,10", 2) == [(1, 1), (1, 0)]
    assert parse_received(["11", "10"], 2) == [(1, 1), (1, 0)]
    with pytest.raises(ShapeError):
        parse_received("11,1", 2)
    with pytest.raises(ParseError):
        parse_received("1*,10", 2)


def test_ternary_word():
    w = TernaryWord("10*1")
    assert w == "10*1" and len(w) == 4 and w.erasures == 1
    assert w.classify("1011") == "flagged"
    assert w.classify("0011") == "wrong"
    assert TernaryWord("1011").classify([1, 0, 1]) == "correct"
    with pytest.raises(ValueError):
        TernaryWord("102")


@pytest.mark.parametrize("decoder,tau", [(exhaustive_decode, 2), (exhaustive_decode, 6),
                                         (viterbi_general, 12), (viterbi_general, 3),
                                         (viterbi_k1, 12), (viterbi_k1, 3)])
def test_clean_word(ex35, decoder, tau):
    assert decoder(ex35, CLEAN, tau) == "1010111"
    assert decoder(ex35, FULL, tau, 7) == "1010111"


def test_single_error_corrected(ex35):
    assert exhaustive_decode(ex35, "01,10,00,01,00,10,10", 3) == "1010111"
    assert viterbi_general(ex35, "11,10,00,01,00,11,10,10,00,11", 12, 7) == "1010111"


def test_e1_received_word(ex36):
    received = "10,00,10,00,01,00,10,00,10"
    assert exhaustive_decode(ex36, received, 2) == "0" * 9
    # too dense for the Viterbi window: it may flag digits but never guesses wrong
    assert viterbi_general(ex36, received, 12).classify("0" * 9) != "wrong"


def test_padding_recorded(ex35):
    assert viterbi_general(ex35, CLEAN, 12).padded_ticks == 11
    assert exhaustive_decode(ex35, CLEAN, 2).padded_ticks == 1
    assert exhaustive_decode(ex35, CLEAN, 2, digits=6).padded_ticks == 0


def test_exhaustive_limit():
    with pytest.raises(UnsupportedError):
        exhaustive_decode(code("ex36"), CLEAN, 25)
    with pytest.raises(UnsupportedError):
        exhaustive_decode(code("ex33"), "000,000", 13)


def test_viterbi_window_shorter_than_m(ex36):
    with pytest.raises(UnsupportedError):
        viterbi_general(ex36, CLEAN, 2)
    with pytest.raises(UnsupportedError):
        viterbi_k1(ex36, CLEAN, 2)


def test_viterbi_matches_brute_force(ex34):
    rng = random.Random(1)
    g = gens("ex34")
    for trial in range(120):
        tau = rng.randint(2, 5)
        ticks = rng.randint(tau, 10)
        received = rand_groups(rng, ticks, 2)
        digits = ticks - tau + 1
        want = brute_viterbi(g, 2, received, tau)
        assert str(viterbi_general(ex34, received, tau, digits)) == want
        assert str(viterbi_k1(ex34, received, tau, digits)) == want


def test_viterbi_ties_are_starred(ex34):
    received = [(1, 0), (0, 1), (1, 0), (1, 1)]
    assert viterbi_general(ex34, received, 2, 3) == "1*0"
    assert brute_viterbi(gens("ex34"), 2, received, 2) == "1*0"


def test_first_tie_policy_keeps_whole_walks(ex34):
    rng = random.Random(4)
    for _ in range(30):
        dec = TruncatedViterbi(ex34, 3, tie_policy="first")
        for g in rand_groups(rng, 9, 2):
            dec.step(g)
        assert all(STAR not in w for w in dec.state.walks.values())


def test_exhaustive_matches_brute_force():
    rng = random.Random(2)
    for name in ("ex34", "ex35", "ex36"):
        c = code(name)
        sd = build_state_diagram(c)
        for _ in range(40):
            tau = rng.randint(1, 6)
            ticks = rng.randint(1, 10)
            received = rand_groups(rng, ticks, c.n)
            assert str(exhaustive_decode(sd, received, tau, ticks)) == \
                brute_exhaustive(gens(name), c.m, received, tau, ticks)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(0, 1), min_size=2, max_size=2), min_size=3, max_size=14))
def test_k1_agrees_with_general(received):
    sd = build_state_diagram(code("ex36"))
    received = [tuple(g) for g in received]
    assert viterbi_k1(sd, received, 3) == viterbi_general(sd, received, 3)


def test_deterministic(ex36):
    rng = random.Random(8)
    received = rand_groups(rng, 20, 2)
    assert len({str(viterbi_general(ex36, received, 6)) for _ in range(3)}) == 1
    assert len({str(exhaustive_decode(ex36, received, 4)) for _ in range(3)}) == 1


@pytest.mark.parametrize("algo,tau", [("viterbi", 4), ("viterbi", 8), ("exhaustive", 2), ("exhaustive", 4)])
def test_k2_round_trip(algo, tau):
    c = code("ex33")
    rng = random.Random(6)
    for _ in range(10):
        msg = [rng.randint(0, 1) for _ in range(16)]
        sent = encode_register(c, msg, 8 + c.m + tau - 1)
        got = decode(c, sent, tau, algo, digits=8)
        assert got == bits_str(msg)


def test_decode_dispatch(ex36):
    with pytest.raises(ValueError):
        decode(ex36, CLEAN, 2, "bogus")


def test_decoder_walk_layout(ex35):
    dec = TruncatedViterbi(ex35, 5)
    for g in encode_register(ex35, "1011", 4):
        dec.step(g)
    ds = dec.state
    assert ds.distances[(1, 1, 0)] == 0
    assert ds.walks[(1, 1, 0)] == (1, 1, 0, 1, 0)


def test_e_ready_fresh_and_clean(ex36):
    dec = TruncatedViterbi(ex36, 12)
    zero = ex36_zero = build_state_diagram(ex36).zero_state
    sd = build_state_diagram(ex36)
    assert is_e_ready(dec.state, zero, 1, sd)
    for _ in range(30):
        dec.step((0, 0))
    assert is_e_ready(dec.state, ex36_zero, 1, sd)
    assert is_e_ready(dec.state, ex36_zero, 2, sd)


def test_e_ready_false_after_heavy_burst(ex36):
    sd = build_state_diagram(ex36)
    dec = TruncatedViterbi(sd, 12)
    for _ in range(10):
        dec.step((0, 0))
    for g in [(1, 1), (1, 1)]:
        dec.step(g)
    assert not is_e_ready(dec.state, sd.zero_state, 1, sd)


def test_e_ready_relative_on_codeword(ex36):
    sd = build_state_diagram(ex36)
    msg = [1, 0, 1, 1, 0, 0, 1, 1, 1, 0]
    states = encoder_states(ex36, msg, 30)
    dec = TruncatedViterbi(sd, 12)
    for t, g in enumerate(encode_register(ex36, msg, 30), start=1):
        dec.step(g)
        if t >= 12:
            assert is_e_ready(dec.state, states[t], 1, sd, relative=True)


@pytest.mark.parametrize("name,e", [("ex36", 1), ("ex34", 1), ("ex36", 2)])
def test_window_bound_guarantee(name, e):
    """Every error pattern with at most e errors in any tau(e)-tick window is corrected."""
    c = code(name)
    sd = build_state_diagram(c)
    t = tau_of(c, e)
    steps = 5 if e == 1 else 3
    ticks = steps + t - 1
    rng = random.Random(0)
    msg = [rng.randint(0, 1) for _ in range(steps)]
    sent = encode_register(c, msg, ticks)
    checked = 0
    for pattern in constrained_patterns(c.n, ticks, e, t):
        got = exhaustive_decode(sd, apply(pattern, sent), t, steps)
        assert got == bits_str(msg), pattern
        checked += 1
    assert checked > 1
