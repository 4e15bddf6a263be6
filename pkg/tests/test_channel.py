import math
import random

import numpy as np
import pytest

from convodna.channel import (GENERATOR, ChannelConfig, apply, constrained_patterns, gen_pattern,
                              guard_space_study, make_rng, run_experiment, transmit, window_weights)
from convodna.errors import DomainError, ShapeError

from .codes import code


def test_zero_mask_is_identity():
    word = [(1, 0), (0, 1), (1, 1)]
    assert apply([(0, 0)] * 3, word) == word
    assert apply([], word) == word


def test_apply_involution():
    rng = random.Random(0)
    for _ in range(50):
        w = [tuple(rng.randint(0, 1) for _ in range(3)) for _ in range(10)]
        p = [tuple(rng.randint(0, 1) for _ in range(3)) for _ in range(10)]
        assert apply(p, apply(p, w)) == w


def test_apply_shape_errors():
    with pytest.raises(ShapeError):
        apply([(1, 0, 0)], [(0, 0)])
    with pytest.raises(ShapeError):
        apply([(1, 0)] * 3, [(0, 0)] * 2)


def test_e1_over_zero_codeword():
    e1 = [(1, 0)] + [(0, 0)] * 7
    assert apply(e1, [(0, 0)] * 8) == e1


def test_config_validation():
    with pytest.raises(DomainError):
        ChannelConfig("bsc", p=1.5)
    with pytest.raises(DomainError):
        ChannelConfig("noise")
    with pytest.raises(DomainError):
        ChannelConfig("burst-guard", guard_len=-1)


def test_p_zero_mask():
    assert gen_pattern(ChannelConfig("bsc", p=0.0), 50, 3) == [(0, 0, 0)] * 50


def test_explicit_mask_passthrough():
    cfg = ChannelConfig("explicit", mask=((1, 0), (0, 1)))
    assert gen_pattern(cfg, 4, 2) == [(1, 0), (0, 1), (0, 0), (0, 0)]


def test_burst_guard_window():
    cfg = ChannelConfig("burst-guard", burst_weight=1, burst_len=1, guard_len=1, seed=3)
    pattern = gen_pattern(cfg, 18, 2)
    assert max(window_weights(pattern, 2)) <= 1
    assert sum(map(sum, pattern)) == 9


def test_burst_guard_exact_weight():
    cfg = ChannelConfig("burst-guard", burst_weight=2, burst_len=3, guard_len=4, seed=1)
    pattern = gen_pattern(cfg, 70, 2)
    for start in range(0, 70, 7):
        assert sum(map(sum, pattern[start:start + 3])) == 2
        assert sum(map(sum, pattern[start + 3:start + 7])) == 0


def test_seed_determinism():
    cfg = ChannelConfig("bsc", p=0.1, seed=42)
    assert gen_pattern(cfg, 100, 2) == gen_pattern(cfg, 100, 2)
    assert gen_pattern(cfg, 100, 2) != gen_pattern(ChannelConfig("bsc", p=0.1, seed=43), 100, 2)
    assert GENERATOR == "numpy.PCG64"
    assert make_rng(5).integers(0, 2**32) == np.random.Generator(np.random.PCG64(5)).integers(0, 2**32)


def test_bsc_flip_rate():
    p, ticks, n = 0.05, 50_000, 3
    flips = sum(map(sum, gen_pattern(ChannelConfig("bsc", p=p, seed=7), ticks, n)))
    bits = ticks * n
    assert abs(flips / bits - p) <= 3 * math.sqrt(p * (1 - p) / bits)


def test_constrained_patterns():
    pats = list(constrained_patterns(2, 4, 1, 2))
    assert all(max(window_weights(p, 2)) <= 1 for p in pats)
    # independent count: ticks with an error may not be adjacent; each error tick has 2 choices
    count = sum(2 ** sum(ch) for ch in __import__("itertools").product((0, 1), repeat=4)
                if all(not (a and b) for a, b in zip(ch, ch[1:])))
    assert len(pats) == count


def test_transmit_length():
    sent = transmit(code("ex36"), [1, 0, 1], 4)
    assert len(sent) == 3 + 3 + 3


@pytest.mark.parametrize("decoder", ["exhaustive", "viterbi"])
def test_clean_channel_all_correct(decoder):
    r = run_experiment(code("ex36"), decoder, ChannelConfig("bsc", p=0.0), 20, 30)
    assert (r.trials, r.correct, r.flagged, r.wrong) == (20, 20, 0, 0)


def test_bounded_errors_never_wrong():
    cfg = ChannelConfig("burst-guard", burst_weight=1, burst_len=1, guard_len=1, seed=2)
    r = run_experiment(code("ex36"), "exhaustive", cfg, 100, 30, tau=2)
    assert r.wrong == 0 and r.trials == 100


def test_destroyed_channel_is_wrong():
    r = run_experiment(code("ex36"), "viterbi", ChannelConfig("bsc", p=0.5, seed=1), 30, 40)
    assert r.wrong > 0


def test_report_dict():
    r = run_experiment(code("ex34"), "viterbi", ChannelConfig("bsc", p=0.01, seed=9), 5, 10)
    d = r.to_dict()
    assert set(d) == {"trials", "correct", "flagged", "wrong", "seed", "generator"}
    assert d["correct"] + d["flagged"] + d["wrong"] == d["trials"] == 5
    assert r == run_experiment(code("ex34"), "viterbi", ChannelConfig("bsc", p=0.01, seed=9), 5, 10)


def test_unknown_decoder():
    with pytest.raises(DomainError):
        run_experiment(code("ex34"), "psychic", ChannelConfig(), 1, 4)


def test_guard_space_small():
    rep = guard_space_study(code("ex36"), 12, e=1, max_guard=12, trials=4, message_len=30)
    assert rep.guard is not None and rep.guard <= 12
    assert rep.e_ready_guard is not None
    assert rep.wrong_by_guard[12] == 0
