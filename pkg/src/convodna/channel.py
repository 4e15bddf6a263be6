"""Error patterns and a decoding experiment harness.

Randomness comes from numpy's PCG64 seeded with an explicit 64-bit value,
so a (config, seed) pair always reproduces the same masks and messages.
"""
from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .convcode import CodeSpec, build_state_diagram, encode_register, encoder_states
from .decode import TruncatedViterbi, exhaustive_decode, is_e_ready, viterbi_general
from .errors import DomainError, ShapeError

GENERATOR = "numpy.PCG64"
KINDS = ("bsc", "burst-guard", "explicit")

Group = tuple[int, ...]


@dataclass(frozen=True)
class ChannelConfig:
    kind: str = "bsc"
    p: float = 0.0
    burst_weight: int = 1
    burst_len: int = 1
    guard_len: int = 0
    seed: int = 0
    mask: tuple = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown channel kind {self.kind!r}")
        if not 0.0 <= self.p <= 1.0:
            raise DomainError(f"crossover probability {self.p} outside [0, 1]")
        if self.guard_len < 0 or self.burst_len < 1 or self.burst_weight < 0:
            raise DomainError("burst_len >= 1, burst_weight >= 0 and guard_len >= 0 required")
        if not 0 <= self.seed < 2**64:
            raise DomainError("seed must fit in 64 bits")


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def apply(pattern: Sequence[Sequence[int]], received: Sequence[Sequence[int]]) -> list[Group]:
    """XOR ``pattern`` onto ``received`` group by group; a short mask is zero-extended."""
    if len(pattern) > len(received):
        raise ShapeError(f"mask has {len(pattern)} ticks, word has {len(received)}")
    out = []
    for i, g in enumerate(received):
        if i >= len(pattern):
            out.append(tuple(g))
            continue
        e = pattern[i]
        if len(e) != len(g):
            raise ShapeError(f"tick {i}: mask width {len(e)} != group width {len(g)}")
        out.append(tuple(a ^ b for a, b in zip(g, e)))
    return out


def gen_pattern(cfg: ChannelConfig, ticks: int, n: int, rng: np.random.Generator | None = None) -> list[Group]:
    """Error mask of ``ticks`` n-bit groups.

    burst-guard repeats [burst_len ticks carrying exactly ``burst_weight``
    flipped bits at random positions][guard_len clean ticks].
    """
    if rng is None:
        rng = make_rng(cfg.seed)
    if cfg.kind == "explicit":
        mask = [tuple(g) for g in cfg.mask]
        return mask[:ticks] + [(0,) * n] * max(0, ticks - len(mask))
    if cfg.kind == "bsc":
        flips = (rng.random((ticks, n)) < cfg.p).astype(int)
        return [tuple(int(b) for b in row) for row in flips]
    bits = np.zeros(ticks * n, dtype=int)
    period = cfg.burst_len + cfg.guard_len
    for start in range(0, ticks, period):
        span = min(cfg.burst_len, ticks - start) * n
        weight = min(cfg.burst_weight, span)
        pos = rng.choice(span, size=weight, replace=False)
        bits[start * n + pos] = 1
    return [tuple(int(b) for b in bits[i * n:(i + 1) * n]) for i in range(ticks)]


def window_weights(pattern: Sequence[Sequence[int]], window: int) -> list[int]:
    w = [sum(g) for g in pattern]
    return [sum(w[i:i + window]) for i in range(max(1, len(w) - window + 1))]


def constrained_patterns(n: int, ticks: int, e: int, window: int) -> Iterator[list[Group]]:
    """Every mask with at most ``e`` errors in any ``window`` consecutive ticks."""
    groups = [g for g in itertools.product((0, 1), repeat=n) if sum(g) <= e]

    def extend(prefix, weights):
        if len(prefix) == ticks:
            yield list(prefix)
            return
        recent = sum(weights[-(window - 1):]) if window > 1 else 0
        for g in groups:
            if recent + sum(g) <= e:
                yield from extend(prefix + [g], weights + [sum(g)])

    yield from extend([], [])


@dataclass
class ExperimentReport:
    trials: int = 0
    correct: int = 0
    flagged: int = 0
    wrong: int = 0
    seed: int = 0
    generator: str = GENERATOR

    def to_dict(self) -> dict:
        return asdict(self)


def default_tau(code: CodeSpec, decoder: str) -> int:
    if decoder == "exhaustive":
        from .analysis import tau
        return tau(code, 1)
    return 4 * code.m


def transmit(code: CodeSpec, message: Sequence[int], tau: int) -> list[Group]:
    """Codeword for ``message`` plus m flush ticks and tau-1 trailing zero ticks."""
    words = -(-len(message) // code.k)
    return encode_register(code, message, words + code.m + tau - 1)


def run_experiment(code: CodeSpec, decoder: str, cfg: ChannelConfig, trials: int,
                   message_len: int, tau: int | None = None) -> ExperimentReport:
    """Encode random messages, corrupt them, decode, and count outcomes.

    ``message_len`` counts k-digit input words. The m flush words are
    decoded but not judged.
    """
    if tau is None:
        tau = default_tau(code, decoder)
    rng = make_rng(cfg.seed)
    report = ExperimentReport(seed=cfg.seed)
    steps = message_len + code.m
    sd = build_state_diagram(code)
    for _ in range(trials):
        msg = [int(b) for b in rng.integers(0, 2, size=message_len * code.k)]
        sent = transmit(code, msg, tau)
        received = apply(gen_pattern(cfg, len(sent), code.n, rng), sent)
        if decoder == "exhaustive":
            got = exhaustive_decode(sd, received, tau, steps)
        elif decoder == "viterbi":
            got = viterbi_general(sd, received, tau, steps)
        else:
            raise DomainError(f"unknown decoder {decoder!r}")
        outcome = got.classify(msg)
        setattr(report, outcome, getattr(report, outcome) + 1)
        report.trials += 1
    return report


@dataclass
class GuardSpaceReport:
    e: int
    tau: int
    burst_len: int
    max_guard: int
    guard: int | None = None
    e_ready_guard: int | None = None
    wrong_by_guard: dict = field(default_factory=dict)
    unready_by_guard: dict = field(default_factory=dict)


def _settled(failures: dict, max_guard: int) -> int | None:
    """Smallest G such that no G' in G..max_guard has failures."""
    found = None
    for g in range(max_guard, -1, -1):
        if failures[g]:
            break
        found = g
    return found


def guard_space_study(code: CodeSpec, tau: int, e: int = 1, burst_len: int = 1, max_guard: int = 40,
                      trials: int = 10, message_len: int = 40, seed: int = 0) -> GuardSpaceReport:
    """Truncated Viterbi under bursts of weight e separated by G clean ticks.

    For each G in 0..max_guard, counts trials decoded wrongly and guard ends
    at which the decoder was not e-ready. Reports the smallest G beyond which
    neither ever happens.
    """
    sd = build_state_diagram(code)
    report = GuardSpaceReport(e, tau, burst_len, max_guard)
    for guard in range(max_guard + 1):
        cfg = ChannelConfig("burst-guard", burst_weight=e, burst_len=burst_len, guard_len=guard, seed=seed)
        rng = make_rng(seed)
        wrong = unready = 0
        period = burst_len + guard
        for _ in range(trials):
            msg = [int(b) for b in rng.integers(0, 2, size=message_len * code.k)]
            sent = transmit(code, msg, tau)
            states = encoder_states(code, msg, len(sent))
            received = apply(gen_pattern(cfg, len(sent), code.n, rng), sent)
            dec = TruncatedViterbi(sd, tau)
            out = []
            for t, g in enumerate(received, start=1):
                out.extend(dec.step(g))
                if t % period == 0 and t < len(received):
                    if not is_e_ready(dec.state, states[t], e, sd, relative=True):
                        unready += 1
            got = "".join(str(d) for d in out)
            if any(a != str(b) for a, b in zip(got, msg)) or len(got) < len(msg):
                wrong += 1
        report.wrong_by_guard[guard] = wrong
        report.unready_by_guard[guard] = unready
    report.guard = _settled(report.wrong_by_guard, max_guard)
    report.e_ready_guard = _settled(report.unready_by_guard, max_guard)
    return report
