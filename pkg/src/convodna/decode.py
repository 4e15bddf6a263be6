"""Hard-decision decoders: exhaustive windowed search and truncated Viterbi.

Both decoders work on received words in interleaved form (one n-bit group
per tick) and emit one k-digit input word per decoding step. A digit that
the decoder cannot settle is emitted as ``*``.

Stored walks are message-digit sequences with the newest input word on the
left; within a word the digits are in message order. The oldest word sits at
the right end and is the one decoded once the window is full.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .analysis import path_weights
from .convcode import CodeSpec, State, StateDiagram, build_state_diagram
from .errors import ParseError, ShapeError, UnsupportedError
from .gf2poly import to_bits

STAR = "*"
INF = math.inf
MAX_EXHAUSTIVE_DIGITS = 24

Group = tuple[int, ...]


@dataclass(frozen=True)
class TernaryWord:
    digits: str
    padded_ticks: int = 0

    def __post_init__(self):
        if set(self.digits) - {"0", "1", STAR}:
            raise ValueError(f"bad ternary digits {self.digits!r}")

    def __str__(self) -> str:
        return self.digits

    def __len__(self) -> int:
        return len(self.digits)

    def __eq__(self, other) -> bool:
        if isinstance(other, str):
            return self.digits == other
        if isinstance(other, TernaryWord):
            return self.digits == other.digits
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.digits)

    @property
    def erasures(self) -> int:
        return self.digits.count(STAR)

    def classify(self, message: str | Sequence[int]) -> str:
        """'correct', 'flagged' (some * but no wrong digit) or 'wrong',
        judged on the first len(message) digits."""
        msg = "".join(str(b) for b in message)
        head = self.digits[:len(msg)]
        if len(head) < len(msg):
            raise ShapeError(f"decoded {len(head)} digits, need {len(msg)}")
        if any(d != STAR and d != b for d, b in zip(head, msg)):
            return "wrong"
        return "flagged" if STAR in head else "correct"


def parse_received(text: str | Iterable, n: int) -> list[Group]:
    """``"11,10,00"`` (or a list of groups) -> list of n-bit tuples."""
    if isinstance(text, str):
        parts = [p for p in text.replace(" ", ",").split(",") if p]
        if STAR in text:
            raise ParseError("'*' is decoder output, not channel input")
    else:
        parts = list(text)
    groups = [to_bits(p) for p in parts]
    for i, g in enumerate(groups):
        if len(g) != n:
            raise ShapeError(f"group {i} has {len(g)} bits, expected n={n}")
    return groups


def _pad(groups: list[Group], needed: int, n: int) -> tuple[list[Group], int]:
    short = max(0, needed - len(groups))
    return groups + [(0,) * n] * short, short


def _merge(walks: Sequence[tuple]) -> tuple:
    first = walks[0]
    if len(walks) == 1:
        return first
    return tuple(d if all(w[i] == d for w in walks) else STAR for i, d in enumerate(first))


def _sd(code_or_sd) -> StateDiagram:
    return code_or_sd if isinstance(code_or_sd, StateDiagram) else build_state_diagram(code_or_sd)


# -- exhaustive -------------------------------------------------------------

class _WalkTable:
    """All walks of a fixed length from each start state, in lexicographic
    order of their input sequences (first word most significant)."""

    def __init__(self, sd: StateDiagram, length: int):
        self.sd = sd
        self.length = length
        self.index = {s: i for i, s in enumerate(sd.states)}
        words = sd.words
        self.words = words
        self.next_state = np.array([[self.index[sd.edge(s, u).dst] for u in words] for s in sd.states])
        self.output = np.array([[sd.edge(s, u).output for u in words] for s in sd.states], dtype=np.uint8)
        self._cache = {}

    def walks(self, start: int):
        if start not in self._cache:
            n_words = len(self.words)
            n = self.output.shape[2]
            cur = np.array([start])
            first = None
            outs = np.zeros((1, 0), dtype=np.uint8)
            for _ in range(self.length):
                count = len(cur)
                step_out = self.output[cur].reshape(count * n_words, n)
                outs = np.concatenate([np.repeat(outs, n_words, axis=0), step_out], axis=1)
                if first is None:
                    first = np.arange(n_words)
                else:
                    first = np.repeat(first, n_words)
                cur = self.next_state[cur].reshape(-1)
            self._cache[start] = (outs, first)
        return self._cache[start]


@functools.lru_cache(maxsize=32)
def _walk_table(sd: StateDiagram, tau: int) -> _WalkTable:
    return _WalkTable(sd, tau)


def exhaustive_decode(code_or_sd, received, tau: int, digits: int | None = None) -> TernaryWord:
    """Window-``tau`` exhaustive decoding.

    For each step every walk of ``tau`` edges from the current state is
    compared with the next ``tau`` received groups. When all closest walks
    start with the same input word it is emitted; otherwise the disagreeing
    positions are emitted as ``*`` and the decoder follows the first edge of
    the lexicographically smallest closest walk.

    ``digits`` counts decoding steps (k-digit input words); it defaults to
    the number of received ticks, zero-padding the tail as needed.
    """
    sd = _sd(code_or_sd)
    code = sd.code
    if tau < 1:
        raise UnsupportedError("window must be at least 1")
    if tau * code.k > MAX_EXHAUSTIVE_DIGITS:
        raise UnsupportedError(f"tau*k = {tau * code.k} exceeds {MAX_EXHAUSTIVE_DIGITS}; "
                               "exhaustive search would enumerate too many walks")
    groups = parse_received(received, code.n)
    if digits is None:
        digits = len(groups)
    groups, padded = _pad(groups, digits + tau - 1, code.n)
    flat = np.array([b for g in groups for b in g], dtype=np.uint8)
    table = _walk_table(sd, tau)
    n = code.n
    state = table.index[sd.zero_state]
    out = []
    for step in range(digits):
        window = flat[step * n:(step + tau) * n]
        outs, first = table.walks(state)
        dist = np.count_nonzero(outs != window, axis=1)
        closest = np.flatnonzero(dist == dist.min())
        firsts = {int(first[i]) for i in closest}
        chosen = int(first[closest[0]])
        word = table.words[chosen]
        if len(firsts) == 1:
            out.extend(str(b) for b in word)
        else:
            cands = [table.words[f] for f in firsts]
            out.extend(str(b) if all(c[i] == b for c in cands) else STAR for i, b in enumerate(word))
        state = int(table.next_state[state, chosen])
    return TernaryWord("".join(out), padded)


# -- truncated Viterbi ------------------------------------------------------

@dataclass
class DecoderState:
    t: int
    distances: dict = field(default_factory=dict)
    walks: dict = field(default_factory=dict)

    def best_states(self) -> list[State]:
        low = min(self.distances.values())
        return [s for s, d in self.distances.items() if d == low]


def _hamming(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x != y for x, y in zip(a, b))


class TruncatedViterbi:
    """Truncated Viterbi decoder for an (n, k, m) code, one tick at a time.

    ``tie_policy="merge"`` combines all minimising predecessor walks,
    starring the positions where they disagree; ``"first"`` keeps only the
    walk through the lexicographically smallest predecessor word.
    """

    def __init__(self, code_or_sd, tau: int, tie_policy: str = "merge"):
        sd = _sd(code_or_sd)
        code = sd.code
        if tau < code.m:
            raise UnsupportedError(f"window tau={tau} is shorter than m={code.m}")
        if tie_policy not in ("merge", "first"):
            raise ValueError(f"unknown tie policy {tie_policy!r}")
        self.sd = sd
        self.tau = tau
        self.tie_policy = tie_policy
        self.k = code.k
        self.walk_len = tau * code.k
        self.t = 0
        zero = sd.zero_state
        self.distances = {s: (0 if s == zero else INF) for s in sd.states}
        self.walks = {s: s + (STAR,) * (self.walk_len - len(s)) for s in sd.states}

    @property
    def state(self) -> DecoderState:
        return DecoderState(self.t, dict(self.distances), dict(self.walks))

    def step(self, group: Sequence[int]) -> list:
        """Consume one received group; return the decoded digits (possibly none)."""
        k = self.k
        dist, walks = {}, {}
        for s in self.sd.states:
            cands = [(self.distances[e.src] + _hamming(group, e.output), e.src)
                     for e in self.sd.predecessors(s)]
            low = min(c[0] for c in cands)
            winners = [p for d, p in cands if d == low]
            if self.tie_policy == "first":
                winners = winners[:1]
            dist[s] = low
            walks[s] = _merge([s[:k] + self.walks[p][:-k] for p in winners])
            assert walks[s][:len(s)] == s
        self.distances, self.walks = dist, walks
        self.t += 1
        if self.t < self.tau:
            return []
        oldest = [self.walks[s][-k:] for s in self.state.best_states()]
        return [d if all(w[i] == d for w in oldest) else STAR for i, d in enumerate(oldest[0])]


def _run(decoder, groups: list[Group], digits: int | None) -> TernaryWord:
    if digits is None:
        digits = len(groups)
    groups, padded = _pad(groups, digits + decoder.tau - 1, len(groups[0]) if groups else decoder.sd.code.n)
    out = []
    for g in groups:
        out.extend(decoder.step(g))
        if len(out) >= digits * decoder.k:
            break
    return TernaryWord("".join(str(d) for d in out[:digits * decoder.k]), padded)


def viterbi_general(code_or_sd, received, tau: int, digits: int | None = None,
                    tie_policy: str = "merge") -> TernaryWord:
    sd = _sd(code_or_sd)
    groups = parse_received(received, sd.code.n)
    return _run(TruncatedViterbi(sd, tau, tie_policy), groups, digits)


def viterbi_k1(code_or_sd, received, tau: int, digits: int | None = None) -> TernaryWord:
    """Truncated Viterbi for k = 1, written out step by step.

    State s = s_1..s_m is entered from s_2..s_m,0 and s_2..s_m,1.
    """
    sd = _sd(code_or_sd)
    code = sd.code
    if code.k != 1:
        raise UnsupportedError("viterbi_k1 needs k = 1")
    if tau < code.m:
        raise UnsupportedError(f"window tau={tau} is shorter than m={code.m}")
    groups = parse_received(received, code.n)
    if digits is None:
        digits = len(groups)
    groups, padded = _pad(groups, digits + tau - 1, code.n)
    zero = sd.zero_state
    # step 1
    d = {s: (0 if s == zero else INF) for s in sd.states}
    W = {s: s + (STAR,) * (tau - len(s)) for s in sd.states}
    out = []
    for t in range(1, len(groups) + 1):
        received_group = groups[t - 1]
        new_d, new_W = {}, {}
        for s in sd.states:
            p0, p1 = s[1:] + (0,), s[1:] + (1,)
            # step 2
            d0 = _hamming(received_group, sd.edge(p0, s[:1]).output)
            d1 = _hamming(received_group, sd.edge(p1, s[:1]).output)
            via0, via1 = d[p0] + d0, d[p1] + d1
            new_d[s] = min(via0, via1)
            # step 3
            if via0 < via1:
                new_W[s] = s[:1] + W[p0][:-1]
            elif via1 < via0:
                new_W[s] = s[:1] + W[p1][:-1]
            else:
                merged = tuple(a if a == b else STAR for a, b in zip(W[p0], W[p1]))
                new_W[s] = s[:1] + merged[:-1]
        d, W = new_d, new_W
        # step 4
        if t >= tau:
            low = min(d.values())
            rightmost = {W[s][-1] for s in sd.states if d[s] == low}
            out.append(str(rightmost.pop()) if len(rightmost) == 1 else STAR)
            if len(out) == digits:
                break
    return TernaryWord("".join(out), padded)


def is_e_ready(ds: DecoderState, correct_state: State, e: int, sd: StateDiagram,
               relative: bool = False) -> bool:
    """Both e-readiness conditions at the decoder's current tick.

    1. d(s') >= d(s(t)) + min(1 + e, w(s(t), s')) for every s' != s(t);
    2. W(s') = s' v whenever w(s(t), s') < 1 + e, where W(s(t)) = s(t) v.

    w(s, s') is the least path weight from s to s'. The conditions are
    stated for the all-zero codeword, where s(t) is the zero state. With
    ``relative=True`` w(s(t), s') is taken as w(0, s(t) xor s'), the weight
    of the cheapest deviation from the sent path, which extends the test to
    any codeword by linearity.
    """
    zero = sd.zero_state
    weights = path_weights(sd, zero if relative else correct_state)
    base = ds.distances[correct_state]
    v = ds.walks[correct_state][len(correct_state):]
    for s in sd.states:
        if s == correct_state:
            continue
        key = tuple(a ^ b for a, b in zip(s, correct_state)) if relative else s
        w = weights.get(key, INF)
        if not ds.distances[s] >= base + min(1 + e, w):
            return False
        if w < 1 + e and ds.walks[s] != s + v:
            return False
    return True


def decode(code: CodeSpec, received, tau: int, algo: str = "viterbi", digits: int | None = None) -> TernaryWord:
    if algo == "exhaustive":
        return exhaustive_decode(code, received, tau, digits)
    if algo == "viterbi":
        return viterbi_general(code, received, tau, digits)
    raise ValueError(f"unknown decoder {algo!r}")
