"""(n, k, m) binary convolutional codes and their encoders.

Register layout: an (m+1)-cell register X0..Xm, all zero before the first
tick. Each tick shifts the contents k cells to the right and loads the next
k message digits into X0..X(k-1) *in message order* (the earliest of the k
digits lands in X0). For k = 1 this is ordinary shifting; for k > 1 it is
not the same as shifting the k digits in one at a time, which would leave
the latest digit in X0. Generator g_j reads cell Xi iff its x**i
coefficient is 1.

Splitting the message into k interleaved streams, each feeding its own
sub-register, is only a re-drawing of the same register and gives identical
output; there is no separate encoder for it.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvalidCodeError, InvalidWalkError, LengthError, UnsupportedError
from .gf2poly import BinaryPoly, BitSeq, bits_str, poly_mul, poly_to_bits, to_bits

State = tuple[int, ...]


@dataclass(frozen=True)
class CodeSpec:
    n: int
    k: int
    m: int
    generators: tuple[BinaryPoly, ...]

    def __post_init__(self):
        gens = tuple(g if isinstance(g, BinaryPoly) else BinaryPoly.parse(str(g))
                     for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise InvalidCodeError("empty generator list")
        if len(gens) != self.n:
            raise InvalidCodeError(f"n={self.n} but {len(gens)} generator(s) given")
        if self.k < 1:
            raise InvalidCodeError("k must be at least 1")
        if self.m < 1:
            raise InvalidCodeError("m must be at least 1")
        if self.k > self.m + 1:
            raise InvalidCodeError(f"k={self.k} exceeds the register size m+1={self.m + 1}")
        degs = [g.degree for g in gens]
        if any(d > self.m for d in degs):
            raise InvalidCodeError(f"generator degree exceeds m={self.m}: {degs}")
        if max(degs) != self.m:
            raise InvalidCodeError(f"no generator reaches degree m={self.m}; m is overstated")

    @classmethod
    def from_strings(cls, params: str | Sequence[int], gens: str | Iterable[str]) -> CodeSpec:
        """``from_strings("2,1,2", "101,111")``"""
        if isinstance(params, str):
            try:
                n, k, m = (int(v) for v in params.split(","))
            except ValueError:
                raise InvalidCodeError(f"code must be 'n,k,m', got {params!r}") from None
        else:
            n, k, m = params
        if isinstance(gens, str):
            gens = gens.split(",")
        return cls(n, k, m, tuple(BinaryPoly.parse(g) for g in gens))

    @property
    def state_len(self) -> int:
        return self.m + 1 - self.k

    def label(self) -> str:
        return f"({self.n},{self.k},{self.m}) " + ",".join(str(g) for g in self.generators)

    def register_output(self, cells: Sequence[int]) -> BitSeq:
        return tuple(sum(g[i] & cells[i] for i in range(len(cells))) & 1 for g in self.generators)


@dataclass(frozen=True)
class Codeword:
    components: tuple[BinaryPoly, ...]

    @property
    def n(self) -> int:
        return len(self.components)


def encode_poly(code: CodeSpec, message: BinaryPoly | str) -> Codeword:
    if code.k != 1:
        raise UnsupportedError("polynomial encoding needs k = 1; use the register encoder")
    if not isinstance(message, BinaryPoly):
        message = BinaryPoly.parse(message)
    return Codeword(tuple(poly_mul(message, g) for g in code.generators))


@dataclass(frozen=True)
class RegisterTick:
    tick: int
    word: BitSeq
    cells: BitSeq
    output: BitSeq


def register_trace(code: CodeSpec, message: str | Sequence[int], ticks: int | None = None) -> list[RegisterTick]:
    """Tick-by-tick register contents and outputs (the Table 1 / Table 3 view)."""
    msg = to_bits(message)
    k = code.k
    needed = -(-len(msg) // k)
    if ticks is None:
        ticks = needed + code.m
    if ticks < needed:
        raise LengthError(f"{ticks} ticks cannot carry {len(msg)} message digits at k={k}")
    msg = msg + (0,) * (k * ticks - len(msg))
    cells = (0,) * (code.m + 1)
    trace = []
    for t in range(ticks):
        word = msg[k * t:k * (t + 1)]
        cells = word + cells[:code.m + 1 - k]
        trace.append(RegisterTick(t, word, cells, code.register_output(cells)))
    return trace


def encode_register(code: CodeSpec, message: str | Sequence[int], ticks: int | None = None) -> list[BitSeq]:
    """Output groups (one n-bit tuple per tick). Default ticks flush the register."""
    return [row.output for row in register_trace(code, message, ticks)]


def encoder_states(code: CodeSpec, message: str | Sequence[int], ticks: int | None = None) -> list[State]:
    """State of the encoder before tick 0 and after every tick."""
    sl = code.state_len
    return [(0,) * sl] + [row.cells[:sl] for row in register_trace(code, message, ticks)]


def interleave(cw: Codeword, ticks: int) -> BitSeq:
    cols = [poly_to_bits(c, ticks) for c in cw.components]
    return tuple(col[t] for t in range(ticks) for col in cols)


def flatten(groups: Iterable[Sequence[int]]) -> BitSeq:
    return tuple(b for g in groups for b in g)


@dataclass(frozen=True)
class Edge:
    src: State
    word: BitSeq
    dst: State
    output: BitSeq

    @property
    def weight(self) -> int:
        return sum(self.output)


@dataclass(frozen=True)
class StateDiagram:
    code: CodeSpec
    states: tuple[State, ...]
    edges: dict = field(repr=False, compare=False)

    @property
    def state_len(self) -> int:
        return self.code.state_len

    @property
    def zero_state(self) -> State:
        return (0,) * self.state_len

    @property
    def words(self) -> list[BitSeq]:
        return list(itertools.product((0, 1), repeat=self.code.k))

    def edge(self, src: State, word: BitSeq) -> Edge:
        return self.edges[src, tuple(word)]

    def successors(self, src: State) -> list[Edge]:
        return [self.edges[src, u] for u in self.words]

    def predecessors(self, dst: State) -> list[Edge]:
        """Edges into ``dst``; their sources are dst[k:] + v for every k-word v."""
        k = self.code.k
        return [self.edges[dst[k:] + v, dst[:k]] for v in self.words]

    def all_edges(self) -> list[Edge]:
        return [self.edges[s, u] for s in self.states for u in self.words]

    def to_dot(self) -> str:
        lines = [f'digraph "{self.code.label()}" {{']
        for s in self.states:
            lines.append(f'  "{bits_str(s)}";')
        for e in self.all_edges():
            lines.append(f'  "{bits_str(e.src)}" -> "{bits_str(e.dst)}" '
                         f'[label="{bits_str(e.word)}/{bits_str(e.output)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_state_diagram(code: CodeSpec) -> StateDiagram:
    k, m = code.k, code.m
    if not (k == 1 or 2 * k <= m):
        raise UnsupportedError(f"state diagrams need 1 <= k <= m/2, got k={k}, m={m}")
    sl = code.state_len
    states = tuple(itertools.product((0, 1), repeat=sl))
    edges = {}
    for s in states:
        for u in itertools.product((0, 1), repeat=k):
            cells = u + s
            edges[s, u] = Edge(s, u, cells[:sl], code.register_output(cells))
    return StateDiagram(code, states, edges)


def encode_walk(sd: StateDiagram, message: str | Sequence[int]) -> BitSeq:
    msg = to_bits(message)
    k = sd.code.k
    if len(msg) % k:
        raise LengthError(f"message length {len(msg)} is not a multiple of k={k}")
    state, out = sd.zero_state, []
    for i in range(0, len(msg), k):
        e = sd.edge(state, msg[i:i + k])
        out.extend(e.output)
        state = e.dst
    return tuple(out)


def walk_to_message(sd: StateDiagram, path: Sequence[State | str]) -> BitSeq:
    """Message digits read off a state path: the first k digits of each state entered."""
    path = [to_bits(s) for s in path]
    k = sd.code.k
    out = []
    for a, b in zip(path, path[1:]):
        if len(b) != sd.state_len or a[:sd.state_len - k] != b[k:]:
            raise InvalidWalkError(f"no edge {bits_str(a)} -> {bits_str(b)}")
        out.extend(b[:k])
    return tuple(out)
