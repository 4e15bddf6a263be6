"""Graph metrics of a code's state diagram.

Edge cost everywhere is the Hamming weight of the edge output.
"""
from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .convcode import CodeSpec, State, StateDiagram, build_state_diagram
from .errors import CatastrophicCodeError, DomainError


@dataclass(frozen=True)
class WalkWeight:
    length: int
    weight: int


def _diagram(code_or_sd) -> StateDiagram:
    return code_or_sd if isinstance(code_or_sd, StateDiagram) else build_state_diagram(code_or_sd)


def weight_graph(sd: StateDiagram) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(sd.states)
    for e in sd.all_edges():
        g.add_edge(e.src, e.dst, weight=e.weight, word=e.word)
    return g


def walk_weight(sd: StateDiagram, words, start: State | None = None) -> WalkWeight:
    state = sd.zero_state if start is None else start
    total = 0
    for u in words:
        e = sd.edge(state, tuple(u))
        total += e.weight
        state = e.dst
    return WalkWeight(len(words), total)


def zero_weight_cycle(code_or_sd) -> list[State] | None:
    """A zero-weight cycle other than the zero-state loop, or None."""
    sd = _diagram(code_or_sd)
    g = nx.DiGraph()
    for e in sd.all_edges():
        if e.weight == 0 and not (e.src == e.dst == sd.zero_state):
            g.add_edge(e.src, e.dst)
    try:
        return [u for u, _ in nx.find_cycle(g)]
    except nx.NetworkXNoCycle:
        return None


def is_catastrophic(code_or_sd) -> bool:
    return zero_weight_cycle(code_or_sd) is not None


def _require_non_catastrophic(sd: StateDiagram):
    cycle = zero_weight_cycle(sd)
    if cycle is not None:
        path = " -> ".join("".join(map(str, s)) for s in cycle + cycle[:1])
        raise CatastrophicCodeError(f"catastrophic code {sd.code.label()}: zero-weight cycle {path}")


def free_distance(code_or_sd, allow_catastrophic: bool = False) -> int:
    """Least weight of a walk that leaves the zero state and later returns to it.

    Catastrophic codes are refused unless ``allow_catastrophic`` is set; the
    value then only covers codewords of finite-length messages.
    """
    sd = _diagram(code_or_sd)
    if not allow_catastrophic:
        _require_non_catastrophic(sd)
    zero = sd.zero_state
    g = weight_graph(sd)
    if g.has_edge(zero, zero):
        g.remove_edge(zero, zero)
    back = nx.single_source_dijkstra_path_length(g.reverse(copy=False), zero, weight="weight")
    return min(e.weight + back[e.dst]
               for e in sd.successors(zero) if any(e.word) and e.dst in back)


def min_path_weight(sd: StateDiagram, s: State, t: State) -> int | float:
    if s == t:
        return 0
    try:
        return nx.dijkstra_path_length(weight_graph(sd), s, t, weight="weight")
    except nx.NetworkXNoPath:
        return float("inf")


def path_weights(sd: StateDiagram, s: State) -> dict:
    """w(s, s') for every reachable s'."""
    return nx.single_source_dijkstra_path_length(weight_graph(sd), s, weight="weight")


def max_correctable(d: int) -> int:
    return (d - 1) // 2


def tau(code_or_sd, e: int) -> int:
    """Smallest walk length x such that every length-x walk whose first edge
    leaves the zero state has weight greater than 2e."""
    sd = _diagram(code_or_sd)
    _require_non_catastrophic(sd)
    d = free_distance(sd)
    if not 1 <= e <= max_correctable(d):
        raise DomainError(f"e={e} outside 1..{max_correctable(d)} (d={d})")
    m = sd.code.m
    cap = 10 * (m + 1) * (2 * e + 1)
    zero = sd.zero_state
    inf = float("inf")
    # best[s] = least weight of a walk of the current length ending in s
    best = {s: inf for s in sd.states}
    for edge in sd.successors(zero):
        if any(edge.word):
            best[edge.dst] = min(best[edge.dst], edge.weight)
    length = 1
    while min(best.values()) <= 2 * e:
        if length >= cap:
            raise DomainError(f"tau({e}) exceeds the search cap of {cap} ticks")
        nxt = {s: inf for s in sd.states}
        for s, w in best.items():
            if w == inf:
                continue
            for edge in sd.successors(s):
                if w + edge.weight < nxt[edge.dst]:
                    nxt[edge.dst] = w + edge.weight
        best = nxt
        length += 1
    return length


def tau_table(code: CodeSpec) -> list[tuple[int, int]]:
    d = free_distance(code)
    return [(e, tau(code, e)) for e in range(1, max_correctable(d) + 1)]
