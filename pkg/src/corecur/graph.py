"""Finite-graph termination toolkit.

A :class:`FiniteGraph` is an explicit successor-list digraph over hashable
node keys.  On finite graphs, well-foundedness (no infinite paths) is the
same as acyclicity of the reachable part, which makes the classic
termination certificates checkable at desk scale: ranking functions,
minimal ranks by longest path, and disjunctive well-foundedness over the
transitive closure.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Mapping
from typing import Callable, Iterable, Iterator

from .engine import DEFAULT_FUSE, RankedCoalgebra
from .errors import CycleFound, FuseExceeded, GraphFormatError
from .orders import Nat, Rank, less


class FiniteGraph:
    """Immutable digraph given by an ordered successor list per node.

    Every successor must itself be a declared node.  Node order is the
    declaration order and is preserved by the text format round-trip.
    """

    def __init__(self, succ: Mapping):
        self._succ = {node: tuple(targets) for node, targets in succ.items()}
        declared = set(self._succ)
        for node, targets in self._succ.items():
            for t in targets:
                if t not in declared:
                    raise ValueError(f"successor {t!r} of {node!r} is not a declared node")
        self._nodes = tuple(self._succ)

    @property
    def nodes(self) -> tuple:
        return self._nodes

    def succ(self, node) -> tuple:
        return self._succ[node]

    def edges(self) -> Iterator[tuple]:
        for node in self._nodes:
            for t in self._succ[node]:
                yield node, t

    def __contains__(self, node):
        return node in self._succ

    def __len__(self):
        return len(self._nodes)

    def __eq__(self, other):
        if not isinstance(other, FiniteGraph):
            return NotImplemented
        return self._nodes == other._nodes and self._succ == other._succ

    def __repr__(self):
        return f"FiniteGraph({self._succ!r})"


def canonical_graph(
    coalg: RankedCoalgebra,
    roots: Iterable,
    key: Callable,
    fuse: int = DEFAULT_FUSE,
) -> FiniteGraph:
    """Graph of every key reachable from ``roots`` via the divide step.

    Edges run from a key to the (deduplicated) keys of its children; this is
    the support of the divided layer.  Exploration beyond ``fuse`` distinct
    keys raises :class:`FuseExceeded`.
    """
    succ: dict = {}
    queue: deque = deque()
    for root in roots:
        k = key(root)
        if k not in succ:
            if len(succ) >= fuse:
                raise FuseExceeded(fuse)
            succ[k] = None
            queue.append((k, root))
    while queue:
        k, inp = queue.popleft()
        node = coalg.divide(inp)
        targets = []
        seen = set()
        for child in node.children:
            ck = key(child)
            if ck not in seen:
                seen.add(ck)
                targets.append(ck)
            if ck not in succ:
                if len(succ) >= fuse:
                    raise FuseExceeded(fuse)
                succ[ck] = None
                queue.append((ck, child))
        succ[k] = tuple(targets)
    return FiniteGraph(succ)


def _find_cycle(g: FiniteGraph):
    """A witness cycle as a node list ``[x, ..., x]``, or None when acyclic."""
    WHITE, GREY, BLACK = 0, 1, 2
    color = {node: WHITE for node in g.nodes}
    for start in g.nodes:
        if color[start] != WHITE:
            continue
        path = []
        stack = [(start, iter(g.succ(start)))]
        color[start] = GREY
        path.append(start)
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if color[nxt] == GREY:
                    return path[path.index(nxt):] + [nxt]
                if color[nxt] == WHITE:
                    color[nxt] = GREY
                    path.append(nxt)
                    stack.append((nxt, iter(g.succ(nxt))))
                    advanced = True
                    break
            if not advanced:
                color[node] = BLACK
                path.pop()
                stack.pop()
    return None


def is_well_founded(g: FiniteGraph) -> bool:
    """True iff the graph has no infinite paths; for finite graphs, iff acyclic."""
    return _find_cycle(g) is None


def _lookup(r):
    return r.__getitem__ if isinstance(r, Mapping) else r


def verify_ranking(g: FiniteGraph, r) -> bool:
    """True iff every edge x -> y satisfies rank(y) < rank(x).

    ``r`` may be a mapping or a callable from nodes to ranks.
    """
    rank = _lookup(r)
    return all(less(rank(y), rank(x)) for x, y in g.edges())


def derive_min_rank(g: FiniteGraph) -> dict:
    """The pointwise-minimal natural ranking of an acyclic graph.

    Assigns each node the length of the longest path starting from it, which
    always verifies and is below every other natural-valued ranking.  Raises
    :class:`CycleFound` (with a witness) when the graph has a cycle.
    """
    cycle = _find_cycle(g)
    if cycle is not None:
        raise CycleFound(cycle)
    height: dict = {}

    def resolve(start):
        stack = [start]
        while stack:
            node = stack[-1]
            if node in height:
                stack.pop()
                continue
            pending = [t for t in g.succ(node) if t not in height]
            if pending:
                stack.extend(pending)
                continue
            targets = g.succ(node)
            height[node] = 1 + max(height[t] for t in targets) if targets else 0
            stack.pop()

    for node in g.nodes:
        resolve(node)
    return {node: Nat(height[node]) for node in g.nodes}


def transitive_closure(g: FiniteGraph) -> dict:
    """Mapping from each node to the set of nodes reachable by a non-empty path.

    Computed by repeated squaring of the successor relation; fine at desk
    scale, not meant for huge graphs.
    """
    reach = {node: set(g.succ(node)) for node in g.nodes}
    while True:
        grew = False
        for node in g.nodes:
            extra = set()
            for mid in reach[node]:
                extra |= reach[mid]
            if not extra <= reach[node]:
                reach[node] |= extra
                grew = True
        if not grew:
            return reach


def disjunctive_wf(g: FiniteGraph, rs: list) -> bool:
    """Check the disjunctive termination condition over the transitive closure.

    True iff for every pair y reachable from x by a non-empty path there is
    some ranking in ``rs`` under which y is strictly below x.  When this
    holds the graph is well-founded; the converse need not hold.
    """
    ranks = [_lookup(r) for r in rs]
    closure = transitive_closure(g)
    for x in g.nodes:
        for y in closure[x]:
            if not any(less(rank(y), rank(x)) for rank in ranks):
                return False
    return True


def parse_graph(text: str) -> FiniteGraph:
    """Parse the one-node-per-line text format.

    Lines are ``<node>: <succ1> <succ2> ...`` with ``#`` comments; a blank
    successor list is allowed.  Every successor must have its own line.
    """
    succ: dict = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise GraphFormatError(line_no, "expected '<node>: <successors>'")
        name, _, rest = line.partition(":")
        name = name.strip()
        if not name or " " in name:
            raise GraphFormatError(line_no, f"bad node name {name!r}")
        if name in succ:
            raise GraphFormatError(line_no, f"duplicate node {name!r}")
        succ[name] = tuple(rest.split())
    try:
        return FiniteGraph(succ)
    except ValueError as exc:
        raise GraphFormatError(0, str(exc)) from exc


def format_graph(g: FiniteGraph) -> str:
    """Canonical text form; ``parse_graph(format_graph(g)) == g``."""
    lines = []
    for node in g.nodes:
        targets = g.succ(node)
        lines.append(f"{node}: {' '.join(targets)}" if targets else f"{node}:")
    return "\n".join(lines) + "\n"


def parse_ranking(text: str) -> dict:
    """Parse a ``<node>: <natural>`` per line ranking file into Nat ranks."""
    ranks: dict = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, sep, value = line.partition(":")
        name = name.strip()
        value = value.strip()
        if not sep or not name or not value.isdigit():
            raise GraphFormatError(line_no, "expected '<node>: <natural>'")
        ranks[name] = Nat(int(value))
    return ranks
