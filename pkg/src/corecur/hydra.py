"""The hydra game: move semantics, rank certificate, simulation, maxsteps.

A position is a finite rooted tree.  One move picks a leaf and a natural n:
if the leaf has a grandparent, that grandparent first sprouts n fresh
leaves, then the chosen leaf is deleted.  The game ends at the bare root.

Termination is certified by ranking a tree with its per-depth leaf counts
as an eventually-zero sequence: deleting a leaf of depth j decrements entry
j, and everything the move adds sits at strictly smaller indices, so the
rank drops in the reverse-lexicographic order no matter how much the tree
grows.

:func:`maxsteps` runs the full game tree for a fixed strategy prefix (the
n for round i is ``strategy[i]``) through the solver and takes the maximum
number of rounds over all leaf choices.  Growth is wildly non-elementary,
hence the deliberately small default caps.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .engine import DEFAULT_FUSE, Algebra, Node, RankedCoalgebra, SolveConfig, solve
from .errors import FuseExceeded, NotALeaf, RankViolation, RootOnly, StrategyExhausted
from .orders import EvZeroSeq, less


@dataclass(frozen=True)
class Tree:
    """A finite rooted tree with ordered children."""

    children: tuple["Tree", ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))

    @property
    def is_root_only(self) -> bool:
        return not self.children

    def node_count(self) -> int:
        return 1 + sum(c.node_count() for c in self.children)

    def __str__(self):
        return format_tree(self)


def parse_tree(text: str) -> Tree:
    """Parse the balanced-parentheses form; '()' is the bare root."""
    text = text.strip()
    pos = 0

    def node() -> Tree:
        nonlocal pos
        if pos >= len(text) or text[pos] != "(":
            raise ValueError(f"expected '(' at position {pos} in {text!r}")
        pos += 1
        kids = []
        while pos < len(text) and text[pos] == "(":
            kids.append(node())
        if pos >= len(text) or text[pos] != ")":
            raise ValueError(f"expected ')' at position {pos} in {text!r}")
        pos += 1
        return Tree(tuple(kids))

    result = node()
    if pos != len(text):
        raise ValueError(f"trailing input at position {pos} in {text!r}")
    return result


def format_tree(t: Tree) -> str:
    return "(" + "".join(format_tree(c) for c in t.children) + ")"


def canonical(t: Tree) -> Tree:
    """Order-insensitive normal form: children sorted by their encoding."""
    kids = sorted((canonical(c) for c in t.children), key=format_tree)
    return Tree(tuple(kids))


def leaf_paths(t: Tree):
    """All paths (tuples of child indices) from the root to a leaf."""
    if t.is_root_only:
        yield ()
        return
    for i, c in enumerate(t.children):
        for rest in leaf_paths(c):
            yield (i, *rest)


def _resolve(t: Tree, path) -> Tree:
    node = t
    for i in path:
        if i >= len(node.children):
            raise NotALeaf(path)
        node = node.children[i]
    return node


def apply_move(t: Tree, leaf, n: int) -> Tree:
    """One round of the game: sprout n leaves at the grandparent, delete the leaf."""
    leaf = tuple(leaf)
    if t.is_root_only:
        raise RootOnly()
    if not _resolve(t, leaf).is_root_only:
        raise NotALeaf(leaf)

    def sprout(node: Tree, depth: int) -> Tree:
        if depth == len(leaf) - 2:
            return Tree(node.children + (Tree(),) * n)
        kids = list(node.children)
        kids[leaf[depth]] = sprout(kids[leaf[depth]], depth + 1)
        return Tree(tuple(kids))

    def delete(node: Tree, depth: int) -> Tree:
        kids = list(node.children)
        if depth == len(leaf) - 1:
            del kids[leaf[depth]]
        else:
            kids[leaf[depth]] = delete(kids[leaf[depth]], depth + 1)
        return Tree(tuple(kids))

    if len(leaf) >= 2:
        t = sprout(t, 0)
    return delete(t, 0)


def successors(t: Tree, n: int) -> set[Tree]:
    """All positions reachable in one round with the given n, up to tree equality.

    Symmetric moves collapse: results are canonicalized before collecting.
    The set is empty exactly for the bare root, and never larger than the
    number of leaves.
    """
    if t.is_root_only:
        return set()
    return {canonical(apply_move(t, path, n)) for path in leaf_paths(t)}


def rank(t: Tree) -> EvZeroSeq:
    """Entry i counts the leaves at depth i (the root has depth 0)."""
    counts: list[int] = []

    def visit(node: Tree, depth: int):
        if node.is_root_only:
            while len(counts) <= depth:
                counts.append(0)
            counts[depth] += 1
            return
        for c in node.children:
            visit(c, depth + 1)

    visit(t, 0)
    return EvZeroSeq(tuple(counts))


def leftmost_leaf(t: Tree):
    """Deterministic leaf policy: first leaf in preorder."""
    return next(iter(leaf_paths(t)))


def random_leaf_policy(seed: int):
    """A reproducible randomized leaf policy."""
    rng = random.Random(seed)

    def pick(t: Tree):
        return rng.choice(list(leaf_paths(t)))

    return pick


def play(t: Tree, strategy, leaf_policy=leftmost_leaf) -> list[tuple[Tree, EvZeroSeq]]:
    """Run the game to the bare root; returns the (tree, rank) trace.

    Round i uses n = strategy[i] and the leaf chosen by ``leaf_policy``.
    The rank is checked to drop strictly every round.  If the strategy
    prefix runs out before the game ends, :class:`StrategyExhausted`
    reports the residual tree.
    """
    strategy = list(strategy)
    trace = [(t, rank(t))]
    round_no = 0
    while not t.is_root_only:
        if round_no >= len(strategy):
            raise StrategyExhausted(t)
        t = apply_move(t, leaf_policy(t), strategy[round_no])
        r = rank(t)
        if not less(r, trace[-1][1]):
            raise RankViolation(trace[-1][0], trace[-1][1], r)
        trace.append((t, r))
        round_no += 1
    return trace


MAX_TREE_NODES = 6
MAX_STRATEGY_VALUE = 4


def maxsteps(
    t: Tree,
    strategy,
    *,
    max_tree_nodes: int = MAX_TREE_NODES,
    max_strategy_value: int = MAX_STRATEGY_VALUE,
    trace: bool = False,
    fuse: int = DEFAULT_FUSE,
):
    """Maximum number of rounds over all leaf choices, n following the strategy.

    The bare root takes 0 rounds.  The input caps are a safety fuse against
    the game's non-elementary growth, not a semantic limit; raise them
    explicitly for bigger experiments.
    """
    strategy = tuple(strategy)
    if t.node_count() > max_tree_nodes:
        raise FuseExceeded(max_tree_nodes)
    if any(n > max_strategy_value for n in strategy):
        raise FuseExceeded(max_strategy_value)

    def divide(state):
        tree, i = state
        if tree.is_root_only:
            return Node("done")
        if i >= len(strategy):
            raise StrategyExhausted(tree)
        nexts = sorted(successors(tree, strategy[i]), key=format_tree)
        return Node("round", tuple((s, i + 1) for s in nexts))

    def combine(label, outs):
        if label == "done":
            return 0
        return 1 + max(outs)

    coalg = RankedCoalgebra(divide, lambda state: rank(state[0]))
    cfg = SolveConfig(memoize=True, key=lambda state: state, trace=trace, fuse=fuse)
    return solve(coalg, Algebra(combine), (canonical(t), 0), cfg)
