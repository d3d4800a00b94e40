"""Independent oracles and generators shared by the test modules.

Everything here deliberately avoids the library's solver so the paths it
checks stay independent: plain host recursion, sink elimination, trial
division, exhaustive game search.
"""

from __future__ import annotations

import random

from corecur.graph import FiniteGraph
from corecur.hydra import Tree, apply_move, canonical, leaf_paths


def naive_solve(coalg, alg, value):
    """Direct recursive evaluation of the divide/combine recursion."""
    node = coalg.divide(value)
    return alg.combine(node.label, [naive_solve(coalg, alg, child) for child in node.children])


def gcd_oracle(m: int, n: int) -> int:
    """Largest divisor common to m and n, by trial division.

    (0, 0) maps to 0: zero is the greatest common divisor under the
    divisibility order, and the only value a Bezout certificate can carry
    there (g=1 would need s*0 + t*0 = 1).
    """
    if m == 0 and n == 0:
        return 0
    best = 0
    for d in range(1, max(m, n) + 1):
        if m % d == 0 and n % d == 0:
            best = d
    return best


def acyclic_oracle(g: FiniteGraph) -> bool:
    """Acyclicity by repeated sink elimination (no DFS)."""
    succ = {node: set(g.succ(node)) for node in g.nodes}
    while True:
        sinks = [node for node, targets in succ.items() if not targets]
        if not sinks:
            return not succ
        for node in sinks:
            del succ[node]
        gone = set(sinks)
        for targets in succ.values():
            targets -= gone


def random_graph(rng: random.Random, max_nodes: int = 12) -> FiniteGraph:
    n = rng.randint(1, max_nodes)
    names = [f"n{i}" for i in range(n)]
    succ = {}
    for name in names:
        k = rng.randint(0, min(3, n))
        succ[name] = tuple(rng.choice(names) for _ in range(k))
    return FiniteGraph(succ)


def random_dag(rng: random.Random, max_nodes: int = 12) -> FiniteGraph:
    n = rng.randint(1, max_nodes)
    names = [f"n{i}" for i in range(n)]
    succ = {}
    for i, name in enumerate(names):
        later = names[i + 1 :]
        k = rng.randint(0, min(3, len(later)))
        succ[name] = tuple(rng.sample(later, k))
    return FiniteGraph(succ)


def trees_with_nodes(k: int) -> list[Tree]:
    """All ordered rooted trees with exactly k nodes."""
    if k == 1:
        return [Tree()]
    shapes = []
    for comp in _compositions(k - 1):
        child_choices = [trees_with_nodes(c) for c in comp]
        for combo in _product(child_choices):
            shapes.append(Tree(tuple(combo)))
    return shapes


def _compositions(total: int):
    if total == 0:
        yield []
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first):
            yield [first] + rest


def _product(choices):
    if not choices:
        yield []
        return
    for head in choices[0]:
        for rest in _product(choices[1:]):
            yield [head] + rest


def trees_up_to(max_nodes: int) -> list[Tree]:
    return [t for k in range(1, max_nodes + 1) for t in trees_with_nodes(k)]


def random_tree(rng: random.Random, max_nodes: int = 10) -> Tree:
    n = rng.randint(1, max_nodes)

    def grow(budget: int) -> tuple[Tree, int]:
        budget -= 1
        kids = []
        while budget > 0 and rng.random() < 0.6:
            child, budget = grow(budget)
            kids.append(child)
        return Tree(tuple(kids)), budget

    tree, _ = grow(n)
    return tree


def maxsteps_oracle(t: Tree, strategy) -> int:
    """Exhaustive game search: the longest game over all leaf choices.

    Plain recursion over (position, round); positions are canonicalized and
    memoized, which only collapses states the move relation cannot tell
    apart.  Independent of the solver and of the successors helper.
    """
    strategy = tuple(strategy)
    memo: dict = {}

    def go(tree: Tree, i: int) -> int:
        if tree.is_root_only:
            return 0
        key = (tree, i)
        if key in memo:
            return memo[key]
        if i >= len(strategy):
            raise RuntimeError("oracle ran out of strategy")
        best = 0
        for path in leaf_paths(tree):
            nxt = canonical(apply_move(tree, path, strategy[i]))
            best = max(best, go(nxt, i + 1))
        memo[key] = 1 + best
        return 1 + best

    return go(canonical(t), 0)
