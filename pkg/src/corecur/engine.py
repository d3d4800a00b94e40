"""Generic solver for divide/combine recursion with runtime-checked descent.

A recursion is specified as a :class:`RankedCoalgebra` (how to split an
input into a label plus child inputs, and how to rank an input) together
with an :class:`Algebra` (how to combine the children's results under that
label).  :func:`solve` unfolds the divide step to a finite call tree and
folds it back with the combine step.  While unfolding it checks that every
child's rank is strictly below its parent's, so a mis-specified divide step
fails fast with :class:`RankViolation` instead of diverging.

The solver uses an explicit work stack, never the host call stack, so call
trees of depth 100k and beyond are fine.  It also drops its reference to a
child input the moment the child is dispatched; on degenerate inputs whose
call tree is one long chain this keeps live memory proportional to the
input, not to the square of it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterator

from .errors import FuseExceeded, RankViolation
from .orders import Rank, less

DEFAULT_FUSE = 1_000_000


@dataclass(frozen=True)
class Node:
    """One layer of a recursion: an opaque label plus ordered child inputs.

    The label is carried untouched from the divide step to the combine
    step; the children are the inputs recursed on, in order.
    """

    label: Any
    children: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))


@dataclass(frozen=True)
class RankedCoalgebra:
    """A divide step together with the rank it is required to decrease."""

    divide: Callable[[Any], Node]
    rank: Callable[[Any], Rank]


@dataclass(frozen=True)
class Algebra:
    """A combine step folding a label and the child outputs into one output."""

    combine: Callable[[Any, list], Any]


@dataclass(frozen=True)
class SolveConfig:
    """Knobs for one :func:`solve` invocation.

    memoize     reuse outputs for repeated keys; requires `key`.
    key         canonical, hashable encoding of an input (the engine never
                invents structural hashing for opaque inputs).
    enforce_rank  check strict rank descent at every expansion (default on).
    fuse        hard budget on the number of divide expansions.
    trace       record the expansion tree as a CallTrace.
    on_expand   callback invoked as on_expand(input, node) at each expansion;
                used by instrumented checks such as the sorting split audit.
    """

    memoize: bool = False
    key: Callable[[Any], Any] | None = None
    enforce_rank: bool = True
    fuse: int = DEFAULT_FUSE
    trace: bool = False
    on_expand: Callable[[Any, Node], None] | None = None

    def __post_init__(self):
        if self.fuse <= 0:
            raise ValueError(f"fuse must be positive, got {self.fuse}")
        if self.memoize and self.key is None:
            raise ValueError("memoize=True requires a key function")


@dataclass
class TraceNode:
    """One expanded input: its key, its rank, and how many children it had."""

    key: Any
    rank: Rank | None
    child_count: int
    children: list["TraceNode"] = field(default_factory=list)


@dataclass
class CallTrace:
    """The expansion tree of one solve invocation, in expansion order."""

    root: TraceNode

    def walk(self) -> Iterator[tuple[int, TraceNode]]:
        stack = [(0, self.root)]
        while stack:
            depth, node = stack.pop()
            yield depth, node
            stack.extend((depth + 1, child) for child in reversed(node.children))

    def dump(self) -> str:
        """Indented text form, one node per line: depth, key, rank."""
        lines = [
            "  " * depth + f"{depth} {node.key} {node.rank}"
            for depth, node in self.walk()
        ]
        return "\n".join(lines) + "\n"


def guard(node: Node, parent_rank: Rank, rank: Callable[[Any], Rank], parent_key=None) -> Node:
    """Return ``node`` unchanged iff every child ranks strictly below ``parent_rank``.

    The first offending child raises :class:`RankViolation`.
    """
    for child in node.children:
        child_rank = rank(child)
        if not less(child_rank, parent_rank):
            raise RankViolation(parent_key, parent_rank, child_rank)
    return node


class _Frame:
    __slots__ = ("label", "children", "outputs", "next_child", "memo_key", "trace")

    def __init__(self, label, children, memo_key, trace):
        self.label = label
        self.children = children
        self.outputs = []
        self.next_child = 0
        self.memo_key = memo_key
        self.trace = trace


def solve(coalg: RankedCoalgebra, alg: Algebra, value, cfg: SolveConfig | None = None):
    """Unfold ``value`` with the divide step and fold back with the combine step.

    Returns the combined output, or the pair ``(output, CallTrace)`` when
    ``cfg.trace`` is set.  With ``cfg.memoize``, each distinct key is divided
    exactly once and repeated keys reuse the cached output.

    Raises :class:`RankViolation` when a child fails to descend (with
    ``enforce_rank`` on), and :class:`FuseExceeded` when the expansion budget
    runs out.
    """
    if cfg is None:
        cfg = _DEFAULT_CONFIG
    divide = coalg.divide
    rank_of = coalg.rank
    combine = alg.combine
    key_of = cfg.key
    memo = {} if cfg.memoize else None
    fuse = cfg.fuse
    expanded = 0

    def open_frame(inp):
        nonlocal expanded
        if expanded >= fuse:
            raise FuseExceeded(fuse)
        expanded += 1
        node = divide(inp)
        if cfg.enforce_rank:
            guard(node, rank_of(inp), rank_of, parent_key=inp)
        if cfg.on_expand is not None:
            cfg.on_expand(inp, node)
        trace = None
        if cfg.trace:
            trace_key = key_of(inp) if key_of is not None else repr(inp)
            trace = TraceNode(trace_key, rank_of(inp), len(node.children))
        memo_key = key_of(inp) if memo is not None else None
        return _Frame(node.label, list(node.children), memo_key, trace)

    root = open_frame(value)
    trace_root = root.trace
    stack = [root]
    result = None
    while stack:
        frame = stack[-1]
        i = frame.next_child
        if i == len(frame.children):
            stack.pop()
            out = combine(frame.label, frame.outputs)
            if memo is not None:
                memo[frame.memo_key] = out
            if stack:
                stack[-1].outputs.append(out)
            else:
                result = out
            continue
        child = frame.children[i]
        frame.children[i] = None  # release: bounds live memory on deep chains
        frame.next_child = i + 1
        if memo is not None:
            cached = memo.get(key_of(child), _MISSING)
            if cached is not _MISSING:
                frame.outputs.append(cached)
                continue
        child_frame = open_frame(child)
        if frame.trace is not None and child_frame.trace is not None:
            frame.trace.children.append(child_frame.trace)
        stack.append(child_frame)

    if cfg.trace:
        return result, CallTrace(trace_root)
    return result


_DEFAULT_CONFIG = SolveConfig()
_MISSING = object()
