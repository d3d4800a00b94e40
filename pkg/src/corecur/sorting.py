"""Quicksort and Mergesort as divide/combine instances, with correctness checkers.

Both sorts run through the generic solver with the list length as rank.
Quicksort pivots on the head of the list and sends duplicates of the pivot
left (split by <= / >); Mergesort splits at the floor midpoint and merges
stably.  The checkers make correctness decidable after the fact: sortedness
plus multiset preservation for outputs, and the split condition for every
divide step.

The divide/combine functions are generic over any totally ordered element
type.  :func:`quicksort` additionally switches to a vectorized twin of the
same triple (numpy int64 partition/concatenation) for large integer inputs,
where per-element Python costs dominate; both routes are equivalence-tested
against each other and against the builtin sort.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from heapq import merge as _stable_merge

import numpy as np

from .engine import DEFAULT_FUSE, Algebra, Node, RankedCoalgebra, SolveConfig, solve
from .errors import ArityMismatch
from .orders import Nat

_VECTOR_MIN = 512  # below this, numpy call overhead outweighs the vector win


@dataclass(frozen=True)
class Pivot:
    """Non-empty quicksort layer: the pivot taken from the head of the list."""

    value: object


@dataclass(frozen=True)
class Empty:
    """Empty-list layer shared by both sorts."""


@dataclass(frozen=True)
class Single:
    """Singleton mergesort layer carrying the sole element."""

    value: object


@dataclass(frozen=True)
class Split:
    """Mergesort layer for lists of length two or more."""


def multiset(values) -> Counter:
    """The multiset of elements of a finite sequence."""
    return Counter(values)


# --- quicksort -------------------------------------------------------------

def qs_divide(w) -> Node:
    """Split off the head pivot; children keep original order, <= goes left."""
    if len(w) == 0:
        return Node(Empty())
    p = w[0]
    rest = w[1:]
    left = [x for x in rest if x <= p]
    right = [x for x in rest if x > p]
    return Node(Pivot(p), (left, right))


def qs_combine(label, outputs) -> list:
    """Concatenate sorted left part, pivot, sorted right part."""
    if isinstance(label, Empty):
        if outputs:
            raise ArityMismatch(label, 0, len(outputs))
        return []
    if isinstance(label, Pivot):
        if len(outputs) != 2:
            raise ArityMismatch(label, 2, len(outputs))
        left, right = outputs
        return list(left) + [label.value] + list(right)
    raise ArityMismatch(label, 0, len(outputs))


def qs_rank(w) -> Nat:
    return Nat(len(w))


QS_COALGEBRA = RankedCoalgebra(qs_divide, qs_rank)
QS_ALGEBRA = Algebra(qs_combine)


def _qs_divide_ints(w: np.ndarray) -> Node:
    if len(w) == 0:
        return Node(Empty())
    p = w[0]
    rest = w[1:]
    mask = rest <= p
    return Node(Pivot(int(p)), (rest[mask], rest[~mask]))


def _qs_combine_ints(label, outputs) -> np.ndarray:
    if isinstance(label, Empty):
        if outputs:
            raise ArityMismatch(label, 0, len(outputs))
        return _EMPTY_INTS
    if len(outputs) != 2:
        raise ArityMismatch(label, 2, len(outputs))
    left, right = outputs
    return np.concatenate((left, np.array([label.value], dtype=np.int64), right))


_EMPTY_INTS = np.empty(0, dtype=np.int64)
_QS_INTS_COALGEBRA = RankedCoalgebra(_qs_divide_ints, qs_rank)
_QS_INTS_ALGEBRA = Algebra(_qs_combine_ints)


def quicksort(w, *, trace: bool = False, fuse: int = DEFAULT_FUSE):
    """The sorted permutation of ``w`` via the head-pivot recursion."""
    items = list(w)
    cfg = SolveConfig(trace=trace, fuse=fuse)
    if len(items) >= _VECTOR_MIN and all(type(x) is int for x in items):
        try:
            arr = np.asarray(items, dtype=np.int64)
        except OverflowError:
            arr = None
        if arr is not None:
            out = solve(_QS_INTS_COALGEBRA, _QS_INTS_ALGEBRA, arr, cfg)
            if trace:
                out, call_trace = out
                return out.tolist(), call_trace
            return out.tolist()
    out = solve(QS_COALGEBRA, QS_ALGEBRA, items, cfg)
    return out


# --- mergesort ---------------------------------------------------------------

def ms_divide(w) -> Node:
    """Empty and singleton lists are leaves; longer lists split at the midpoint."""
    n = len(w)
    if n == 0:
        return Node(Empty())
    if n == 1:
        return Node(Single(w[0]))
    mid = n // 2
    return Node(Split(), (list(w[:mid]), list(w[mid:])))


def ms_combine(label, outputs) -> list:
    if isinstance(label, Empty):
        if outputs:
            raise ArityMismatch(label, 0, len(outputs))
        return []
    if isinstance(label, Single):
        if outputs:
            raise ArityMismatch(label, 0, len(outputs))
        return [label.value]
    if isinstance(label, Split):
        if len(outputs) != 2:
            raise ArityMismatch(label, 2, len(outputs))
        return list(_stable_merge(outputs[0], outputs[1]))
    raise ArityMismatch(label, 0, len(outputs))


MS_COALGEBRA = RankedCoalgebra(ms_divide, qs_rank)
MS_ALGEBRA = Algebra(ms_combine)


def mergesort(w, *, trace: bool = False, fuse: int = DEFAULT_FUSE):
    """The sorted permutation of ``w`` via midpoint splitting and stable merge."""
    cfg = SolveConfig(trace=trace, fuse=fuse)
    return solve(MS_COALGEBRA, MS_ALGEBRA, list(w), cfg)


# --- checkers ----------------------------------------------------------------

def verify_split(parent, node: Node) -> bool:
    """Audit one quicksort divide step against its input list.

    An Empty layer must come from the empty list.  A Pivot layer must put
    exactly the <= elements left and the > elements right, and the two
    children plus the pivot must form the parent's multiset.
    """
    label = node.label
    if isinstance(label, Empty):
        return len(parent) == 0 and len(node.children) == 0
    if not isinstance(label, Pivot) or len(node.children) != 2:
        return False
    p = label.value
    left, right = node.children
    if any(x > p for x in left) or any(x <= p for x in right):
        return False
    return multiset(left) + multiset([p]) + multiset(right) == multiset(parent)


def verify_sorted_permutation(inp, out) -> bool:
    """True iff ``out`` is non-decreasing and has the same multiset as ``inp``."""
    ordered = all(a <= b for a, b in zip(out, out[1:]))
    return ordered and multiset(inp) == multiset(out)
