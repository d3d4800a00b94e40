"""CYK recognition for grammars in Chomsky normal form.

Recognition of a non-empty word w computes the set of nonterminals that
derive w.  The divide step lists both halves of every proper split of w
(2*(|w|-1) children, ordered left-right per split position); the combine
step fires unit rules on single symbols and binary rules across split
pairs.  Run through the solver with memoization on (offset, length) spans,
each of the |w|(|w|+1)/2 distinct subwords is divided exactly once, giving
the classic cubic total work.

:func:`derives_oracle` is an independent brute-force check of derivability
by exhaustive recursion over rules and splits, deliberately unmemoized and
bounded; cyk results are tested against it wholesale.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import DEFAULT_FUSE, Algebra, Node, RankedCoalgebra, SolveConfig, solve
from .errors import ArityMismatch, GrammarError, OracleBoundExceeded, UnknownTerminal
from .orders import Nat


@dataclass(frozen=True)
class CNFGrammar:
    """A context-free grammar with only P -> Q T and P -> 'a' rules."""

    nonterminals: frozenset[str]
    terminals: frozenset[str]
    binary_rules: frozenset[tuple[str, str, str]]
    unit_rules: frozenset[tuple[str, str]]
    start: str

    def __post_init__(self):
        object.__setattr__(self, "nonterminals", frozenset(self.nonterminals))
        object.__setattr__(self, "terminals", frozenset(self.terminals))
        object.__setattr__(self, "binary_rules", frozenset(self.binary_rules))
        object.__setattr__(self, "unit_rules", frozenset(self.unit_rules))
        overlap = self.nonterminals & self.terminals
        if overlap:
            raise ValueError(f"nonterminals and terminals overlap: {sorted(overlap)}")
        for p, q, t in self.binary_rules:
            for sym in (p, q, t):
                if sym not in self.nonterminals:
                    raise ValueError(f"rule references undeclared nonterminal {sym!r}")
        for p, a in self.unit_rules:
            if p not in self.nonterminals:
                raise ValueError(f"rule references undeclared nonterminal {p!r}")
            if a not in self.terminals:
                raise ValueError(f"rule references undeclared terminal {a!r}")
        if self.start not in self.nonterminals:
            raise ValueError(f"start symbol {self.start!r} is not a declared nonterminal")


def cyk_divide(w: str) -> Node:
    """All proper splits of w, as children [u1, v1, u2, v2, ...] by position.

    A single symbol has no proper split and is a leaf.  The label carries w
    itself so the combine step knows the subword it is assembling.
    """
    if len(w) == 0:
        raise ValueError("only non-empty words are recognized")
    children = []
    for k in range(1, len(w)):
        children.append(w[:k])
        children.append(w[k:])
    return Node(w, tuple(children))


def cyk_combine(grammar: CNFGrammar, w: str, child_sets) -> frozenset:
    """Nonterminal set for w from the sets of both halves of every split."""
    if len(child_sets) != 2 * (len(w) - 1):
        raise ArityMismatch(w, 2 * (len(w) - 1), len(child_sets))
    if len(w) == 1:
        return frozenset(p for p, a in grammar.unit_rules if a == w)
    found = set()
    for pos in range(len(w) - 1):
        left, right = child_sets[2 * pos], child_sets[2 * pos + 1]
        for p, q, t in grammar.binary_rules:
            if q in left and t in right:
                found.add(p)
    return frozenset(found)


@dataclass
class CYKStats:
    """Instrumentation counters for one recognition run."""

    expansions: int = 0
    split_pairs: int = 0


def cyk_with_stats(g: CNFGrammar, w: str, *, trace: bool = False, fuse: int = DEFAULT_FUSE):
    """Like :func:`cyk` but also reports expansion and split-pair counts."""
    if len(w) == 0:
        raise ValueError("only non-empty words are recognized")
    for ch in w:
        if ch not in g.terminals:
            raise UnknownTerminal(ch)
    stats = CYKStats()

    def divide(span):
        i, ln = span
        if ln == 1:
            return Node(w[i])
        children = []
        for k in range(1, ln):
            children.append((i, k))
            children.append((i + k, ln - k))
        return Node(w[i : i + ln], tuple(children))

    def combine(label, child_sets):
        if len(label) >= 2:
            stats.split_pairs += len(label) - 1
        return cyk_combine(g, label, child_sets)

    def count(_inp, _node):
        stats.expansions += 1

    cfg = SolveConfig(
        memoize=True,
        key=lambda span: span,
        trace=trace,
        fuse=fuse,
        on_expand=count,
    )
    coalg = RankedCoalgebra(divide, lambda span: Nat(span[1]))
    result = solve(coalg, Algebra(combine), (0, len(w)), cfg)
    if trace:
        result, call_trace = result
        return result, stats, call_trace
    return result, stats


def cyk(g: CNFGrammar, w: str, *, trace: bool = False, fuse: int = DEFAULT_FUSE):
    """The set of nonterminals of g that derive the non-empty word w."""
    out = cyk_with_stats(g, w, trace=trace, fuse=fuse)
    if trace:
        result, _, call_trace = out
        return result, call_trace
    return out[0]


def accepts(g: CNFGrammar, w: str) -> bool:
    """True iff the start symbol derives w."""
    return g.start in cyk(g, w)


def derives_oracle(g: CNFGrammar, nt: str, w: str, bound: int = 12) -> bool:
    """Brute-force derivability of w from nt, by recursion on word length.

    Unit rules decide single symbols; longer words try every binary rule
    against every proper split.  No memoization on purpose: this is the
    independent check the recognizer is measured against.
    """
    if len(w) > bound:
        raise OracleBoundExceeded(len(w), bound)
    if len(w) == 0:
        return False
    if len(w) == 1:
        return (nt, w) in g.unit_rules
    return any(
        derives_oracle(g, q, w[:k], bound) and derives_oracle(g, t, w[k:], bound)
        for p, q, t in g.binary_rules
        if p == nt
        for k in range(1, len(w))
    )


def parse_grammar_file(text: str) -> CNFGrammar:
    """Parse the grammar text format.

    First significant line is ``start <NT>``; every other line is either
    ``<NT> -> <NT> <NT>`` or ``<NT> -> '<char>'``.  ``#`` starts a comment.
    Malformed or non-CNF rules fail with the line number and a reason.
    """
    start = None
    binary = set()
    unit = set()
    lhs_seen = set()
    rhs_nts = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if start is None:
            if len(tokens) != 2 or tokens[0] != "start":
                raise GrammarError(line_no, "expected 'start <NT>' before any rule")
            if not tokens[1].isidentifier():
                raise GrammarError(line_no, f"bad start symbol {tokens[1]!r}")
            start = tokens[1]
            continue
        if len(tokens) < 3 or tokens[1] != "->":
            raise GrammarError(line_no, "expected '<NT> -> ...'")
        lhs = tokens[0]
        if not lhs.isidentifier():
            raise GrammarError(line_no, f"bad nonterminal name {lhs!r}")
        rhs = tokens[2:]
        if len(rhs) == 1:
            item = rhs[0]
            if len(item) == 3 and item[0] == "'" and item[2] == "'":
                unit.add((lhs, item[1]))
                lhs_seen.add(lhs)
                continue
            raise GrammarError(
                line_no, f"single-symbol right side must be a quoted terminal, got {item!r}"
            )
        if len(rhs) == 2:
            q, t = rhs
            if not (q.isidentifier() and t.isidentifier()):
                raise GrammarError(line_no, "binary rules take two nonterminals")
            binary.add((lhs, q, t))
            lhs_seen.add(lhs)
            rhs_nts.update((q, t))
            continue
        raise GrammarError(line_no, f"rule has {len(rhs)} symbols on the right; CNF allows 2")
    if start is None:
        raise GrammarError(0, "empty grammar: missing 'start <NT>' line")
    nonterminals = lhs_seen | rhs_nts
    if start not in nonterminals:
        raise GrammarError(0, f"start symbol {start!r} does not occur in any rule")
    terminals = {a for _, a in unit}
    try:
        return CNFGrammar(
            frozenset(nonterminals),
            frozenset(terminals),
            frozenset(binary),
            frozenset(unit),
            start,
        )
    except ValueError as exc:
        raise GrammarError(0, str(exc)) from exc
