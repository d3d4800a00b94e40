"""Exception types shared across the library.

Every error raised by corecur derives from :class:`CorecurError`, so callers
(including the CLI) can catch one base class and report the error name.
"""


def _short(value, limit=80):
    text = repr(value)
    return text if len(text) <= limit else text[: limit - 3] + "..."


class CorecurError(Exception):
    """Base class for all corecur errors."""


class DomainMismatch(CorecurError):
    """Two ranks from different well-founded domains were compared."""

    def __init__(self, left, right):
        super().__init__(f"cannot compare {_short(left)} with {_short(right)}")
        self.left = left
        self.right = right


class RankViolation(CorecurError):
    """A divide step produced a child whose rank does not strictly descend."""

    def __init__(self, parent_key, parent_rank, child_rank):
        super().__init__(
            f"rank did not descend below {_short(parent_key)}: "
            f"child rank {child_rank} is not strictly below {parent_rank}"
        )
        self.parent_key = parent_key
        self.parent_rank = parent_rank
        self.child_rank = child_rank


class FuseExceeded(CorecurError):
    """The node budget was exhausted before the recursion finished."""

    def __init__(self, limit):
        super().__init__(f"node budget of {limit} exhausted")
        self.limit = limit


class CycleFound(CorecurError):
    """A graph that had to be acyclic contains a cycle."""

    def __init__(self, cycle):
        super().__init__(f"cycle: {' -> '.join(str(n) for n in cycle)}")
        self.cycle = list(cycle)


class ArityMismatch(CorecurError):
    """A combine step received the wrong number of child results."""

    def __init__(self, label, expected, got):
        super().__init__(f"label {_short(label)} expects {expected} children, got {got}")
        self.label = label
        self.expected = expected
        self.got = got


class UnknownTerminal(CorecurError):
    """A word contains a symbol outside the grammar's terminal alphabet."""

    def __init__(self, symbol):
        super().__init__(f"symbol {symbol!r} is not a terminal of the grammar")
        self.symbol = symbol


class OracleBoundExceeded(CorecurError):
    """The brute-force derivability oracle was asked about a word beyond its bound."""

    def __init__(self, length, bound):
        super().__init__(f"word of length {length} exceeds oracle bound {bound}")
        self.length = length
        self.bound = bound


class StrategyExhausted(CorecurError):
    """A hydra game ran out of strategy entries before reaching the bare root."""

    def __init__(self, residual):
        super().__init__(f"strategy exhausted with residual tree {residual!s}")
        self.residual = residual


class NotALeaf(CorecurError):
    """A leaf path did not resolve to a childless node."""

    def __init__(self, path):
        super().__init__(f"path {list(path)} does not lead to a leaf")
        self.path = tuple(path)


class RootOnly(CorecurError):
    """No move is possible on a tree consisting only of the root."""

    def __init__(self):
        super().__init__("tree is root-only; the game is already over")


class GrammarError(CorecurError):
    """A grammar file is malformed or not in Chomsky normal form."""

    def __init__(self, line_no, reason):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


class GraphFormatError(CorecurError):
    """A graph file is malformed."""

    def __init__(self, line_no, reason):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason
