"""Well-founded rank domains and their strict-order comparison.

Three domains are built in: naturals under the usual order, pairs of
naturals ordered by their second component only, and eventually-zero
sequences of naturals under the reverse-lexicographic order.  Ranks from
different domains are incomparable and raise :class:`DomainMismatch`.

The set of domains is closed in this version; the solver only ever sees
these three tags.  New domains would need a new dataclass here plus a
branch in :func:`less`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import DomainMismatch


def _check_natural(value, what):
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise ValueError(f"{what} must be a natural number, got {value!r}")


@dataclass(frozen=True)
class Nat:
    """A natural number under the usual strict order."""

    n: int

    def __post_init__(self):
        _check_natural(self.n, "Nat payload")

    def __str__(self):
        return str(self.n)


@dataclass(frozen=True)
class SecondOfPair:
    """A pair of naturals ordered by the second component only."""

    m: int
    n: int

    def __post_init__(self):
        _check_natural(self.m, "first component")
        _check_natural(self.n, "second component")

    def __str__(self):
        return f"({self.m},{self.n})"


@dataclass(frozen=True)
class EvZeroSeq:
    """An eventually-zero sequence of naturals, reverse-lexicographically ordered.

    The payload is stored canonically with trailing zeros stripped; reading
    an index beyond the stored length yields 0.  Two sequences compare by
    the entry at the largest index where they differ.
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        for e in entries:
            _check_natural(e, "sequence entry")
        while entries and entries[-1] == 0:
            entries = entries[:-1]
        object.__setattr__(self, "entries", entries)

    def at(self, i: int) -> int:
        return self.entries[i] if i < len(self.entries) else 0

    def __str__(self):
        return "[" + ",".join(str(e) for e in self.entries) + "]"


Rank = Union[Nat, SecondOfPair, EvZeroSeq]


def less(a: Rank, b: Rank) -> bool:
    """Strict comparison of two ranks from the same domain.

    Raises :class:`DomainMismatch` when the domains differ.
    """
    if type(a) is not type(b):
        raise DomainMismatch(a, b)
    if isinstance(a, Nat):
        return a.n < b.n
    if isinstance(a, SecondOfPair):
        return a.n < b.n
    if isinstance(a, EvZeroSeq):
        if a.entries == b.entries:
            return False
        top = max(len(a.entries), len(b.entries))
        for i in range(top - 1, -1, -1):
            if a.at(i) != b.at(i):
                return a.at(i) < b.at(i)
        return False  # unreachable: canonical payloads that differ differ somewhere
    raise DomainMismatch(a, b)


def check_descent(chain) -> bool:
    """True iff the given sequence of ranks is strictly decreasing."""
    chain = list(chain)
    return all(less(b, a) for a, b in zip(chain, chain[1:]))
