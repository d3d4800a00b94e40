"""Extended Euclidean algorithm producing a self-certifying result.

Each step divides a pair (m, n) into the quotient and the smaller pair
(n, m mod n); ranks compare the second component only, which descends
unconditionally because m mod n < n.  The combine step rebuilds not just
the gcd g but a full certificate (g, k, l, s, t) with

    g * k = m,    g * l = n,    s * k + t * l = 1,

so that g divides both inputs and, since s*m + t*n = g, every common
divisor of m and n divides g.  :func:`verify_cert` re-checks the three
identities by plain integer arithmetic, with no reference to how the
certificate was computed.  All arithmetic is exact (Python integers).
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import DEFAULT_FUSE, Algebra, Node, RankedCoalgebra, SolveConfig, solve
from .errors import ArityMismatch
from .orders import SecondOfPair


@dataclass(frozen=True)
class Base:
    """Terminal layer: the second component reached zero."""

    value: int


@dataclass(frozen=True)
class Step:
    """Recursive layer carrying the integer quotient of the division."""

    quotient: int


@dataclass(frozen=True)
class BezoutCert:
    """Greatest common divisor with cofactors and Bezout witnesses.

    For input (m, n): g*k == m, g*l == n, and s*k + t*l == 1.
    """

    g: int
    k: int
    l: int
    s: int
    t: int


def gcd_divide(pair) -> Node:
    m, n = pair
    if n == 0:
        return Node(Base(m))
    return Node(Step(m // n), ((n, m % n),))


def gcd_rank(pair) -> SecondOfPair:
    return SecondOfPair(pair[0], pair[1])


def gcd_combine(label, certs) -> BezoutCert:
    """Base(m) yields (m, 1, 0, 1, 0); Step(q) rewires the child certificate.

    The step update (g, k, l, s, t) -> (g, k*q + l, k, t, s - t*q) keeps all
    three certificate identities intact.
    """
    if isinstance(label, Base):
        if certs:
            raise ArityMismatch(label, 0, len(certs))
        return BezoutCert(label.value, 1, 0, 1, 0)
    if isinstance(label, Step):
        if len(certs) != 1:
            raise ArityMismatch(label, 1, len(certs))
        c = certs[0]
        q = label.quotient
        return BezoutCert(c.g, c.k * q + c.l, c.k, c.t, c.s - c.t * q)
    raise ArityMismatch(label, 0, len(certs))


GCD_COALGEBRA = RankedCoalgebra(gcd_divide, gcd_rank)
GCD_ALGEBRA = Algebra(gcd_combine)


def gcd(m: int, n: int, *, trace: bool = False, fuse: int = DEFAULT_FUSE):
    """Certificate for the greatest common divisor of two naturals.

    gcd(0, 0) yields the certificate (0, 1, 0, 1, 0), forced by the base
    case: every natural divides 0, and the rank argument bottoms out at g=0.
    """
    if m < 0 or n < 0:
        raise ValueError("gcd is defined on naturals")
    cfg = SolveConfig(trace=trace, fuse=fuse)
    return solve(GCD_COALGEBRA, GCD_ALGEBRA, (m, n), cfg)


def verify_cert(m: int, n: int, cert: BezoutCert) -> bool:
    """Check g*k == m, g*l == n, and s*k + t*l == 1 by direct arithmetic."""
    return (
        cert.g * cert.k == m
        and cert.g * cert.l == n
        and cert.s * cert.k + cert.t * cert.l == 1
    )
