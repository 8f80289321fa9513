"""Numerical semigroups in four generators and the two Kraft parametrizations."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import reduce
from typing import Sequence

from .ring import Binomial, Monomial


class NotCoprime(ValueError):
    """Raised when a sequence that must be coprime has gcd > 1."""


def gcd4(n: Sequence[int]) -> int:
    return reduce(math.gcd, (int(x) for x in n), 0)


@dataclass(frozen=True)
class MonomialCurve:
    """The curve t -> (t^n1, t^n2, t^n3, t^n4).

    The normal constructor insists on gcd(n) = 1; family scans use
    :meth:`unchecked` and filter afterwards.
    """

    n: tuple

    def __post_init__(self):
        n = tuple(int(x) for x in self.n)
        object.__setattr__(self, "n", n)
        if len(n) != 4 or any(x < 1 for x in n):
            raise ValueError(f"a curve needs four positive integers, got {n!r}")
        if getattr(self, "_check", True) and gcd4(n) != 1:
            raise NotCoprime(f"gcd{n} = {gcd4(n)} != 1")

    @classmethod
    def unchecked(cls, n: Sequence[int]) -> "MonomialCurve":
        obj = object.__new__(cls)
        object.__setattr__(obj, "_check", False)
        obj.__init__(tuple(n))
        return obj

    @property
    def gcd(self) -> int:
        return gcd4(self.n)

    @property
    def is_coprime(self) -> bool:
        return self.gcd == 1

    def require_coprime(self) -> "MonomialCurve":
        if not self.is_coprime:
            raise NotCoprime(f"gcd{self.n} = {self.gcd} != 1")
        return self

    def shifted(self, vec: Sequence[int], w: int) -> "MonomialCurve":
        return MonomialCurve.unchecked(tuple(a + w * b for a, b in zip(self.n, vec)))

    def weight(self, m: Monomial) -> int:
        return sum(e * k for e, k in zip(m, self.n))

    def contains(self, b: Binomial) -> bool:
        """True if x^plus - x^minus vanishes on the curve."""
        return b.in_lattice(self.n)

    @property
    def min_index(self) -> int:
        """1-based index of the smallest entry (smallest index on ties)."""
        return min(range(4), key=lambda i: (self.n[i], i)) + 1

    def __iter__(self):
        return iter(self.n)


# ---------------------------------------------------------------------------
# membership and critical exponents
# ---------------------------------------------------------------------------


def is_member(s: int, gens: Sequence[int]) -> bool:
    """Is s a non-negative integer combination of gens?"""
    gens = [int(g) for g in gens]
    if not gens or any(g <= 0 for g in gens):
        raise ValueError("generators must be a nonempty list of positive integers")
    if s < 0:
        return False
    if s == 0:
        return True
    g = gcd4(gens)
    if s % g:
        return False
    s //= g
    red = sorted({x // g for x in gens})
    # past min*max every integer is representable (Frobenius bound)
    if s >= red[0] * red[-1]:
        return True
    reach = bytearray(s + 1)
    reach[0] = 1
    for v in range(1, s + 1):
        for x in red:
            if x > v:
                break
            if reach[v - x]:
                reach[v] = 1
                break
    return bool(reach[s])


def critical_exponent(i: int, curve: MonomialCurve) -> int:
    """Least a >= 1 with a*n_i in the semigroup generated by the other entries."""
    if not 1 <= i <= 4:
        raise ValueError("index must be in 1..4")
    n = curve.require_coprime().n
    others = [n[j] for j in range(4) if j != i - 1]
    # a * n_i must be a multiple of gcd(others), which is coprime to n_i
    step = gcd4(others)
    a = step
    while not is_member(a * n[i - 1], others):
        a += step
    return a


# ---------------------------------------------------------------------------
# parameter records
# ---------------------------------------------------------------------------


def _tuple(x, k, name, positive):
    t = tuple(int(v) for v in x)
    if len(t) != k:
        raise ValueError(f"{name} needs {k} entries, got {t!r}")
    if any((v < 1) if positive else (v < 0) for v in t):
        kind = "positive" if positive else "non-negative"
        raise ValueError(f"{name} entries must be {kind}, got {t!r}")
    return t


@dataclass(frozen=True)
class CaseAParams:
    """Generators x1^a1-x2^a2, x3^a3-x4^a4, x1^u1 x2^u2 - x3^u3 x4^u4."""

    a: tuple
    u: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", _tuple(self.a, 4, "a", True))
        object.__setattr__(self, "u", _tuple(self.u, 4, "u", False))
        u1, u2, u3, u4 = self.u
        if u1 == u2 == 0 or u3 == u4 == 0:
            raise ValueError("need u1 or u2 nonzero and u3 or u4 nonzero")

    case = "A"

    def binomials(self) -> list:
        a1, a2, a3, a4 = self.a
        u1, u2, u3, u4 = self.u
        return [
            Binomial((a1, 0, 0, 0), (0, a2, 0, 0)),
            Binomial((0, 0, a3, 0), (0, 0, 0, a4)),
            Binomial((u1, u2, 0, 0), (0, 0, u3, u4)),
        ]

    def curve(self) -> MonomialCurve:
        return kraft_case_a(self)

    def as_dict(self) -> dict:
        return {"case": "A", "a": list(self.a), "u": list(self.u)}


@dataclass(frozen=True)
class CaseBParams:
    """Generators x1^a1-x2^a2, x3^a3-x1^u1 x2^u2, x4^a4-x1^v1 x2^v2 x3^v3."""

    a: tuple
    u: tuple
    v: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", _tuple(self.a, 4, "a", True))
        object.__setattr__(self, "u", _tuple(self.u, 2, "u", False))
        object.__setattr__(self, "v", _tuple(self.v, 3, "v", False))
        if not any(self.u):
            raise ValueError("need u1 or u2 nonzero")
        if not any(self.v):
            raise ValueError("need one of v1, v2, v3 nonzero")

    case = "B"

    def binomials(self) -> list:
        a1, a2, a3, a4 = self.a
        u1, u2 = self.u
        v1, v2, v3 = self.v
        return [
            Binomial((a1, 0, 0, 0), (0, a2, 0, 0)),
            Binomial((0, 0, a3, 0), (u1, u2, 0, 0)),
            Binomial((0, 0, 0, a4), (v1, v2, v3, 0)),
        ]

    def curve(self) -> MonomialCurve:
        return kraft_case_b(self)

    def as_dict(self) -> dict:
        return {"case": "B", "a": list(self.a), "u": list(self.u), "v": list(self.v)}


def kraft_case_a(p: CaseAParams) -> MonomialCurve:
    a1, a2, a3, a4 = p.a
    u1, u2, u3, u4 = p.u
    left = a3 * u4 + u3 * a4
    right = a1 * u2 + u1 * a2
    return MonomialCurve.unchecked((a2 * left, a1 * left, a4 * right, a3 * right))


def kraft_case_b(p: CaseBParams) -> MonomialCurve:
    a1, a2, a3, a4 = p.a
    u1, u2 = p.u
    v1, v2, v3 = p.v
    c = a1 * u2 + u1 * a2
    return MonomialCurve.unchecked(
        (a2 * a3 * a4, a1 * a3 * a4, a4 * c, v3 * c + a3 * (a1 * v2 + v1 * a2))
    )


def normalize_case_a(p: CaseAParams) -> CaseAParams:
    """Rewrite the third generator so that u2 <= a2 and u3 <= a3.

    x2^a2 may be traded for x1^a1 and x3^a3 for x4^a4 without leaving the
    ideal, so the lattice and the Kraft sequence are unchanged.
    """
    a1, a2, a3, a4 = p.a
    u1, u2, u3, u4 = p.u
    if u2 > a2:
        g, u2 = divmod(u2, a2)
        u1 += g * a1
    if u3 > a3:
        g, u3 = divmod(u3, a3)
        u4 += g * a4
    out = replace(p, u=(u1, u2, u3, u4))
    old, new = p.binomials()[2], out.binomials()[2]
    curve = kraft_case_a(out)
    if not (curve.contains(old) and curve.contains(new)) or curve != kraft_case_a(p):
        raise ArithmeticError(f"normalization of {p} changed the lattice")
    return out
