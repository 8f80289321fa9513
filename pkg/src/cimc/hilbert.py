"""Hilbert series of K[x1..x4]/I for monomial ideals I.

Numerators are always taken over (1-t)^4 and stored as integer
coefficient lists, ``coeffs[k]`` being the coefficient of t^k.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .ring import NVARS, Monomial, divides, format_monomial, mono_div, mono_gcd, parse_monomial

# ---------------------------------------------------------------------------
# univariate integer polynomials as coefficient lists
# ---------------------------------------------------------------------------


def _trim(p: list) -> list:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p or [0]


def poly_add(p, q):
    n = max(len(p), len(q))
    return _trim([(p[k] if k < len(p) else 0) + (q[k] if k < len(q) else 0) for k in range(n)])


def poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def poly_shift(p, k):
    """t^k * p"""
    return _trim([0] * k + list(p))


def one_minus_t_power(e: int) -> list:
    """1 - t^e"""
    p = [0] * (e + 1)
    p[0] += 1
    p[e] -= 1
    return _trim(p)


def divide_one_minus_t(p: Sequence[int], times: int = 1) -> list:
    """Exact division by (1-t)^times; raises if it does not divide."""
    q = list(p)
    for _ in range(times):
        # p = (1-t) r  <=>  r_k = p_0 + ... + p_k, and the full sum is 0
        if sum(q) != 0:
            raise ValueError("quotient not 1-dimensional: (1-t) does not divide the numerator")
        acc, r = 0, []
        for c in q[:-1]:
            acc += c
            r.append(acc)
        q = _trim(r) if r else [0]
    return q


def series_coefficients(p: Sequence[int], denom_power: int, k_max: int) -> list:
    """Coefficients 0..k_max of p(t)/(1-t)^denom_power."""
    c = [p[k] if k < len(p) else 0 for k in range(k_max + 1)]
    for _ in range(denom_power):
        acc = 0
        for k in range(k_max + 1):
            acc += c[k]
            c[k] = acc
    return c


# ---------------------------------------------------------------------------
# monomial ideals
# ---------------------------------------------------------------------------


def minimal_monomials(mons: Iterable[Monomial]) -> tuple:
    uniq = sorted({tuple(m) for m in mons}, key=lambda m: (sum(m), m))
    out = []
    for m in uniq:
        if not any(divides(g, m) for g in out):
            out.append(m)
    return tuple(sorted(out))


@dataclass(frozen=True, init=False)
class MonomialIdeal:
    """A monomial ideal stored by its minimal generators, sorted."""

    gens: tuple

    def __init__(self, gens: Iterable[Monomial] = ()):
        mons = [tuple(int(e) for e in m) for m in gens]
        for m in mons:
            if len(m) != NVARS or any(e < 0 for e in m):
                raise ValueError(f"bad monomial {m!r}")
        object.__setattr__(self, "gens", minimal_monomials(mons))

    @classmethod
    def parse(cls, text: str) -> "MonomialIdeal":
        parts = [p for p in text.replace(";", ",").split(",") if p.strip()]
        return cls(parse_monomial(p) for p in parts)

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def contains(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.gens)

    def is_unit(self) -> bool:
        return (0,) * NVARS in self.gens

    def add(self, m: Monomial) -> "MonomialIdeal":
        return MonomialIdeal(self.gens + (tuple(m),))

    def __str__(self):
        return "<" + ", ".join(format_monomial(g) for g in self.gens) + ">"


def colon_by_monomial(I: MonomialIdeal, q: Monomial) -> MonomialIdeal:
    """I : <q>, generated by g / gcd(g, q)."""
    return MonomialIdeal(mono_div(g, mono_gcd(g, q)) for g in I.gens)


def _pure_power_numerator(gens) -> list | None:
    p = [1]
    for g in gens:
        support = [e for e in g if e]
        if len(support) != 1:
            return None
        p = poly_mul(p, one_minus_t_power(support[0]))
    return p


def hilbert_numerator(I: MonomialIdeal) -> list:
    """Numerator p(t) with HS(K[x1..x4]/I) = p(t) / (1-t)^4.

    Splits off the last generator q of I = <J, q>:
    p(I) = p(J) - t^deg(q) p(J : q).
    """
    memo: dict = {}

    def rec(gens: tuple) -> list:
        if not gens:
            return [1]
        if (0,) * NVARS in gens:
            return [0]
        hit = memo.get(gens)
        if hit is not None:
            return hit
        p = _pure_power_numerator(gens)
        if p is None:
            J = gens[:-1]
            q = gens[-1]
            colon = minimal_monomials(mono_div(g, mono_gcd(g, q)) for g in J)
            p = poly_add(rec(J), [-c for c in poly_shift(rec(colon), sum(q))])
        memo[gens] = p
        return p

    return rec(I.gens)


def reduced_numerator(p: Sequence[int], krull_dim: int = 1) -> list:
    """Numerator over (1-t)^krull_dim, i.e. p / (1-t)^(4 - krull_dim)."""
    return divide_one_minus_t(p, NVARS - krull_dim)


def hf_values(p: Sequence[int], k_max: int, krull_dim: int = 1) -> list:
    """Hilbert function values H(0..k_max) of a 1-dimensional quotient."""
    if krull_dim != 1:
        raise ValueError("only one-dimensional quotients are supported")
    return series_coefficients(reduced_numerator(p, krull_dim), krull_dim, k_max)


def is_nondecreasing(values: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(values, values[1:]))


def multiplicity(p: Sequence[int], krull_dim: int = 1) -> int:
    """Value of the reduced numerator at t = 1."""
    if krull_dim != 1:
        raise ValueError("only one-dimensional quotients are supported")
    return sum(reduced_numerator(p, krull_dim))
