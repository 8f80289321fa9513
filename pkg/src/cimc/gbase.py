"""Standard bases for local orders (Mora) and Groebner bases for global orders.

All arithmetic stays in the integers: reductions scale by leading
coefficients instead of dividing, and stored basis elements are made
primitive with a positive leading coefficient.  On binomial input the
leading coefficients are always 1 and nothing is ever scaled.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .hilbert import MonomialIdeal
from .ring import (
    MonomialOrder,
    Polynomial,
    coprime,
    degree,
    divides,
    ecart,
    leading_monomial,
    least_homogeneous_summand,
    mono_div,
    mono_lcm,
)

DEFAULT_PAIR_LIMIT = 20000


class CompletionLimitError(RuntimeError):
    """The pair queue exceeded the configured limit; almost certainly a bug."""


class BinomialityError(ArithmeticError):
    """A reduction of binomial input produced something that is not a binomial."""


def pair_limit(explicit: int | None = None) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get("CIMC_PAIR_LIMIT")
    return int(env) if env else DEFAULT_PAIR_LIMIT


def _lead(order, f):
    m = leading_monomial(order, f)
    return m, f.terms[m]


def spoly(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """x^(l-LM f) f - (lc f / lc g) x^(l-LM g) g with l = lcm(LM f, LM g).

    If lc g does not divide lc f both sides are scaled by lc g instead.
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("spoly of a zero polynomial")
    mf, cf = _lead(order, f)
    mg, cg = _lead(order, g)
    lcm = mono_lcm(mf, mg)
    if cf % cg == 0:
        return f.shift(mono_div(lcm, mf)) - g.shift(mono_div(lcm, mg), cf // cg)
    return f.shift(mono_div(lcm, mf), cg) - g.shift(mono_div(lcm, mg), cf)


def _reduce_step(h, g, order):
    """Cancel LT(h) with a multiple of g (LM g divides LM h)."""
    mh, ch = _lead(order, h)
    mg, cg = _lead(order, g)
    q = mono_div(mh, mg)
    if ch % cg == 0:
        return h - g.shift(q, ch // cg)
    return h * cg - g.shift(q, ch)


def mora_nf(f: Polynomial, G, order: MonomialOrder) -> Polynomial:
    """Weak normal form of f with respect to G under a local order.

    Among reducers whose leading monomial divides LM(h) the one of least
    ecart is used (earliest on ties); h itself joins the reducer set when
    it has smaller ecart than the chosen reducer.
    """
    if not order.is_local:
        raise ValueError("mora_nf needs a local order")
    h = f
    T = [(g, ecart(order, g), leading_monomial(order, g)) for g in G if not g.is_zero()]
    while not h.is_zero():
        mh = leading_monomial(order, h)
        best = None
        for entry in T:
            if divides(entry[2], mh) and (best is None or entry[1] < best[1]):
                best = entry
        if best is None:
            break
        eh = ecart(order, h)
        if best[1] > eh:
            T.append((h, eh, mh))
        h = _reduce_step(h, best[0], order)
    return h


def full_reduce(f: Polynomial, G, order: MonomialOrder) -> Polynomial:
    """Remainder of f on division by G under a global order (all terms reduced)."""
    if order.is_local:
        raise ValueError("full_reduce needs a global order")
    leads = [(g, leading_monomial(order, g)) for g in G if not g.is_zero()]
    h = f
    rem = Polynomial()
    while not h.is_zero():
        mh, ch = _lead(order, h)
        for g, mg in leads:
            if divides(mg, mh):
                cg = g.terms[mg]
                if ch % cg:
                    h = h * cg
                    rem = rem * cg
                h = _reduce_step(h, g, order)
                break
        else:
            rem = rem + Polynomial.monomial(mh, ch)
            h = h - Polynomial.monomial(mh, ch)
    return rem


# ---------------------------------------------------------------------------
# completion
# ---------------------------------------------------------------------------


def _check_binomial(h: Polynomial, what: str):
    if len(h) > 2 or (len(h) == 2 and sorted(h.terms.values()) != [-1, 1]):
        raise BinomialityError(f"{what} produced {h}, which is not a +-1 binomial")


class _PairQueue:
    """Normal strategy: smallest lcm degree first, then insertion order."""

    def __init__(self):
        self.items = []
        self.count = 0

    def push(self, i, j, lcm):
        self.items.append((degree(lcm), self.count, i, j))
        self.count += 1

    def pop(self):
        k = min(range(len(self.items)), key=lambda t: self.items[t][:2])
        return self.items.pop(k)

    def __bool__(self):
        return bool(self.items)


@dataclass
class StandardBasis:
    order: MonomialOrder
    elements: list
    source: list = field(default_factory=list)

    def leading_monomials(self) -> list:
        return [leading_monomial(self.order, f) for f in self.elements]

    def leading_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.leading_monomials())

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


@dataclass
class GroebnerBasis:
    order: MonomialOrder
    elements: list

    def leading_monomials(self) -> list:
        return [leading_monomial(self.order, f) for f in self.elements]

    def leading_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.leading_monomials())

    def reduce(self, f: Polynomial) -> Polynomial:
        return full_reduce(f, self.elements, self.order)

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _complete(gens, order, normal_form, limit, binomial):
    basis = []
    for g in gens:
        if g.is_zero():
            continue
        g = g.primitive(order)
        if g not in basis:
            basis.append(g)
    if not basis:
        raise ValueError("cannot complete an empty generator list")
    leads = [leading_monomial(order, g) for g in basis]
    queue = _PairQueue()
    for j in range(len(basis)):
        for i in range(j):
            queue.push(i, j, mono_lcm(leads[i], leads[j]))
    processed = 0
    while queue:
        _, _, i, j = queue.pop()
        processed += 1
        if processed > limit:
            raise CompletionLimitError(
                f"more than {limit} S-pairs processed (basis size {len(basis)}); "
                "raise CIMC_PAIR_LIMIT if this is expected"
            )
        if coprime(leads[i], leads[j]):
            continue
        h = normal_form(spoly(basis[i], basis[j], order), basis, order)
        if binomial:
            _check_binomial(h, f"S-pair ({i}, {j})")
        if h.is_zero():
            continue
        h = h.primitive(order)
        basis.append(h)
        leads.append(leading_monomial(order, h))
        k = len(basis) - 1
        for i2 in range(k):
            queue.push(i2, k, mono_lcm(leads[i2], leads[k]))
    return basis


def standard_basis(gens, order: MonomialOrder, limit: int | None = None) -> StandardBasis:
    """Complete gens to a standard basis under a local order (Mora's algorithm)."""
    if not order.is_local:
        raise ValueError("standard_basis needs a local order")
    gens = list(gens)
    binomial = all(len(g) <= 2 for g in gens)
    elements = _complete(gens, order, mora_nf, pair_limit(limit), binomial)
    return StandardBasis(order, elements, gens)


def tangent_ideal(sb: StandardBasis) -> list:
    """Least homogeneous summands of a standard basis; they generate I_*."""
    out = []
    for f in sb.elements:
        s = least_homogeneous_summand(f).primitive(sb.order)
        if s not in out:
            out.append(s)
    return out


def _interreduce(basis, order):
    """Reduced Groebner basis from any Groebner basis."""
    basis = sorted(basis, key=lambda f: order.key(leading_monomial(order, f)))
    leads = [leading_monomial(order, f) for f in basis]
    keep = [
        f
        for k, f in enumerate(basis)
        if not any(divides(leads[j], leads[k]) and (leads[j] != leads[k] or j < k)
                   for j in range(len(basis)) if j != k)
    ]
    out = []
    for k, f in enumerate(keep):
        # LM(f) is not divisible by any other lead, so it survives as is
        out.append(full_reduce(f, keep[:k] + keep[k + 1:], order).primitive(order))
    out.sort(key=lambda f: order.key(leading_monomial(order, f)))
    return out


def buchberger(gens, order: MonomialOrder, limit: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis under a global order."""
    if order.is_local:
        raise ValueError("buchberger needs a global order")
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return GroebnerBasis(order, [])
    basis = _complete(gens, order, full_reduce, pair_limit(limit), binomial=False)
    return GroebnerBasis(order, _interreduce(basis, order))


def minimalize_homogeneous(gens, order: MonomialOrder) -> list:
    """A minimal generating subset of a homogeneous ideal.

    Generators are visited by increasing degree and kept only when they are
    not in the ideal of those kept so far, which by graded Nakayama gives a
    set of minimal size.
    """
    if order.is_local:
        order = order.to_global()
    cands = []
    for g in gens:
        if g.is_zero():
            continue
        if not g.is_homogeneous():
            raise ValueError(f"{g} is not homogeneous")
        g = g.primitive(order)
        if g not in cands:
            cands.append(g)
    cands.sort(key=lambda f: (f.degree(), len(f), order.key(leading_monomial(order, f))))
    kept = []
    gb = None
    for g in cands:
        if gb is not None and gb.contains(g):
            continue
        kept.append(g)
        gb = buchberger(kept, order)
    return kept


def ideal_equal(F, G, order: MonomialOrder) -> bool:
    """Do F and G generate the same ideal?  (global order)"""
    gf, gg = buchberger(F, order), buchberger(G, order)
    return all(gf.contains(g) for g in G) and all(gg.contains(f) for f in F)
