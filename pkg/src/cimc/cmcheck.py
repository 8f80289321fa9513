"""Cohen-Macaulayness of tangent cones of monomial curves.

Two routes: the closed-form inequalities available for case (A)
parameters, and a general test that the variable of least weight is a
nonzerodivisor on K[x]/I_*, read off from Hilbert series.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .gbase import buchberger, minimalize_homogeneous, standard_basis, tangent_ideal
from .hilbert import (
    hilbert_numerator,
    hf_values,
    is_nondecreasing,
    multiplicity,
    poly_mul,
    reduced_numerator,
)
from .numsg import CaseAParams, MonomialCurve, critical_exponent, kraft_case_a
from .ring import MonomialOrder, Polynomial, format_polynomial, var

CLOSED_FORM_A = "closed-form-A"
HILBERT_SERIES = "hilbert-series"


class PreconditionError(ValueError):
    """Inputs do not satisfy the standing hypotheses of a closed-form criterion."""


@dataclass
class CMReport:
    is_cm: bool
    mu: int | None
    method: str
    witness: str | None = None

    def as_dict(self) -> dict:
        return {"is_cm": self.is_cm, "mu": self.mu, "method": self.method, "witness": self.witness}


def shibuta_sufficient(mu: int) -> bool:
    """Three or four minimal generators of I_* force a CM tangent cone.

    The converse fails, so False means "no conclusion".
    """
    if mu < 3:
        raise ValueError(f"I_* has height 3, so mu >= 3 (got {mu})")
    return mu <= 4


def cm_case_a(p: CaseAParams) -> CMReport:
    """Closed-form CM test for case (A) parameters.

    Requires u2 <= a2, u3 <= a3, a3 < a4, n1 the smallest entry of the
    Kraft sequence, and a1..a4 the critical exponents of that sequence.
    """
    a1, a2, a3, a4 = p.a
    u1, u2, u3, u4 = p.u
    curve = kraft_case_a(p)
    n = curve.n
    problems = []
    if u2 > a2:
        problems.append(f"u2={u2} > a2={a2}")
    if u3 > a3:
        problems.append(f"u3={u3} > a3={a3}")
    if not a3 < a4:
        problems.append(f"a3={a3} >= a4={a4}")
    if n[0] != min(n):
        problems.append(f"n1={n[0]} is not min{n}")
    # scaling n by its gcd does not change critical exponents
    reduced = MonomialCurve(tuple(x // curve.gcd for x in n))
    crit = tuple(critical_exponent(i, reduced) for i in range(1, 5))
    if crit != p.a:
        problems.append(f"a={p.a} are not the critical exponents {crit}")
    if problems:
        raise PreconditionError("; ".join(problems))

    if u3 > 0 and u4 > 0:
        if u2 < a2:
            lhs, rhs = a4 + u4, u1 + u2 + a3 - u3
            text = f"a4+u4={lhs} <= u1+u2+a3-u3={rhs}"
        else:
            lhs, rhs = a4 + u4, u1 + a1 + a3 - u3
            text = f"a4+u4={lhs} <= u1+a1+a3-u3={rhs}"
        ok = lhs <= rhs
    elif u3 == 0:
        lhs, rhs = u4, u1 + u2
        ok = u2 == a2 or lhs <= rhs
        text = "u2=a2" if u2 == a2 else f"u4={lhs} <= u1+u2={rhs}"
    else:
        lhs, rhs = a4, u1 + u2
        ok = u2 == a2 or lhs <= rhs
        text = "u2=a2" if u2 == a2 else f"a4={lhs} <= u1+u2={rhs}"
    return CMReport(ok, None, CLOSED_FORM_A, text if ok else "violated: " + text)


def _numerator(gens, order):
    return hilbert_numerator(buchberger(gens, order).leading_ideal())


def cm_hilbert(tangent_gens, curve: MonomialCurve, priority=(4, 3, 2, 1)) -> CMReport:
    """CM test via x_m being a nonzerodivisor on K[x]/I_*, n_m = min(n).

    x_m is regular exactly when HS(K[x]/(I_* + x_m)) = (1-t) HS(K[x]/I_*).
    """
    order = MonomialOrder.degrevlex(priority)
    gens = [g for g in tangent_gens if not g.is_zero()]
    if any(not g.is_homogeneous() for g in gens):
        raise ValueError("tangent cone generators must be homogeneous")
    m = curve.min_index
    notes = []
    if list(curve.n).count(min(curve.n)) > 1:
        notes.append(f"tie for min(n); using x{m}")
    p = _numerator(gens, order)
    p_cut = _numerator(gens + [Polynomial.monomial(var(m))], order)
    expected = poly_mul(p, [1, -1])
    regular = p_cut == expected
    mu = len(minimalize_homogeneous(gens, order))
    if not regular:
        width = max(len(p_cut), len(expected))
        pad = lambda q: q + [0] * (width - len(q))  # noqa: E731
        first = next(k for k, (a, b) in enumerate(zip(pad(p_cut), pad(expected))) if a != b)
        notes.append(f"x{m} is a zero divisor on K[x]/I_* (series differ from degree {first})")
    else:
        notes.append(f"x{m} is regular on K[x]/I_*")
    return CMReport(regular, mu, HILBERT_SERIES, "; ".join(notes))


@dataclass
class TangentConeAnalysis:
    """Everything the pipeline computes for one curve and generating set."""

    curve: MonomialCurve
    generators: list
    order: MonomialOrder
    standard_basis: list
    tangent_generators: list
    minimal_tangent_generators: list
    lead_ideal: object
    numerator: list
    reduced_numerator: list
    hf_prefix: list
    multiplicity: int
    cm: CMReport
    extra: dict = field(default_factory=dict)

    @property
    def mu(self) -> int:
        return len(self.minimal_tangent_generators)

    def as_dict(self) -> dict:
        fmt = lambda fs: [format_polynomial(f) for f in fs]  # noqa: E731
        return {
            "n": list(self.curve.n),
            "generators": fmt(self.generators),
            "order": str(self.order),
            "standard_basis": [format_polynomial(f, self.order) for f in self.standard_basis],
            "standard_basis_size": len(self.standard_basis),
            "tangent_generators": fmt(self.minimal_tangent_generators),
            "mu": self.mu,
            "lead_ideal": str(self.lead_ideal),
            "hilbert_numerator": self.numerator,
            "reduced_numerator": self.reduced_numerator,
            "hf_prefix": self.hf_prefix,
            "hf_nondecreasing": is_nondecreasing(self.hf_prefix),
            "multiplicity": self.multiplicity,
            "cm": self.cm.as_dict(),
            **self.extra,
        }


def analyze_tangent_cone(curve: MonomialCurve, gens, priority=(4, 3, 2, 1), hf_terms: int | None = None):
    """Standard basis -> I_* -> lead ideal -> Hilbert data -> CM verdict."""
    curve.require_coprime()
    polys = [g.polynomial() if hasattr(g, "polynomial") else g for g in gens]
    local = MonomialOrder.local(priority)
    sb = standard_basis(polys, local)
    tangent = tangent_ideal(sb)
    glob = local.to_global()
    gb = buchberger(tangent, glob)
    lead = gb.leading_ideal()
    p = hilbert_numerator(lead)
    red = reduced_numerator(p)
    k_max = hf_terms if hf_terms is not None else max(len(red) + 2, 8)
    cm = cm_hilbert(tangent, curve, priority)
    minimal = minimalize_homogeneous(tangent, glob)
    return TangentConeAnalysis(
        curve=curve,
        generators=polys,
        order=local,
        standard_basis=sb.elements,
        tangent_generators=tangent,
        minimal_tangent_generators=minimal,
        lead_ideal=lead,
        numerator=p,
        reduced_numerator=red,
        hf_prefix=hf_values(p, k_max),
        multiplicity=multiplicity(p),
        cm=cm,
    )
