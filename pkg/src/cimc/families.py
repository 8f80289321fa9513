"""Shift families n + w*v of complete intersection monomial curves.

Each of the 22 case (A) and 22 case (B) vectors comes with the exponent
slots that grow by w in the three generating binomials.  The vector is
exactly the change of the Kraft sequence under that slot shift, which is
checked by ``kraft(shift_params(p, slots, w)) == n + w*v``.

``status`` is "stated" where the generators of the shifted ideal are
written out explicitly in the source, and "inferred" where only the
vector is given and the slots were read off the Kraft identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Sequence

from . import intlin
from .cmcheck import CMReport, PreconditionError, analyze_tangent_cone, cm_case_a
from .numsg import (
    CaseAParams,
    CaseBParams,
    MonomialCurve,
    NotCoprime,
    kraft_case_a,
    kraft_case_b,
    normalize_case_a,
)
from .ring import Binomial, Polynomial

# ---------------------------------------------------------------------------
# the tables
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Rule:
    formula: Callable
    slots: tuple
    status: str


def _a_vec(f):
    def vec(p: CaseAParams):
        a1, a2, a3, a4 = p.a
        u1, u2, u3, u4 = p.u
        A = a3 * u4 + u3 * a4
        B = a1 * u2 + u1 * a2
        return f(a1, a2, a3, a4, u1, u2, u3, u4, A, B)

    return vec


def _b_vec(f):
    def vec(p: CaseBParams):
        a1, a2, a3, a4 = p.a
        u1, u2 = p.u
        v1, v2, v3 = p.v
        C = a1 * u2 + u1 * a2
        return f(a1, a2, a3, a4, u1, u2, v1, v2, v3, C)

    return vec


S, I = "stated", "inferred"

# fmt: off
CASE_A = {
    1:  _Rule(_a_vec(lambda a1, a2, a3, a4, u1, u2, u3, u4, A, B: (a2*a3, a1*a3, a2*a4, a2*a3)), ("u1", "u4"), S),
    2:  _Rule(_a_vec(lambda a1, a2, a3, a4, u1, u2, u3, u4, A, B: (a2*a3, a1*a3, a1*a4, a1*a3)), ("u2", "u4"), S),
    3:  _Rule(_a_vec(lambda a1, a2, a3, a4, u1, u2, u3, u4, A, B: (a2*a4, a1*a4, a2*a4, a2*a3)), ("u1", "u3"), S),
    4:  _Rule(_a_vec(lambda a1, a2, a3, a4, u1, u2, u3, u4, A, B: (a2*a4, a1*a4, a1*a4, a1*a3)), ("u2", "u3"), S),
    5:  _Rule(_a_vec(lambda a1, a2, a3, a4, u1, u2, u3, u4, A, B: (a2*(a3+a4), a1*(a3+a4), 0, 0)), ("u3", "u4"), S),
    6:  _Rule(_a_vec(lambda a1, a2, a3, a4, u1, u2, u3, u4, A, B: (0, 0, a4*(a1+a2), a3*(a1+a2))), ("u1", "u2"), S),
    7:  _Rule(_a_vec(lambda a1, a2, a3, a4, u1, u2, u3, u4, A, B: (a2*(a3+a4), a1*(a3+a4), a2*a4, a2*a3)), ("u1", "u3", "u4"), I),
    8:  _Rule(_a_vec(lambda a1, a2, a3, a4, u1, u2, u3, u4, A, B: (a2*(a3+a4), a1*(a3+a4), a4*(a1+a2), a3*(a1+a2))), ("u1", "u2", "u3", "u4"), I),
    9:  _Rule(_a_vec(lambda a1, a2, a3, a4, u1, u2, u3, u4, A, B: (0, 0, a2*a4, a2*a3)), ("u1",), S),
    10: _Rule(_a_vec(lambda a1, a2, a3, a4, u1, u2, u3, u4, A, B: (a2*a4, a1*a4, a4*(a1+a2), a3*(a1+a2))), ("u1", "u2", "u3"), I),
    11: _Rule(_a_vec(lambda a1, a2, a3, a4, u1, u2, u3, u4, A, B: (a2*a3, a1*a3, a4*(a1+a2), a3*(a1+a2))), ("u1", "u2", "u4"), I),
    12: _Rule(_a_vec(lambda a1, a2, a3, a4, u1, u2, u3, u4, A, B: (a2*(a3+a4), a1*(a3+a4), a1*a4, a1*a3)), ("u2", "u3", "u4"), I),
    13: _Rule(_a_vec(lambda a1, a2, a3, a4, u1, u2, u3, u4, A, B: (0, 0, a1*a4, a1*a3)), ("u2",), I),
    14: _Rule(_a_vec(lambda a1, a2, a3, a4, u1, u2, u3, u4, A, B: (a2*a4, a1*a4, 0, 0)), ("u3",), I),
    15: _Rule(_a_vec(lambda a1, a2, a3, a4, u1, u2, u3, u4, A, B: (a2*a3, a1*a3, 0, 0)), ("u4",), I),
    16: _Rule(_a_vec(lambda a1, a2, a3, a4, u1, u2, u3, u4, A, B: (A, A, a4*(u1+u2), a3*(u1+u2))), ("a1", "a2"), S),
    17: _Rule(_a_vec(lambda a1, a2, a3, a4, u1, u2, u3, u4, A, B: (0, A, u2*a4, u2*a3)), ("a1",), I),
    18: _Rule(_a_vec(lambda a1, a2, a3, a4, u1, u2, u3, u4, A, B: (A, 0, u1*a4, u1*a3)), ("a2",), I),
    19: _Rule(_a_vec(lambda a1, a2, a3, a4, u1, u2, u3, u4, A, B: (a2*u4, a1*u4, 0, B)), ("a3",), I),
    20: _Rule(_a_vec(lambda a1, a2, a3, a4, u1, u2, u3, u4, A, B: (a2*u3, a1*u3, B, 0)), ("a4",), I),
    21: _Rule(_a_vec(lambda a1, a2, a3, a4, u1, u2, u3, u4, A, B: (a2*(a4+u4), a1*(a4+u4), 0, B)), ("a3", "u3"), I),
    22: _Rule(_a_vec(lambda a1, a2, a3, a4, u1, u2, u3, u4, A, B: (a2*(u3+u4), a1*(u3+u4), B, B)), ("a3", "a4"), I),
}

CASE_B = {
    1:  _Rule(_b_vec(lambda a1, a2, a3, a4, u1, u2, v1, v2, v3, C: (a2*a3, a1*a3, C, a2*a3)), ("a4", "v1"), S),
    2:  _Rule(_b_vec(lambda a1, a2, a3, a4, u1, u2, v1, v2, v3, C: (a2*a3, a1*a3, C, a1*a3)), ("a4", "v2"), S),
    3:  _Rule(_b_vec(lambda a1, a2, a3, a4, u1, u2, v1, v2, v3, C: (a2*a3, a1*a3, C, C)), ("a4", "v3"), S),
    4:  _Rule(_b_vec(lambda a1, a2, a3, a4, u1, u2, v1, v2, v3, C: (0, 0, 0, a3*(a1+a2))), ("v1", "v2"), S),
    5:  _Rule(_b_vec(lambda a1, a2, a3, a4, u1, u2, v1, v2, v3, C: (0, 0, 0, C + a2*a3)), ("v1", "v3"), S),
    6:  _Rule(_b_vec(lambda a1, a2, a3, a4, u1, u2, v1, v2, v3, C: (0, 0, 0, C + a1*a3)), ("v2", "v3"), S),
    7:  _Rule(_b_vec(lambda a1, a2, a3, a4, u1, u2, v1, v2, v3, C: (a2*a3, a1*a3, C, a3*(a1+a2))), ("a4", "v1", "v2"), I),
    8:  _Rule(_b_vec(lambda a1, a2, a3, a4, u1, u2, v1, v2, v3, C: (a2*a3, a1*a3, C, C + a2*a3)), ("a4", "v1", "v3"), I),
    9:  _Rule(_b_vec(lambda a1, a2, a3, a4, u1, u2, v1, v2, v3, C: (a2*a3, a1*a3, C, C + a1*a3)), ("a4", "v2", "v3"), I),
    10: _Rule(_b_vec(lambda a1, a2, a3, a4, u1, u2, v1, v2, v3, C: (0, 0, 0, C + a3*(a1+a2))), ("v1", "v2", "v3"), I),
    11: _Rule(_b_vec(lambda a1, a2, a3, a4, u1, u2, v1, v2, v3, C: (a2*a3, a1*a3, C, 0)), ("a4",), I),
    12: _Rule(_b_vec(lambda a1, a2, a3, a4, u1, u2, v1, v2, v3, C: (0, 0, 0, a2*a3)), ("v1",), I),
    13: _Rule(_b_vec(lambda a1, a2, a3, a4, u1, u2, v1, v2, v3, C: (0, 0, 0, a1*a3)), ("v2",), I),
    14: _Rule(_b_vec(lambda a1, a2, a3, a4, u1, u2, v1, v2, v3, C: (0, 0, 0, C)), ("v3",), I),
    15: _Rule(_b_vec(lambda a1, a2, a3, a4, u1, u2, v1, v2, v3, C: (a2*a3, a1*a3, C, C + a3*(a1+a2))), ("a4", "v1", "v2", "v3"), I),
    16: _Rule(_b_vec(lambda a1, a2, a3, a4, u1, u2, v1, v2, v3, C: (a3*a4, a3*a4, a4*(u1+u2), v3*(u1+u2) + a3*(v1+v2))), ("a1", "a2"), S),
    17: _Rule(_b_vec(lambda a1, a2, a3, a4, u1, u2, v1, v2, v3, C: (0, a3*a4, a4*u2, u2*v3 + a3*v2)), ("a1",), I),
    18: _Rule(_b_vec(lambda a1, a2, a3, a4, u1, u2, v1, v2, v3, C: (a3*a4, 0, a4*u1, u1*v3 + v1*a3)), ("a2",), I),
    19: _Rule(_b_vec(lambda a1, a2, a3, a4, u1, u2, v1, v2, v3, C: (a2*a4, a1*a4, a2*a4, a2*v3 + a1*v2 + v1*a2)), ("a3", "u1"), I),
    20: _Rule(_b_vec(lambda a1, a2, a3, a4, u1, u2, v1, v2, v3, C: (a2*a4, a1*a4, a1*a4, a1*v3 + a1*v2 + v1*a2)), ("a3", "u2"), I),
    21: _Rule(_b_vec(lambda a1, a2, a3, a4, u1, u2, v1, v2, v3, C: (a2*a4, a1*a4, a4*(a1+a2), v3*(a1+a2) + a1*v2 + v1*a2)), ("a3", "u1", "u2"), I),
    22: _Rule(_b_vec(lambda a1, a2, a3, a4, u1, u2, v1, v2, v3, C: (0, 0, a4*(a1+a2), v3*(a1+a2) + a3*(a1+a2))), ("u1", "u2", "v1", "v2"), S),
}
# fmt: on

TABLES = {"A": CASE_A, "B": CASE_B}


@dataclass(frozen=True)
class ShiftVector:
    case: str
    index: int
    entries: tuple
    slots: tuple
    status: str

    def __iter__(self):
        return iter(self.entries)


def _rule(case: str, i: int, p) -> _Rule:
    case = case.upper()
    if case not in TABLES:
        raise ValueError(f"case must be A or B, got {case!r}")
    expected = CaseAParams if case == "A" else CaseBParams
    if not isinstance(p, expected):
        raise TypeError(f"case {case} needs {expected.__name__}, got {type(p).__name__}")
    if i not in TABLES[case]:
        raise IndexError(f"shift vector index must be in 1..22, got {i}")
    return TABLES[case][i]


def shift_vector(case: str, i: int, p) -> ShiftVector:
    r = _rule(case, i, p)
    return ShiftVector(case.upper(), i, tuple(r.formula(p)), r.slots, r.status)


def shift_params(p, slots: Sequence[str], w: int):
    """Add w to each named exponent slot (a1..a4, u1.., v1..)."""
    a, u = list(p.a), list(p.u)
    v = list(p.v) if isinstance(p, CaseBParams) else None
    for s in slots:
        k = int(s[1:]) - 1
        {"a": a, "u": u, "v": v}[s[0]][k] += w
    if v is None:
        return replace(p, a=tuple(a), u=tuple(u))
    return replace(p, a=tuple(a), u=tuple(u), v=tuple(v))


def shifted_curve(case: str, i: int, p, w: int) -> MonomialCurve:
    base = kraft_case_a(p) if isinstance(p, CaseAParams) else kraft_case_b(p)
    return base.shifted(shift_vector(case, i, p).entries, w)


def predicted_generators(case: str, i: int, p, w: int) -> list:
    """The three binomials that generate I(n + w*v_i)."""
    r = _rule(case, i, p)
    return shift_params(p, r.slots, w).binomials()


# ---------------------------------------------------------------------------
# complete intersection certificate
# ---------------------------------------------------------------------------


def lattice_matrix(gens: Sequence[Binomial]) -> list:
    """4 x k matrix whose columns are the exponent differences of gens."""
    return intlin.transpose([b.vector() for b in gens])


def verify_ci(curve: MonomialCurve, gens: Sequence[Binomial]) -> bool:
    """Certify that gens generate I(n) as a complete intersection.

    The exponent differences must lie in ker(n), span a saturated rank-3
    lattice (invariant factors all 1), and form a mixed dominating matrix.
    """
    curve.require_coprime()
    gens = list(gens)
    if len(gens) != 3:
        return False
    if not all(curve.contains(b) for b in gens):
        return False
    M = lattice_matrix(gens)
    try:
        factors = intlin.smith_invariant_factors(M)
    except ValueError:
        return False
    if factors != [1, 1, 1]:
        return False
    return intlin.is_mixed_dominating(intlin.transpose(M))


# ---------------------------------------------------------------------------
# thresholds and CM families
# ---------------------------------------------------------------------------


def w0_threshold(p: CaseAParams) -> int:
    a1, a2, a3, a4 = p.a
    u1, u2, u3, u4 = p.u
    return max(0, u3 + u4 - u1 - u2 + a4 - a3)


def w1_threshold(p: CaseBParams) -> int:
    a1, a2, a3, a4 = p.a
    u1, u2 = p.u
    v1, v2, v3 = p.v
    # ceil(x / 2) for possibly negative integers
    return max(0, -((u1 + u2 - a3) // 2), -((v1 + v2 + v3 - a4) // 2))


def basic1_shift(p: CaseAParams) -> ShiftVector:
    """v1, which keeps a CM tangent cone CM along the whole family."""
    q = normalize_case_a(p)
    try:
        report = cm_case_a(q)
    except PreconditionError:
        curve = kraft_case_a(q).require_coprime()
        report = analyze_tangent_cone(curve, q.binomials()).cm
    if not report.is_cm:
        raise ValueError(f"{p} does not have a CM tangent cone ({report.witness})")
    return shift_vector("A", 1, p)


@dataclass
class FamilyReport:
    w: int
    curve: MonomialCurve
    gcd_ok: bool
    ci_verified: bool
    predicted_gens: list
    cm: CMReport | None = None
    mu: int | None = None
    extra: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        if not self.gcd_ok:
            return "skipped-gcd"
        return "ok" if self.ci_verified else "ci-failed"

    def as_dict(self) -> dict:
        out = {
            "w": self.w,
            "n": list(self.curve.n),
            "gcd": self.curve.gcd,
            "gcd_ok": self.gcd_ok,
            "status": self.status,
            "ci_verified": self.ci_verified,
            "predicted_generators": [str(b) for b in self.predicted_gens],
            "cm": self.cm.as_dict() if self.cm else None,
            "mu": self.mu,
        }
        out.update(self.extra)
        return out


def family_point(case: str, i: int, p, w: int, with_cm: bool = True, priority=(4, 3, 2, 1)) -> FamilyReport:
    curve = shifted_curve(case, i, p, w)
    gens = predicted_generators(case, i, p, w)
    if not curve.is_coprime:
        return FamilyReport(w, curve, False, False, gens)
    ci = verify_ci(curve, gens)
    rep = FamilyReport(w, curve, True, ci, gens)
    if with_cm and ci:
        analysis = analyze_tangent_cone(curve, gens, priority)
        rep.cm = analysis.cm
        rep.mu = analysis.mu
    return rep


def family_scan(case: str, i: int, p, ws, with_cm: bool = True, priority=(4, 3, 2, 1)) -> list:
    return [family_point(case, i, p, w, with_cm, priority) for w in ws]


# ---------------------------------------------------------------------------
# almost complete intersection tangent cones
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AlmostCIFamily:
    """Case (B) curves with f3 = x4^a4 - x1^v1 x2^v2 shifted along b1."""

    params: CaseBParams
    vector: ShiftVector
    strict: bool

    def curve(self, w: int) -> MonomialCurve:
        return kraft_case_b(self.params).shifted(self.vector.entries, w)

    def generators(self, w: int) -> list:
        return predicted_generators("B", 1, self.params, w)

    def predicted_tangent_generators(self, w: int) -> list:
        a1, a2, a3, a4 = self.params.a
        v1, v2, _ = self.params.v
        out = [
            Polynomial.monomial((0, a2, 0, 0)),
            Polynomial.monomial((0, 0, a3, 0)),
            Polynomial.monomial((v1 + w, v2, 0, 0)),
        ]
        if self.strict:
            out.append(Polynomial.monomial((a1 + v1 + w, 0, 0, 0)))
        else:
            out.append(Polynomial.binomial((a1 + v1 + w, 0, 0, 0), (0, a2 - v2, 0, a4 + w)))
        return out


def almost_ci_family(p: CaseBParams) -> AlmostCIFamily:
    a1, a2, a3, a4 = p.a
    u1, u2 = p.u
    v1, v2, v3 = p.v
    checks = [
        (v3 == 0, f"v3={v3} must be 0"),
        (v1 > 0, f"v1={v1} must be positive"),
        (v2 > 0, f"v2={v2} must be positive"),
        (a2 < a1, f"a2={a2} < a1={a1} fails"),
        (a3 < u1 + u2, f"a3={a3} < u1+u2={u1 + u2} fails"),
        (v2 < a2, f"v2={v2} < a2={a2} fails"),
        (a1 + v1 <= a2 - v2 + a4, f"a1+v1={a1 + v1} <= a2-v2+a4={a2 - v2 + a4} fails"),
    ]
    failed = [msg for ok, msg in checks if not ok]
    if failed:
        raise ValueError("; ".join(failed))
    return AlmostCIFamily(p, shift_vector("B", 1, p), a1 + v1 < a2 - v2 + a4)


# ---------------------------------------------------------------------------
# the Rossi family
# ---------------------------------------------------------------------------


def rossi_params(m: int, w: int = 0) -> CaseAParams:
    k = 2 * m * m + w
    return CaseAParams((5, 2, 2, 3), (k, 1, 1, k))


def rossi_curve(m: int, w: int = 0) -> MonomialCurve:
    return MonomialCurve.unchecked(
        (8 * m * m + 6 + 4 * w, 20 * m * m + 15 + 10 * w, 12 * m * m + 15 + 6 * w, 8 * m * m + 10 + 4 * w)
    )


def rossi_family(m: int, w: int = 0):
    """(curve, generators) of the Rossi family member; NotCoprime if gcd > 1."""
    if m < 1 or w < 0:
        raise ValueError("need m >= 1 and w >= 0")
    curve = rossi_curve(m, w)
    if not curve.is_coprime:
        raise NotCoprime(f"gcd{curve.n} = {curve.gcd}")
    return curve, rossi_params(m, w).binomials()


def rossi_lead_ideal(m: int, w: int = 0) -> list:
    """Claimed minimal generators of LT(I_*) for the Rossi family."""
    k = 2 * m * m + w
    return [
        (0, 2, 0, 0),
        (0, 0, 2, 0),
        (0, 0, 0, 2 * k + 3),
        (0, 1, 0, k + 3),
        (0, 0, 1, k),
        (k, 1, 1, 0),
    ]


def rossi_reduced_numerator(m: int, w: int = 0) -> list:
    """Claimed numerator of the Hilbert series over (1 - t)."""
    k = 2 * m * m + w
    c = [0] * (2 * k + 3)
    c[0], c[1] = 1, 3
    for d in range(2, k + 1):
        c[d] = 4
    c[k + 1] += 3
    c[k + 2] += 1
    c[k + 3] += 1
    c[2 * k + 2] += 1
    return c
