import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from cimc.families import (
    CASE_A,
    CASE_B,
    almost_ci_family,
    basic1_shift,
    family_point,
    family_scan,
    predicted_generators,
    rossi_family,
    shift_params,
    shift_vector,
    shifted_curve,
    verify_ci,
    w0_threshold,
    w1_threshold,
)
from cimc.gbase import ideal_equal
from cimc.cmcheck import analyze_tangent_cone
from cimc.numsg import CaseAParams, CaseBParams, MonomialCurve, NotCoprime, kraft_case_a, kraft_case_b
from cimc.ring import Binomial, MonomialOrder
from cimc.ring import parse_polynomial as P

EX_A1 = CaseAParams((4, 3, 3, 5), (9, 3, 2, 7))
EX_D1 = CaseAParams((5, 3, 2, 3), (1, 1, 1, 1))
EX_B = CaseBParams((10, 3, 7, 11), (11, 6), (1, 8, 1))


def strs(bins):
    return [str(b) for b in bins]


def test_shift_vector_examples():
    assert shift_vector("A", 1, EX_A1).entries == (9, 12, 15, 9)
    assert shift_vector("A", 9, EX_D1).entries == (0, 0, 9, 6)
    assert shift_vector("B", 22, EX_B).entries == (0, 0, 143, 104)
    assert shift_vector("B", 16, EX_B).entries == (77, 77, 187, 80)


def test_shift_vector_errors():
    with pytest.raises(IndexError):
        shift_vector("A", 23, EX_A1)
    with pytest.raises(IndexError):
        shift_vector("B", 0, EX_B)
    with pytest.raises(TypeError):
        shift_vector("A", 1, EX_B)
    with pytest.raises(ValueError):
        shift_vector("C", 1, EX_A1)


def test_table_shape():
    assert sorted(CASE_A) == list(range(1, 23)) == sorted(CASE_B)
    stated_a = {i for i, r in CASE_A.items() if r.status == "stated"}
    stated_b = {i for i, r in CASE_B.items() if r.status == "stated"}
    assert stated_a == {1, 2, 3, 4, 5, 6, 9, 16}
    assert stated_b == {1, 2, 3, 4, 5, 6, 16, 22}
    assert len({r.slots for r in CASE_A.values()}) == 22
    assert len({r.slots for r in CASE_B.values()}) == 22


def test_predicted_generator_examples():
    assert strs(predicted_generators("A", 1, EX_A1, 1)) == ["x1^4-x2^3", "x3^3-x4^5", "x1^10*x2^3-x3^2*x4^8"]
    a1, a2 = EX_D1.a[:2]
    g = predicted_generators("A", 16, EX_D1, 1)
    assert g[0] == Binomial((a1 + 1, 0, 0, 0), (0, a2 + 1, 0, 0))
    assert g[1:] == EX_D1.binomials()[1:]
    assert strs(predicted_generators("B", 22, EX_B, 2)) == ["x1^10-x2^3", "x3^7-x1^13*x2^8", "x4^11-x1^3*x2^10*x3"]


a_params = st.builds(
    CaseAParams,
    st.tuples(*[st.integers(1, 7)] * 4),
    st.tuples(*[st.integers(0, 7)] * 4).filter(lambda u: (u[0] or u[1]) and (u[2] or u[3])),
)
b_params = st.builds(
    CaseBParams,
    st.tuples(*[st.integers(1, 7)] * 4),
    st.tuples(st.integers(0, 7), st.integers(0, 7)).filter(any),
    st.tuples(*[st.integers(0, 7)] * 3).filter(any),
)


@given(a_params, st.integers(1, 22), st.integers(1, 10))
def test_round_trip_case_a(p, i, w):
    vec = shift_vector("A", i, p)
    assert kraft_case_a(shift_params(p, vec.slots, w)).n == shifted_curve("A", i, p, w).n


@given(b_params, st.integers(1, 22), st.integers(1, 10))
def test_round_trip_case_b(p, i, w):
    vec = shift_vector("B", i, p)
    assert kraft_case_b(shift_params(p, vec.slots, w)).n == shifted_curve("B", i, p, w).n


@settings(suppress_health_check=[HealthCheck.filter_too_much])
@given(st.one_of(a_params, b_params), st.integers(1, 22), st.integers(1, 10))
def test_family_is_complete_intersection(p, i, w):
    case = "A" if isinstance(p, CaseAParams) else "B"
    curve = shifted_curve(case, i, p, w)
    assume(curve.is_coprime)
    assert verify_ci(curve, predicted_generators(case, i, p, w))


def test_verify_ci_examples():
    assert verify_ci(MonomialCurve((15, 25, 24, 16)), EX_D1.binomials())
    rossi, gens = rossi_family(1, 0)
    assert verify_ci(rossi, gens)
    bad = shifted_curve("A", 1, EX_A1, 1)
    assert bad.n == (102, 136, 210, 126) and bad.gcd == 2
    with pytest.raises(NotCoprime):
        verify_ci(bad, predicted_generators("A", 1, EX_A1, 1))


def test_verify_ci_rejects():
    curve = MonomialCurve((15, 25, 24, 16))
    f1, f2, f3 = EX_D1.binomials()
    assert not verify_ci(curve, [f1, f2])
    # x1^10 - x2^6 is in the lattice but the lattice it spans with f2, f3 is not saturated
    assert not verify_ci(curve, [Binomial((10, 0, 0, 0), (0, 6, 0, 0)), f2, f3])
    assert not verify_ci(curve, [Binomial((1, 0, 0, 0), (0, 1, 0, 0)), f2, f3])


def test_thresholds():
    assert w0_threshold(EX_D1) == 1
    assert w0_threshold(CaseAParams((5, 3, 2, 3), (50, 1, 1, 1))) == 0
    assert w0_threshold(EX_A1) == 0
    assert w1_threshold(EX_B) == 1
    assert w1_threshold(CaseBParams((2, 2, 2, 2), (1, 1), (1, 1, 1))) == 0
    assert w1_threshold(CaseBParams((2, 2, 9, 2), (1, 1), (1, 1, 1))) == 4


def test_basic1():
    assert basic1_shift(EX_A1).entries == (9, 12, 15, 9)
    rows = [r for r in family_scan("A", 1, EX_A1, range(1, 11)) if r.gcd_ok]
    assert rows and all(r.cm.is_cm for r in rows)
    with pytest.raises(ValueError):
        basic1_shift(EX_D1)


def test_basic1_u3_zero():
    p = CaseAParams((3, 2, 2, 3), (2, 1, 0, 2))
    basic1_shift(p)
    rows = [r for r in family_scan("A", 1, p, range(1, 6)) if r.gcd_ok]
    assert rows and all(r.ci_verified and r.cm.is_cm for r in rows)


@pytest.mark.parametrize("p", [EX_D1, CaseAParams((4, 3, 3, 5), (1, 1, 2, 3)), CaseAParams((3, 2, 2, 3), (1, 1, 1, 1))])
@pytest.mark.parametrize("i", [9, 13])
def test_tangent_all(p, i):
    w0 = w0_threshold(p)
    rows = [r for r in family_scan("A", i, p, range(w0, w0 + 6)) if r.gcd_ok]
    assert rows
    for r in rows:
        assert r.mu <= 4 and r.cm.is_cm


@pytest.mark.parametrize("p", [EX_B, CaseBParams((2, 3, 2, 3), (2, 1), (1, 0, 1)), CaseBParams((2, 3, 2, 4), (1, 1), (1, 1, 1))])
def test_theorcomp(p):
    w1 = w1_threshold(p)
    rows = [r for r in family_scan("B", 22, p, range(w1, w1 + 6)) if r.gcd_ok]
    assert rows
    for r in rows:
        assert r.mu == 3 and r.cm.is_cm


def _almost_ci_check(fam, ws):
    order = MonomialOrder.degrevlex((4, 3, 2, 1))
    seen = 0
    for w in ws:
        curve = fam.curve(w)
        if not curve.is_coprime:
            continue
        an = analyze_tangent_cone(curve, fam.generators(w))
        assert an.mu == 4
        assert ideal_equal(an.minimal_tangent_generators, fam.predicted_tangent_generators(w), order)
        seen += 1
    assert seen


def test_almost_ci_strict():
    fam = almost_ci_family(CaseBParams((3, 2, 4, 4), (2, 3), (1, 1, 0)))
    assert fam.strict
    assert fam.vector.entries == (8, 12, 13, 8)
    _almost_ci_check(fam, range(0, 8))


def test_almost_ci_equality():
    fam = almost_ci_family(CaseBParams((3, 2, 3, 4), (1, 3), (2, 1, 0)))
    assert not fam.strict
    assert fam.predicted_tangent_generators(0)[-1] == P("x1^5-x2*x4^4")
    _almost_ci_check(fam, range(0, 6))


def test_almost_ci_hypotheses():
    with pytest.raises(ValueError, match="v2=2 < a2=2"):
        almost_ci_family(CaseBParams((3, 2, 4, 4), (2, 3), (1, 2, 0)))
    with pytest.raises(ValueError, match="v3"):
        almost_ci_family(CaseBParams((3, 2, 4, 4), (2, 3), (1, 1, 1)))


def test_rossi_family():
    curve, gens = rossi_family(1, 0)
    assert curve.n == (14, 35, 27, 18)
    assert strs(gens) == ["x1^5-x2^2", "x3^2-x4^3", "x1^2*x2-x3*x4^2"]
    curve, gens = rossi_family(1, 1)
    assert curve.n == (18, 45, 33, 22) and curve.is_coprime
    assert all(curve.contains(b) for b in gens) and "x1^3*x2-x3*x4^3" in strs(gens)
    assert rossi_family(2, 0)[0].n == (38, 95, 63, 42)
    with pytest.raises(ValueError):
        rossi_family(0, 0)


def test_family_report_status():
    rows = family_scan("B", 16, EX_B, range(0, 11), with_cm=False)
    skipped = [r.w for r in rows if r.status == "skipped-gcd"]
    assert skipped == [4, 10]
    assert all(r.status == "ok" for r in rows if r.gcd_ok)
    assert family_point("A", 1, EX_A1, 1).as_dict()["status"] == "skipped-gcd"
