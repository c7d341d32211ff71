"""Ring arithmetic, the telescoping quotient, orbit sums, specialization,
and the literal grammar."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from glhecke.laurent import (
    GS_PROFILE,
    S_PROFILE,
    LaurentPoly,
    ProfileMismatchError,
    TermBudgetError,
    demazure_exponents,
    demazure_quotient,
    is_symmetric,
    orbit_sum,
    parse_poly,
    x_profile,
)

X2 = x_profile(2)
X3 = x_profile(3)


def mono(profile, exps, c=1):
    return LaurentPoly.monomial(profile, exps, c)


# -- dense multiplication oracle ------------------------------------------------


def dense_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Naive dense multiplication over a bounding exponent box."""
    n = len(a.profile)
    keys = list(a.terms) + list(b.terms)
    if not keys:
        return LaurentPoly.zero(a.profile)
    lo = [min(k[i] for k in keys) for i in range(n)]
    hi = [max(k[i] for k in keys) for i in range(n)]
    out = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            key = tuple(x + y for x, y in zip(ka, kb))
            assert all(2 * l <= e <= 2 * h for e, l, h in zip(key, lo, hi))
            out[key] = out.get(key, 0) + ca * cb
    return LaurentPoly(a.profile, {k: v for k, v in out.items() if v})


def test_difference_of_squares():
    x1 = LaurentPoly.variable(X2, "x1")
    s = LaurentPoly.variable(X2, "s")
    assert (x1 + s) * (x1 - s) == x1 * x1 - s * s


def test_multiplicative_identity():
    p = mono(X2, (1, 0, 0)) - mono(X2, (0, 1, 0)) + mono(X2, (0, 0, 2), 3)
    assert p * LaurentPoly.one(X2) == p


def test_inverse_monomial_product():
    # (e^(1,0) - e^(0,1)) * e^(0,1)^-1 = e^(1,-1) - 1
    p = mono(X2, (1, 0, 0)) - mono(X2, (0, 1, 0))
    q = mono(X2, (0, 1, 0)) ** -1
    want = mono(X2, (1, -1, 0)) - LaurentPoly.one(X2)
    assert p * q == want
    assert dense_mul(p, q) == want


def test_mul_against_dense_oracle():
    rng = random.Random(20260810)
    for _ in range(300):
        profile = random.Random(rng.random()).choice([S_PROFILE, GS_PROFILE, X2])
        a = _random_poly(profile, rng)
        b = _random_poly(profile, rng)
        assert a * b == dense_mul(a, b)


def _random_poly(profile, rng, max_terms=4, span=3):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        key = tuple(rng.randint(-span, span) for _ in profile)
        terms[key] = terms.get(key, 0) + rng.randint(-4, 4)
    return LaurentPoly(profile, {k: v for k, v in terms.items() if v})


def test_profile_mismatch_rejected():
    with pytest.raises(ProfileMismatchError):
        LaurentPoly.one(S_PROFILE) + LaurentPoly.one(GS_PROFILE)
    with pytest.raises(ProfileMismatchError):
        LaurentPoly.one(S_PROFILE) * LaurentPoly.one(X2)


def test_ring_axioms_bulk():
    # randomized associativity/commutativity/distributivity, 10^4 cases per profile
    for profile in (S_PROFILE, GS_PROFILE, X2):
        rng = random.Random(f"axioms:{profile}")
        for _ in range(10_000):
            a = _random_poly(profile, rng, max_terms=2, span=2)
            b = _random_poly(profile, rng, max_terms=2, span=2)
            c = _random_poly(profile, rng, max_terms=2, span=2)
            assert a + b == b + a
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c


@st.composite
def polys(draw, profile=X2):
    n = len(profile)
    items = draw(
        st.lists(
            st.tuples(
                st.tuples(*[st.integers(-3, 3) for _ in range(n)]),
                st.integers(-5, 5),
            ),
            max_size=5,
        )
    )
    return LaurentPoly.from_terms(profile, items)


@settings(max_examples=200, deadline=None, derandomize=True)
@given(polys(), polys(), polys())
def test_ring_axioms_property(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


# -- the telescoping quotient -----------------------------------------------------


def alpha_poly(m, i):
    key = [0] * (m + 1)
    key[i - 1], key[i] = -1, 1
    return LaurentPoly.monomial(x_profile(m), tuple(key), 1)


def multiply_back_holds(lam, i):
    m = len(lam)
    profile = x_profile(m)
    q = demazure_quotient(lam, i)
    slam = list(lam)
    slam[i - 1], slam[i] = slam[i], slam[i - 1]
    lhs = q * (LaurentPoly.one(profile) - alpha_poly(m, i))
    rhs = mono(profile, tuple(lam) + (0,)) - mono(profile, tuple(slam) + (0,))
    return lhs == rhs


def test_demazure_examples():
    assert demazure_quotient((1, 0), 1) == mono(X2, (1, 0, 0))
    assert multiply_back_holds((1, 0), 1)
    assert demazure_quotient((2, 2, 0), 1).is_zero()
    assert demazure_quotient((2, 0), 1) == mono(X2, (2, 0, 0)) + mono(X2, (1, 1, 0))
    assert multiply_back_holds((2, 0), 1)


def test_demazure_exhaustive_multiply_back():
    for m in (2, 3, 4):
        for lam in _box(m, 2):
            for i in range(1, m):
                assert multiply_back_holds(lam, i), (lam, i)


def _box(m, bound):
    if m == 0:
        yield ()
        return
    for rest in _box(m - 1, bound):
        for v in range(-bound, bound + 1):
            yield (v,) + rest


def test_demazure_exponents_signs():
    assert demazure_exponents((0, 1), 1) == [((1, 0), -1)]
    assert demazure_exponents((1, 0), 1) == [((1, 0), 1)]
    assert demazure_exponents((0, 0), 1) == []


# -- orbit sums --------------------------------------------------------------------


def test_orbit_sum_examples():
    assert orbit_sum((1, 0)) == mono(X2, (1, 0, 0)) + mono(X2, (0, 1, 0))
    assert orbit_sum((1, 1)) == mono(X2, (1, 1, 0))
    assert len(orbit_sum((2, 1, 0)).terms) == 6


def test_orbit_sum_symmetric():
    rng = random.Random(5)
    for _ in range(50):
        m = rng.randint(2, 4)
        lam = tuple(rng.randint(-2, 2) for _ in range(m))
        assert is_symmetric(orbit_sum(lam), m)


# -- specialization -----------------------------------------------------------------


def test_specialize_examples():
    p = parse_poly(S_PROFILE, "s^2 - 1")
    assert p.specialize({"s": 1}) == 0
    q = mono(X2, (1, 0, 0))  # e^(omega_1) for m = 2
    assert q.specialize({"x1": 2, "x2": 3, "s": 1}) == 2
    tsm = parse_poly(X2, "s^2*x1*x2^-1 + s^2 - 1")
    assert tsm.specialize({"s": 3, "x1": 2, "x2": 1}) == 26


def test_specialize_rejects_zero():
    p = LaurentPoly.variable(S_PROFILE, "s", -1)
    with pytest.raises(ValueError):
        p.specialize({"s": 0})
    assert p.specialize({"s": Fraction(2, 3)}) == Fraction(3, 2)


# -- grammar -------------------------------------------------------------------------


def test_parse_print_round_trip_examples():
    for text in ("3*s^-2*x1^2 - x2", "0", "1", "-x1 + 5", "x1*x2^-3 + 2*s"):
        p = parse_poly(X2, text)
        assert parse_poly(X2, str(p)) == p


def test_round_trip_random():
    rng = random.Random(99)
    for _ in range(400):
        profile = random.Random(rng.random()).choice([S_PROFILE, GS_PROFILE, X3])
        p = _random_poly(profile, rng)
        assert parse_poly(profile, str(p)) == p


def test_parse_rejects_unknown_variable():
    with pytest.raises(ValueError):
        parse_poly(S_PROFILE, "x1 + 1")


def test_div_exact():
    x1 = LaurentPoly.variable(X2, "x1")
    x2 = LaurentPoly.variable(X2, "x2")
    s = LaurentPoly.variable(X2, "s")
    p = (x1 + s) * (x1 - x2)
    assert p.div_exact(x1 + s) == x1 - x2
    assert p.div_exact(x1 + x2) is None
    assert (x1 * x1 - s * s).div_exact(x1 - s) == x1 + s


def test_term_budget(monkeypatch):
    monkeypatch.setenv("GLHECKE_MAX_TERMS", "3")
    a = parse_poly(X2, "x1 + x2 + s + 1")
    with pytest.raises(TermBudgetError):
        a * a
    monkeypatch.delenv("GLHECKE_MAX_TERMS")
    assert len((a * a).terms) == 10
