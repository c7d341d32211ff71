"""The polynomial (Bernstein) representation of the affine Hecke algebra.

Vectors are Laurent polynomials over a profile containing x1..xm and s
(extra variables such as g pass through untouched).  Generator actions:

    e^lam * u     = e^{-lam} u
    T_{s_i} * e^lam = (e^lam - e^{s_i lam})/(e^alpha - 1)
                      - s^2 (e^lam - e^{s_i lam + alpha})/(e^alpha - 1)

both quotients realized by the same telescoping operator as the Bernstein
relation, so every division is exact by construction.  Composite Hecke
elements act through their Bernstein-basis expansion.
"""

from __future__ import annotations

from .hecke import HeckeElt, perm_word, t_element
from .laurent import LaurentPoly, x_profile
from . import weyl

__all__ = ["PolyRepVector", "one_vector", "act", "act_T", "act_e", "t_sm_on_one"]

# A representation vector is just a Laurent polynomial whose profile
# contains x1..xm and s; the alias records the role.
PolyRepVector = LaurentPoly


def _indices(profile: tuple[str, ...], m: int) -> tuple[list[int], int]:
    xi = [profile.index(f"x{i}") for i in range(1, m + 1)]
    return xi, profile.index("s")


def one_vector(m: int) -> LaurentPoly:
    return LaurentPoly.one(x_profile(m))


def act_e(lam, u: LaurentPoly, m: int) -> LaurentPoly:
    """e^lam * u = e^{-lam} u."""
    xi, _ = _indices(u.profile, m)
    out = {}
    for key, c in u.terms.items():
        nk = list(key)
        for idx, l in zip(xi, lam):
            nk[idx] -= l
        out[tuple(nk)] = c
    return LaurentPoly(u.profile, out)


def act_T(i: int, u: LaurentPoly, m: int) -> LaurentPoly:
    """T_{s_i} * u for a finite index 1 <= i < m, term by term."""
    if not 1 <= i <= m - 1:
        raise ValueError(f"index {i} is not a finite reflection for m={m}")
    xi, si = _indices(u.profile, m)
    ia, ib = xi[i - 1], xi[i]
    out: dict[tuple[int, ...], int] = {}

    def bump(key, c):
        c2 = out.get(key, 0) + c
        if c2:
            out[key] = c2
        else:
            del out[key]

    def alpha_shift(key, j):
        nk = list(key)
        nk[ia] -= j
        nk[ib] += j
        return nk

    for key, c in u.terms.items():
        k = key[ia] - key[ib]
        # first quotient: k > 0: +sum_{j=1..k}; k < 0: -sum_{j=0..|k|-1} at +j
        if k > 0:
            for j in range(1, k + 1):
                bump(tuple(alpha_shift(key, j)), c)
        elif k < 0:
            for j in range(0, -k):
                bump(tuple(alpha_shift(key, -j)), -c)
        # second quotient with k' = k - 1, times -s^2
        k2 = k - 1
        if k2 > 0:
            for j in range(1, k2 + 1):
                nk = alpha_shift(key, j)
                nk[si] += 2
                bump(tuple(nk), -c)
        elif k2 < 0:
            for j in range(0, -k2):
                nk = alpha_shift(key, -j)
                nk[si] += 2
                bump(tuple(nk), c)
    return LaurentPoly(u.profile, out)


def _embed_s(c: LaurentPoly, profile: tuple[str, ...], si: int) -> LaurentPoly:
    out = {}
    zeros = [0] * len(profile)
    for (k,), coeff in c.terms.items():
        key = list(zeros)
        key[si] = k
        out[tuple(key)] = coeff
    return LaurentPoly(profile, out)


def act(h: HeckeElt, u: LaurentPoly) -> LaurentPoly:
    """h * u through the Bernstein expansion of h."""
    m = h.m
    xi, si = _indices(u.profile, m)
    total = LaurentPoly.zero(u.profile)
    for (lam, w), c in h.terms.items():
        vec = u
        for i in reversed(perm_word(w)):
            vec = act_T(i, vec, m)
        vec = act_e(lam, vec, m)
        total = total + _embed_s(c, u.profile, si) * vec
    return total


def t_sm_on_one(m: int) -> LaurentPoly:
    """act(T_{s_m}, 1), exercised through the chain T_{w1}^{-1} T_{s1} T_{w1}
    and asserted equal to the closed form (s^2 - 1) + s^{2(m-1)} e^{xi+omega_1}
    with xi = (0,...,0,-1)."""
    if m < 2:
        raise ValueError("the affine reflection needs m >= 2")
    one = one_vector(m)
    step = act(HeckeElt.tw(m, 1), one)
    step = act_T(1, step, m)
    step = act(HeckeElt.tw(m, -1), step)

    profile = x_profile(m)
    closed_key = [0] * (m + 1)
    closed_key[0] = 1
    closed_key[m - 1] = -1
    closed = LaurentPoly(profile, {(0,) * (m - 1) + (0, 2): 1}) - LaurentPoly.one(profile)
    closed = closed + LaurentPoly.monomial(
        profile, tuple(closed_key[:m]) + (2 * (m - 1),), 1
    )
    if step != closed:
        raise AssertionError(
            f"T[s_m]*1 convention check failed for m={m}: got {step}, want {closed}"
        )
    direct = act(t_element(weyl.simple_reflection(m, m)), one)
    if direct != closed:
        raise AssertionError(f"Bernstein form of T[s_m] disagrees for m={m}")
    return step
