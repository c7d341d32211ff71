"""Exact sparse Laurent-polynomial arithmetic over ZZ in named invertible variables.

Coefficients are arbitrary-precision Python integers; no floating point
anywhere.  A polynomial is a map from exponent vectors to nonzero integer
coefficients, keyed against a fixed *profile* (an ordered tuple of variable
names).  Values are immutable after construction, so they can be shared and
hashed freely; equality of values is equality of canonical forms.

The three profiles used downstream:

>>> S_PROFILE
('s',)
>>> GS_PROFILE
('g', 's')
>>> x_profile(2)
('x1', 'x2', 's')

Besides ring arithmetic this module provides the telescoping quotient
``(e^lam - e^{s_i(lam)}) / (1 - e^{-alpha_i})`` (always an exact Laurent
polynomial, computed as a closed-form sum rather than by trial division),
symmetric-group orbit sums, exact rational specialization, and a round-trip
text grammar like ``3*s^-2*x1^2 - x2``.
"""

from __future__ import annotations

import os
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Mapping, Sequence

__all__ = [
    "S_PROFILE",
    "GS_PROFILE",
    "x_profile",
    "gx_profile",
    "LaurentPoly",
    "ProfileMismatchError",
    "TermBudgetError",
    "parse_poly",
    "demazure_exponents",
    "demazure_quotient",
    "orbit_sum",
    "is_symmetric",
]

S_PROFILE = ("s",)
GS_PROFILE = ("g", "s")


def x_profile(m: int) -> tuple[str, ...]:
    """Profile ``(x1, ..., xm, s)`` carrying the torus characters."""
    return tuple(f"x{i}" for i in range(1, m + 1)) + ("s",)


def gx_profile(m: int) -> tuple[str, ...]:
    """Profile ``(g, x1, ..., xm, s)``; ``g`` is an inert module scalar."""
    return ("g",) + x_profile(m)


class ProfileMismatchError(ValueError):
    """Raised when two polynomials over different profiles are combined."""


class TermBudgetError(RuntimeError):
    """Raised when a result would exceed the GLHECKE_MAX_TERMS cap."""


def _term_cap() -> int | None:
    raw = os.environ.get("GLHECKE_MAX_TERMS")
    return int(raw) if raw else None


class LaurentPoly:
    """A sparse Laurent polynomial with integer coefficients.

    ``terms`` maps exponent tuples (aligned with ``profile``) to nonzero
    integers.  Do not mutate either field; all operations return new values.
    """

    __slots__ = ("profile", "terms", "_hash")

    def __init__(self, profile: tuple[str, ...], terms: dict[tuple[int, ...], int]):
        self.profile = profile
        self.terms = terms
        self._hash: int | None = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(profile: tuple[str, ...]) -> "LaurentPoly":
        return LaurentPoly(profile, {})

    @staticmethod
    def const(profile: tuple[str, ...], c: int) -> "LaurentPoly":
        if c == 0:
            return LaurentPoly(profile, {})
        return LaurentPoly(profile, {(0,) * len(profile): c})

    @staticmethod
    def one(profile: tuple[str, ...]) -> "LaurentPoly":
        return LaurentPoly.const(profile, 1)

    @staticmethod
    def variable(profile: tuple[str, ...], name: str, power: int = 1) -> "LaurentPoly":
        idx = profile.index(name)
        if power == 0:
            return LaurentPoly.one(profile)
        exps = [0] * len(profile)
        exps[idx] = power
        return LaurentPoly(profile, {tuple(exps): 1})

    @staticmethod
    def monomial(profile: tuple[str, ...], exps: Sequence[int], coeff: int = 1) -> "LaurentPoly":
        if len(exps) != len(profile):
            raise ProfileMismatchError(f"{len(exps)} exponents for profile {profile}")
        if coeff == 0:
            return LaurentPoly(profile, {})
        return LaurentPoly(profile, {tuple(exps): coeff})

    @staticmethod
    def from_terms(
        profile: tuple[str, ...], items: Iterable[tuple[Sequence[int], int]]
    ) -> "LaurentPoly":
        terms: dict[tuple[int, ...], int] = {}
        for exps, c in items:
            key = tuple(exps)
            c2 = terms.get(key, 0) + c
            if c2:
                terms[key] = c2
            else:
                terms.pop(key, None)
        return LaurentPoly(profile, terms)

    # -- predicates and views -----------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * len(self.profile): 1}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_value(self) -> int | None:
        """The integer value if this is a constant, else None."""
        if not self.terms:
            return 0
        if len(self.terms) == 1:
            key, c = next(iter(self.terms.items()))
            if all(e == 0 for e in key):
                return c
        return None

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in the canonical order: descending lex on exponent tuples."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    # -- arithmetic ----------------------------------------------------

    def _check(self, other: "LaurentPoly") -> None:
        if self.profile != other.profile:
            raise ProfileMismatchError(f"{self.profile} vs {other.profile}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            c2 = terms.get(key, 0) + c
            if c2:
                terms[key] = c2
            else:
                del terms[key]
        return LaurentPoly(self.profile, terms)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.profile, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            c2 = terms.get(key, 0) - c
            if c2:
                terms[key] = c2
            else:
                del terms[key]
        return LaurentPoly(self.profile, terms)

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly(self.profile, {})
            return LaurentPoly(self.profile, {k: c * other for k, c in self.terms.items()})
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        if len(a) == 1:
            ((ka, ca),) = a.items()
            if all(e == 0 for e in ka):
                out = {kb: ca * cb for kb, cb in b.items()}
            else:
                out = {
                    tuple(x + y for x, y in zip(ka, kb)): ca * cb
                    for kb, cb in b.items()
                }
            return LaurentPoly(self.profile, out)
        out = {}
        for ka, ca in a.items():
            for kb, cb in b.items():
                key = tuple(x + y for x, y in zip(ka, kb))
                c2 = out.get(key, 0) + ca * cb
                if c2:
                    out[key] = c2
                else:
                    del out[key]
        cap = _term_cap()
        if cap is not None and len(out) > cap:
            raise TermBudgetError(f"{len(out)} terms exceeds GLHECKE_MAX_TERMS={cap}")
        return LaurentPoly(self.profile, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative powers only for monomials")
            key, c = next(iter(self.terms.items()))
            if c * c != 1:
                raise ValueError("negative powers need coefficient +-1")
            inv = LaurentPoly(self.profile, {tuple(-e for e in key): c})
            return inv ** (-n)
        result = LaurentPoly.one(self.profile)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- comparisons ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.profile == other.profile
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.profile, tuple(self.sorted_terms())))
        return self._hash

    # -- evaluation and substitution -------------------------------------

    def specialize(self, assignments: Mapping[str, Fraction | int]) -> Fraction:
        """Exact rational evaluation.  Every occurring variable must get a
        nonzero rational; zero assignments are rejected (variables are
        invertible)."""
        values: list[Fraction | None] = []
        for name in self.profile:
            if name in assignments:
                val = Fraction(assignments[name])
                if val == 0:
                    raise ValueError(f"variable {name} assigned zero")
                values.append(val)
            else:
                values.append(None)
        total = Fraction(0)
        for key, c in self.terms.items():
            acc = Fraction(c)
            for e, val in zip(key, values):
                if e == 0:
                    continue
                if val is None:
                    raise ValueError("unassigned variable with nonzero exponent")
                acc *= val**e
            total += acc
        return total

    def subst(
        self, target: tuple[str, ...], images: Mapping[str, "LaurentPoly"]
    ) -> "LaurentPoly":
        """Substitute each variable by a polynomial over ``target``.

        Variables hit with negative exponents must map to invertible
        monomials.  Variables absent from ``images`` must exist in ``target``
        and map to themselves.
        """
        imgs: list[LaurentPoly] = []
        for name in self.profile:
            if name in images:
                img = images[name]
                if img.profile != target:
                    raise ProfileMismatchError("image profile differs from target")
                imgs.append(img)
            else:
                imgs.append(LaurentPoly.variable(target, name))
        out = LaurentPoly.zero(target)
        for key, c in self.terms.items():
            acc = LaurentPoly.const(target, c)
            for e, img in zip(key, imgs):
                if e:
                    acc = acc * img**e
            out = out + acc
        return out

    # -- exact division ---------------------------------------------------

    def div_exact(self, other: "LaurentPoly") -> "LaurentPoly | None":
        """Return q with self == q*other, or None if no such Laurent
        polynomial exists.  Uses leading-term peeling under the canonical
        order, after shifting both operands into the polynomial range."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero(self.profile)
        n = len(self.profile)
        shift_a = [min(k[i] for k in self.terms) for i in range(n)]
        shift_b = [min(k[i] for k in other.terms) for i in range(n)]
        rem = {tuple(e - s for e, s in zip(k, shift_a)): c for k, c in self.terms.items()}
        div = {tuple(e - s for e, s in zip(k, shift_b)): c for k, c in other.terms.items()}
        lead_b = max(div)
        cb = div[lead_b]
        quot: dict[tuple[int, ...], int] = {}
        while rem:
            lead_a = max(rem)
            ca = rem[lead_a]
            if ca % cb != 0:
                return None
            qk = tuple(a - b for a, b in zip(lead_a, lead_b))
            if any(e < 0 for e in qk):
                return None
            qc = ca // cb
            quot[qk] = quot.get(qk, 0) + qc
            for kb, c in div.items():
                key = tuple(a + b for a, b in zip(qk, kb))
                c2 = rem.get(key, 0) - qc * c
                if c2:
                    rem[key] = c2
                else:
                    rem.pop(key, None)
        shift_q = tuple(a - b for a, b in zip(shift_a, shift_b))
        return LaurentPoly(
            self.profile,
            {tuple(e + s for e, s in zip(k, shift_q)): c for k, c in quot.items() if c},
        )

    # -- printing ----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for key, c in self.sorted_terms():
            factors = []
            if abs(c) != 1 or all(e == 0 for e in key):
                factors.append(str(abs(c)))
            for name, e in zip(self.profile, key):
                if e == 0:
                    continue
                factors.append(name if e == 1 else f"{name}^{e}")
            body = "*".join(factors)
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly({self!s})"


# -- parsing ------------------------------------------------------------------


def _tokenize(text: str) -> list[str]:
    tokens: list[str] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*^()":
            tokens.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(text[i:j])
            i = j
        elif ch.isalpha():
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(text[i:j])
            i = j
        else:
            raise ValueError(f"bad character {ch!r} in polynomial literal")
    return tokens


class _PolyParser:
    def __init__(self, profile: tuple[str, ...], tokens: list[str]):
        self.profile = profile
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ValueError("unexpected end of polynomial literal")
        self.pos += 1
        return tok

    def parse(self) -> LaurentPoly:
        out = self.expr()
        if self.peek() is not None:
            raise ValueError(f"trailing input at token {self.peek()!r}")
        return out

    def expr(self) -> LaurentPoly:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        out = self.term() * sign
        while self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
            out = out + self.term() * sign
        return out

    def term(self) -> LaurentPoly:
        out = self.factor()
        while self.peek() == "*":
            self.take()
            out = out * self.factor()
        return out

    def factor(self) -> LaurentPoly:
        tok = self.take()
        if tok == "(":
            inner = self.expr()
            if self.take() != ")":
                raise ValueError("unbalanced parenthesis")
            return inner
        if tok.isdigit():
            return LaurentPoly.const(self.profile, int(tok))
        if tok not in self.profile:
            raise ValueError(f"unknown variable {tok!r} for profile {self.profile}")
        power = 1
        if self.peek() == "^":
            self.take()
            neg = False
            nxt = self.take()
            if nxt == "-":
                neg = True
                nxt = self.take()
            if not nxt.isdigit():
                raise ValueError("exponent must be an integer")
            power = -int(nxt) if neg else int(nxt)
        return LaurentPoly.variable(self.profile, tok, power)


def parse_poly(profile: tuple[str, ...], text: str) -> LaurentPoly:
    """Parse the polynomial grammar; parse(print(p)) == p bit-exactly."""
    return _PolyParser(profile, _tokenize(text)).parse()


# -- Demazure quotient and orbit sums -----------------------------------------


def demazure_exponents(lam: Sequence[int], i: int) -> list[tuple[tuple[int, ...], int]]:
    """Telescoping expansion of (e^lam - e^{s_i(lam)}) / (1 - e^{-alpha_i}).

    Returns (exponent vector, sign) pairs; alpha_i = eps_i - eps_{i+1} and
    1 <= i <= len(lam)-1.  Exactness is by construction: the quotient equals
      sum_{j=0}^{k-1} e^{lam - j*alpha}          if k = <lam, alpha_i^vee> > 0,
      0                                           if k = 0,
      -sum_{j=1}^{-k} e^{lam + j*alpha}           if k < 0.
    """
    m = len(lam)
    if not 1 <= i <= m - 1:
        raise ValueError(f"simple-coroot index {i} out of range for m={m}")
    k = lam[i - 1] - lam[i]
    out: list[tuple[tuple[int, ...], int]] = []
    lam = tuple(lam)
    if k > 0:
        for j in range(k):
            mu = list(lam)
            mu[i - 1] -= j
            mu[i] += j
            out.append((tuple(mu), 1))
    elif k < 0:
        for j in range(1, -k + 1):
            mu = list(lam)
            mu[i - 1] += j
            mu[i] -= j
            out.append((tuple(mu), -1))
    return out


def _x_monomial(profile: tuple[str, ...], mu: Sequence[int], coeff: int = 1) -> LaurentPoly:
    exps = tuple(mu) + (0,) * (len(profile) - len(mu))
    return LaurentPoly.monomial(profile, exps, coeff)


def demazure_quotient(lam: Sequence[int], i: int) -> LaurentPoly:
    """(e^lam - e^{s_i(lam)}) / (1 - e^{-alpha_i}) as an x-profile polynomial."""
    profile = x_profile(len(lam))
    return LaurentPoly.from_terms(
        profile,
        (
            (tuple(mu) + (0,), sign)
            for mu, sign in demazure_exponents(lam, i)
        ),
    )


def orbit_sum(lam: Sequence[int]) -> LaurentPoly:
    """Sum of e^mu over the S_m-orbit of lam, each element counted once."""
    profile = x_profile(len(lam))
    return LaurentPoly.from_terms(
        profile, ((mu + (0,), 1) for mu in set(permutations(lam)))
    )


def is_symmetric(p: LaurentPoly, m: int) -> bool:
    """True iff p is invariant under every substitution x_i <-> x_{i+1}."""
    for i in range(m - 1):
        swapped = {
            k[:i] + (k[i + 1], k[i]) + k[i + 2 :]: c for k, c in p.terms.items()
        }
        if swapped != p.terms:
            return False
    return True
