"""The extended affine Hecke algebra of GL(m) in the Bernstein basis.

Elements are finite sums  sum_c c(s) * e^lam * T_w  with lam in Z^m, w a
finite permutation, and coefficients in Z[s, s^-1]; internally v = s^2.
Multiplication normal-orders products by moving every e^mu left past
T-letters one reduced-word letter at a time:

    T_{s_i} e^mu = e^{s_i(mu)} T_{s_i} + (1 - v) * DQ(s_i(mu), i)

where DQ is the exact telescoping quotient from ``laurent``.  T-against-T
products reduce along reduced words with the quadratic relation
T_s^2 = (v-1) T_s + v.

The affine generator T[m] and the length-zero generators Tw[k] enter through
their Bernstein expansions:

    T_{w_1}      = s^{1-m} e^{-omega_1} T_{sigma_1},
    T_{w_1}^{-1} = s^{1-m} e^{(0,..,0,1)} T_{sigma_1^{-1}},
    T_{s_m}      = T_{w_1}^{-1} T_{s_1} T_{w_1}.

Everything is exact; specializing s -> 1 collapses the product to the group
algebra of the extended affine Weyl group (tested).
"""

from __future__ import annotations

from . import weyl
from .laurent import S_PROFILE, LaurentPoly, demazure_exponents, parse_poly

__all__ = ["HeckeElt", "t_element", "t_inverse", "parse_hecke", "V", "ONE_S"]

V = LaurentPoly(S_PROFILE, {(2,): 1})
V_INV = LaurentPoly(S_PROFILE, {(-2,): 1})
ONE_S = LaurentPoly.one(S_PROFILE)
V_MINUS_1 = V - ONE_S
ONE_MINUS_V = ONE_S - V


def _s_power(k: int) -> LaurentPoly:
    return LaurentPoly(S_PROFILE, {(k,): 1})


# reduced words of finite permutations, cached per one-line tuple
_word_cache: dict[tuple[int, ...], tuple[int, ...]] = {}


def perm_word(perm: tuple[int, ...]) -> tuple[int, ...]:
    """Reduced word (1-based letters) with perm = s_{i1} o ... o s_{il}."""
    got = _word_cache.get(perm)
    if got is not None:
        return got
    w = list(perm)
    records: list[int] = []
    while True:
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                records.append(i + 1)
                break
        else:
            break
    word = tuple(reversed(records))
    _word_cache[perm] = word
    return word


class HeckeElt:
    """A finite Z[s,s^-1]-combination of Bernstein basis elements e^lam T_w."""

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms: dict[tuple[tuple[int, ...], tuple[int, ...]], LaurentPoly]):
        self.m = m
        self.terms = terms

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(m: int) -> "HeckeElt":
        return HeckeElt(m, {})

    @staticmethod
    def one(m: int) -> "HeckeElt":
        return HeckeElt(m, {((0,) * m, tuple(range(m))): ONE_S})

    @staticmethod
    def e(lam) -> "HeckeElt":
        lam = tuple(lam)
        return HeckeElt(len(lam), {(lam, tuple(range(len(lam)))): ONE_S})

    @staticmethod
    def basis(m: int, lam, perm, coeff: LaurentPoly = ONE_S) -> "HeckeElt":
        return HeckeElt(m, {(tuple(lam), tuple(perm)): coeff})

    @staticmethod
    def gen(m: int, i: int) -> "HeckeElt":
        """T[i]; finite for 1 <= i < m, Bernstein form of the affine node at i = m."""
        if not 1 <= i <= m:
            raise ValueError(f"generator index {i} out of range for m={m}")
        if i < m:
            perm = list(range(m))
            perm[i - 1], perm[i] = perm[i], perm[i - 1]
            return HeckeElt(m, {((0,) * m, tuple(perm)): ONE_S})
        return _affine_gen(m)

    @staticmethod
    def tw(m: int, k: int) -> "HeckeElt":
        """T_{w_1}^k for the length-zero generator w_1."""
        return _tw_power(m, k)

    # -- linear structure -------------------------------------------------

    def __add__(self, other: "HeckeElt") -> "HeckeElt":
        terms = dict(self.terms)
        for key, c in other.terms.items():
            c2 = terms.get(key)
            c2 = c if c2 is None else c2 + c
            if c2.is_zero():
                terms.pop(key, None)
            else:
                terms[key] = c2
        return HeckeElt(self.m, terms)

    def __sub__(self, other: "HeckeElt") -> "HeckeElt":
        return self + other.scale(-1)

    def scale(self, c: "LaurentPoly | int") -> "HeckeElt":
        if isinstance(c, int):
            if c == 0:
                return HeckeElt.zero(self.m)
            return HeckeElt(self.m, {k: p * c for k, p in self.terms.items()})
        if c.is_zero():
            return HeckeElt.zero(self.m)
        return HeckeElt(self.m, {k: p * c for k, p in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, HeckeElt)
            and self.m == other.m
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.m, tuple(sorted((k, hash(p)) for k, p in self.terms.items()))))

    def is_zero(self) -> bool:
        return not self.terms

    # -- multiplication ----------------------------------------------------

    def left_mul_gen(self, i: int) -> "HeckeElt":
        """T_{s_i} * self for a finite index 1 <= i < m."""
        m = self.m
        out: dict[tuple[tuple[int, ...], tuple[int, ...]], LaurentPoly] = {}

        def bump(lam, perm, c):
            key = (lam, perm)
            c2 = out.get(key)
            c2 = c if c2 is None else c2 + c
            if c2.is_zero():
                out.pop(key, None)
            else:
                out[key] = c2

        a, b = i - 1, i  # 0-indexed values swapped by s_i
        for (lam, w), c in self.terms.items():
            swl = list(lam)
            swl[a], swl[b] = swl[b], swl[a]
            swl = tuple(swl)
            # T_i T_w: ascent iff value a sits left of value b in w
            sw = tuple(b if x == a else a if x == b else x for x in w)
            if w.index(a) < w.index(b):
                bump(swl, sw, c)
            else:
                bump(swl, w, V_MINUS_1 * c)
                bump(swl, sw, V * c)
            cdq = ONE_MINUS_V * c
            for mu, sign in demazure_exponents(swl, i):
                bump(mu, w, cdq if sign > 0 else -1 * cdq)
        return HeckeElt(m, out)

    def right_mul_gen(self, i: int) -> "HeckeElt":
        """self * T_{s_i} for a finite index; no Bernstein rewriting needed."""
        out: dict[tuple[tuple[int, ...], tuple[int, ...]], LaurentPoly] = {}

        def bump(key, c):
            prev = out.get(key)
            c = c if prev is None else prev + c
            if c.is_zero():
                out.pop(key, None)
            else:
                out[key] = c

        a = i - 1
        for (lam, w), c in self.terms.items():
            sw = w[:a] + (w[a + 1], w[a]) + w[a + 2 :]
            if w[a] < w[a + 1]:
                bump((lam, sw), c)
            else:
                bump((lam, w), V_MINUS_1 * c)
                bump((lam, sw), V * c)
        return HeckeElt(self.m, out)

    def __mul__(self, other: "HeckeElt") -> "HeckeElt":
        if self.m != other.m:
            raise ValueError("rank mismatch")
        out: dict[tuple[tuple[int, ...], tuple[int, ...]], LaurentPoly] = {}
        for (lam1, w1), c1 in self.terms.items():
            x = other
            for i in reversed(perm_word(w1)):
                x = x.left_mul_gen(i)
            trivial = all(v == 0 for v in lam1)
            for (lam2, w2), c2 in x.terms.items():
                key = (lam2 if trivial else tuple(p + q for p, q in zip(lam1, lam2)), w2)
                c3 = c1 * c2
                prev = out.get(key)
                c3 = c3 if prev is None else prev + c3
                if c3.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = c3
        return HeckeElt(self.m, out)

    def __pow__(self, n: int) -> "HeckeElt":
        if n < 0:
            raise ValueError("use t_inverse for generator inverses")
        result = HeckeElt.one(self.m)
        for _ in range(n):
            result = result * self
        return result

    # -- specialization ----------------------------------------------------

    def at_s_one(self) -> dict[weyl.AffineWeylElt, int]:
        """Specialize s -> 1; lands in the group algebra of the extended
        affine Weyl group via e^lam T_w -> t^lam w."""
        out: dict[weyl.AffineWeylElt, int] = {}
        for (lam, w), c in self.terms.items():
            val = c.specialize({"s": 1})
            if val.denominator != 1:
                raise AssertionError("integer coefficients expected")
            n = int(val)
            if n == 0:
                continue
            g = weyl.AffineWeylElt(lam, w)
            n2 = out.get(g, 0) + n
            if n2:
                out[g] = n2
            else:
                del out[g]
        return out

    # -- printing -----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for (lam, w), c in sorted(self.terms.items()):
            factors = []
            cs = str(c)
            if cs != "1" or (all(v == 0 for v in lam) and w == tuple(range(self.m))):
                factors.append(f"({cs})")
            if any(v != 0 for v in lam):
                factors.append("e[" + ",".join(str(v) for v in lam) + "]")
            for i in perm_word(w):
                factors.append(f"T[{i}]")
            pieces.append("*".join(factors))
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"HeckeElt({self!s})"


# -- Omega generators and the affine node ---------------------------------

_tw_cache: dict[tuple[int, int], HeckeElt] = {}
_affine_cache: dict[int, HeckeElt] = {}


def _tw_one(m: int) -> HeckeElt:
    lam = tuple(-1 if j == 0 else 0 for j in range(m))
    return HeckeElt.basis(m, lam, weyl.sigma(m, 1).perm, _s_power(1 - m))


def _tw_minus_one(m: int) -> HeckeElt:
    lam = tuple(1 if j == m - 1 else 0 for j in range(m))
    return HeckeElt.basis(m, lam, weyl.sigma(m, m - 1).perm if m > 1 else (0,), _s_power(1 - m))


def _tw_power(m: int, k: int) -> HeckeElt:
    got = _tw_cache.get((m, k))
    if got is not None:
        return got
    if k == 0:
        res = HeckeElt.one(m)
    elif k > 0:
        res = _tw_power(m, k - 1) * _tw_one(m)
    else:
        res = _tw_power(m, k + 1) * _tw_minus_one(m)
    _tw_cache[(m, k)] = res
    return res


def _affine_gen(m: int) -> HeckeElt:
    got = _affine_cache.get(m)
    if got is not None:
        return got
    if m < 2:
        raise ValueError("no affine generator for m=1")
    res = _tw_power(m, -1) * HeckeElt.gen(m, 1) * _tw_power(m, 1)
    _affine_cache[m] = res
    return res


def t_element(w: weyl.AffineWeylElt) -> HeckeElt:
    """T_w expanded in the Bernstein basis, via w = w1^k s_{i1}...s_{il}."""
    k, word = weyl.reduced_word(w)
    res = _tw_power(w.m, k)
    for i in word:
        if i < w.m:
            res = res.right_mul_gen(i)
        else:
            res = res * _affine_gen(w.m)
    return res


def t_inverse(m: int, i: int) -> HeckeElt:
    """T_{s_i}^{-1} = v^{-1} T_{s_i} + (v^{-1} - 1), the affine node included."""
    return HeckeElt.gen(m, i).scale(V_INV) + HeckeElt.one(m).scale(V_INV - ONE_S)


# -- literal grammar ----------------------------------------------------------


def _hecke_tokens(text: str) -> list[str]:
    tokens: list[str] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*^()[],":
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
            while j < len(text) and text[j].isalnum():
                j += 1
            tokens.append(text[i:j])
            i = j
        else:
            raise ValueError(f"bad character {ch!r} in Hecke literal")
    return tokens


class _HeckeParser:
    def __init__(self, m: int, tokens: list[str]):
        self.m = m
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ValueError("unexpected end of Hecke literal")
        self.pos += 1
        return tok

    def expect(self, tok):
        got = self.take()
        if got != tok:
            raise ValueError(f"expected {tok!r}, got {got!r}")

    def parse(self) -> HeckeElt:
        out = self.expr()
        if self.peek() is not None:
            raise ValueError(f"trailing input at {self.peek()!r}")
        return out

    def expr(self) -> HeckeElt:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        out = self.term().scale(sign)
        while self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
            out = out + self.term().scale(sign)
        return out

    def term(self) -> HeckeElt:
        out = self.factor()
        while self.peek() == "*":
            self.take()
            out = out * self.factor()
        return out

    def int_list(self) -> list[int]:
        self.expect("[")
        vals: list[int] = []
        while True:
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            tok = self.take()
            if not tok.isdigit():
                raise ValueError("expected integer in bracket list")
            vals.append(sign * int(tok))
            nxt = self.take()
            if nxt == "]":
                return vals
            if nxt != ",":
                raise ValueError(f"expected ',' or ']', got {nxt!r}")

    def factor(self) -> HeckeElt:
        tok = self.take()
        if tok == "(":
            # parenthesized s-coefficient
            depth = 1
            sub: list[str] = []
            while depth:
                nxt = self.take()
                if nxt == "(":
                    depth += 1
                elif nxt == ")":
                    depth -= 1
                    if depth == 0:
                        break
                sub.append(nxt)
            poly = parse_poly(S_PROFILE, " ".join(sub))
            return HeckeElt.one(self.m).scale(poly)
        if tok.isdigit():
            return HeckeElt.one(self.m).scale(int(tok))
        if tok == "s":
            power = 1
            if self.peek() == "^":
                self.take()
                neg = self.peek() == "-"
                if neg:
                    self.take()
                power = int(self.take())
                if neg:
                    power = -power
            return HeckeElt.one(self.m).scale(_s_power(power))
        if tok == "e":
            lam = self.int_list()
            if len(lam) != self.m:
                raise ValueError(f"e[...] needs {self.m} entries")
            return HeckeElt.e(lam)
        if tok == "T":
            (i,) = self.int_list()
            return HeckeElt.gen(self.m, i)
        if tok == "Tw":
            (k,) = self.int_list()
            return HeckeElt.tw(self.m, k)
        raise ValueError(f"unexpected token {tok!r} in Hecke literal")


def parse_hecke(m: int, text: str) -> HeckeElt:
    """Parse the grammar ``e[lam]``, ``T[i]``, ``Tw[k]``, ``*``, with integer
    and s-polynomial coefficients."""
    return _HeckeParser(m, _hecke_tokens(text)).parse()
