"""Small exact linear algebra over the fraction field of Z[g^{+-1}, s^{+-1}].

Entries are RationalFn pairs (numerator, denominator LaurentPoly) with light
normalization: integer content and monomial content are stripped and exact
divisions collapsed, but no multivariate gcd is attempted.  Everything stays
exact; zero tests reduce to zero tests on numerators.

Also: symbolic determinants by permutation expansion (fine for the m <= 8
matrices that occur here) and rational nullspaces over plain Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import gcd

from .laurent import LaurentPoly

__all__ = [
    "RationalFn",
    "mat_mul",
    "mat_solve",
    "mat_inv",
    "det_laurent",
    "det_expansion",
    "cramer_solve",
    "nullspace",
]


def _content(p: LaurentPoly) -> int:
    c = 0
    for v in p.terms.values():
        c = gcd(c, abs(v))
        if c == 1:
            return 1
    return c or 1


def _monomial_shift(p: LaurentPoly) -> tuple[int, ...]:
    n = len(p.profile)
    return tuple(min(k[i] for k in p.terms) for i in range(n))


def _shift(p: LaurentPoly, by: tuple[int, ...]) -> LaurentPoly:
    return LaurentPoly(
        p.profile, {tuple(e - s for e, s in zip(k, by)): c for k, c in p.terms.items()}
    )


class RationalFn:
    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None, reduce: bool = True):
        if den is None:
            den = LaurentPoly.one(num.profile)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if reduce and not num.is_zero():
            q = num.div_exact(den)
            if q is not None:
                num, den = q, LaurentPoly.one(num.profile)
            else:
                shift = _monomial_shift(den)
                if any(shift):
                    den = _shift(den, shift)
                    num = _shift(num, shift)
                c = gcd(_content(num), _content(den))
                if c > 1:
                    num = LaurentPoly(num.profile, {k: v // c for k, v in num.terms.items()})
                    den = LaurentPoly(den.profile, {k: v // c for k, v in den.terms.items()})
        if num.is_zero():
            den = LaurentPoly.one(num.profile)
        self.num = num
        self.den = den

    @staticmethod
    def of(p: LaurentPoly) -> "RationalFn":
        return RationalFn(p, None, reduce=False)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other: "RationalFn") -> "RationalFn":
        if self.den == other.den:
            return RationalFn(self.num + other.num, self.den)
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "RationalFn") -> "RationalFn":
        if self.den == other.den:
            return RationalFn(self.num - other.num, self.den)
        return RationalFn(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RationalFn":
        return RationalFn(-self.num, self.den, reduce=False)

    def __mul__(self, other: "RationalFn") -> "RationalFn":
        if self.num.is_zero() or other.num.is_zero():
            return RationalFn(LaurentPoly.zero(self.num.profile), None, reduce=False)
        return RationalFn(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RationalFn") -> "RationalFn":
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFn(self.num * other.den, self.den * other.num)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalFn):
            return NotImplemented
        return (self.num * other.den) == (other.num * self.den)

    def __hash__(self) -> int:
        raise TypeError("RationalFn is not hashable")

    def to_laurent(self) -> LaurentPoly | None:
        """The Laurent polynomial this equals, or None if denominators do
        not clear."""
        if self.den.is_one():
            return self.num
        return self.num.div_exact(self.den)

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    __repr__ = __str__


Matrix = list[list[RationalFn]]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k, p = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = a[i][0] * b[0][j]
            for t in range(1, k):
                if not (a[i][t].is_zero() or b[t][j].is_zero()):
                    acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def mat_solve(a: Matrix, b: Matrix) -> Matrix:
    """Solve a X = b by Gauss-Jordan elimination; a must be invertible."""
    n = len(a)
    width = len(b[0])
    aug = [[a[i][j] for j in range(n)] + [b[i][j] for j in range(width)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not aug[r][col].is_zero()), None)
        if pivot is None:
            raise ValueError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col]
        for r in range(n):
            if r == col or aug[r][col].is_zero():
                continue
            factor = aug[r][col] / inv
            for c in range(col, n + width):
                aug[r][c] = aug[r][c] - factor * aug[col][c]
    return [
        [aug[i][n + j] / aug[i][i] for j in range(width)]
        for i in range(n)
    ]


def mat_inv(a: Matrix) -> Matrix:
    n = len(a)
    profile = a[0][0].num.profile
    one = RationalFn.of(LaurentPoly.one(profile))
    zero = RationalFn.of(LaurentPoly.zero(profile))
    ident = [[one if i == j else zero for j in range(n)] for i in range(n)]
    return mat_solve(a, ident)


def det_expansion(m: list[list[LaurentPoly]]) -> LaurentPoly:
    """Determinant by signed permutation expansion; kept as an independent
    oracle for the Bareiss determinant on small matrices."""
    n = len(m)
    profile = m[0][0].profile
    total = LaurentPoly.zero(profile)
    for perm in permutations(range(n)):
        sign = 1
        seen = [False] * n
        for start in range(n):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
        prod = LaurentPoly.const(profile, sign)
        for i in range(n):
            entry = m[i][perm[i]]
            if entry.is_zero():
                prod = LaurentPoly.zero(profile)
                break
            prod = prod * entry
        total = total + prod
    return total


def det_laurent(m: list[list[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free Bareiss determinant over the Laurent ring; every
    division in the sweep is exact by the Sylvester identity."""
    n = len(m)
    profile = m[0][0].profile
    if n == 0:
        return LaurentPoly.one(profile)
    a = [row[:] for row in m]
    sign = 1
    prev = LaurentPoly.one(profile)
    for k in range(n - 1):
        if a[k][k].is_zero():
            pivot_row = next((r for r in range(k + 1, n) if not a[r][k].is_zero()), None)
            if pivot_row is None:
                return LaurentPoly.zero(profile)
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        pkk = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * pkk - a[i][k] * a[k][j]
                q = num.div_exact(prev)
                if q is None:
                    raise AssertionError("Bareiss division failed")
                a[i][j] = q
            a[i][k] = LaurentPoly.zero(profile)
        prev = pkk
    return a[n - 1][n - 1] * sign


def cramer_solve(
    a: list[list[LaurentPoly]], b: list[LaurentPoly]
) -> list[LaurentPoly] | None:
    """Solve a x = b over the Laurent ring by Cramer's rule; returns None
    when the (unique, fraction-field) solution is not Laurent-integral."""
    n = len(a)
    det = det_laurent(a)
    if det.is_zero():
        raise ValueError("singular matrix")
    out = []
    for col in range(n):
        replaced = [
            [b[i] if j == col else a[i][j] for j in range(n)] for i in range(n)
        ]
        num = det_laurent(replaced)
        q = num.div_exact(det)
        if q is None:
            return None
        out.append(q)
    return out


def nullspace(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Basis of the right nullspace of a matrix over Q (RREF)."""
    if not rows:
        return []
    ncols = len(rows[0])
    mat = [row[:] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for prow, pc in enumerate(pivots):
            vec[pc] = -mat[prow][fc]
        basis.append(vec)
    return basis
