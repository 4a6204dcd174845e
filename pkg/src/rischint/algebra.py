"""Exact univariate polynomial and rational-function arithmetic.

Coefficients live in an abstract field: plain `fractions.Fraction` scalars, or
any object that implements field arithmetic against them (the tower elements
of `tower.py` do, recursively).  A polynomial is a dense tuple of
coefficients, lowest degree first; denominators of fractions are kept monic
and reduced so that equality of values is equality of representations.

Degrees stay small in every intended workload, so the representations favour
simplicity over asymptotics: schoolbook multiplication, monic Euclidean gcd
over fields, and the subresultant remainder sequence where coefficient growth
matters.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

Rat = Fraction

QZERO = Fraction(0)
QONE = Fraction(1)


def _is_zero(c) -> bool:
    return not c


class Poly:
    """Dense univariate polynomial, lowest-degree coefficient first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = list(coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def gen(cls) -> "Poly":
        """The generator `t` with Fraction unit coefficients."""
        return cls((QZERO, QONE))

    # -- basic queries -------------------------------------------------

    @property
    def deg(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self):
        if not self.coeffs:
            return QZERO
        return self.coeffs[-1]

    def coeff(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return QZERO

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("Poly", self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    # -- ring operations -----------------------------------------------

    def __add__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly((other,))
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        if self.is_zero or other.is_zero:
            return Poly(())
        out = [QZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly((QONE,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "Poly":
        if _is_zero(c):
            return Poly(())
        return Poly(tuple(a * c for a in self.coeffs))

    def shift_up(self, k: int) -> "Poly":
        """Multiply by t**k."""
        if self.is_zero or k == 0:
            return self
        return Poly((QZERO,) * k + self.coeffs)

    def map_coeffs(self, f: Callable) -> "Poly":
        return Poly(tuple(f(c) for c in self.coeffs))

    # -- field-coefficient division -------------------------------------

    def divmod(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.deg < other.deg:
            return Poly(()), self
        rem = list(self.coeffs)
        dlc = other.lc
        dd = other.deg
        qd = len(rem) - 1 - dd
        quo = [QZERO] * (qd + 1)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if _is_zero(c):
                continue
            q = c / dlc
            quo[i - dd] = q
            for j, b in enumerate(other.coeffs):
                rem[i - dd + j] = rem[i - dd + j] - q * b
        return Poly(quo), Poly(rem[:dd])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def divexact(self, other: "Poly") -> "Poly":
        """Exact division valid for ring coefficients (raises if not exact)."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero:
            return Poly(())
        rem = list(self.coeffs)
        dd = other.deg
        if self.deg < dd:
            raise ValueError("inexact polynomial division")
        quo = [QZERO] * (self.deg - dd + 1)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if _is_zero(c):
                continue
            q = _coeff_divexact(c, other.lc)
            quo[i - dd] = q
            for j, b in enumerate(other.coeffs):
                rem[i - dd + j] = rem[i - dd + j] - q * b
        if any(not _is_zero(c) for c in rem[:dd]):
            raise ValueError("inexact polynomial division")
        return Poly(quo)

    def scale_divexact(self, c) -> "Poly":
        return Poly(tuple(_coeff_divexact(a, c) for a in self.coeffs))

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        lc = self.lc
        if lc == QONE:
            return self
        inv = QONE / lc
        return self.scale(inv)

    # -- calculus and evaluation ----------------------------------------

    def derivative(self) -> "Poly":
        """Formal derivative with respect to the polynomial variable."""
        return Poly(tuple(c * Fraction(i) for i, c in enumerate(self.coeffs) if i))

    def antiderivative(self) -> "Poly":
        return Poly((QZERO,) + tuple(c / Fraction(i + 1) for i, c in enumerate(self.coeffs)))

    def eval(self, point):
        acc = QZERO
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def compose_linear_shift(self, a) -> "Poly":
        """p(t + a)."""
        acc = Poly(())
        shift = Poly((a, QONE))
        for c in reversed(self.coeffs):
            acc = acc * shift + Poly.const(c)
        return acc


def _coeff_divexact(a, b):
    if isinstance(a, Poly):
        if isinstance(b, Poly):
            return a.divexact(b)
        return a.scale_divexact(b)
    if isinstance(b, Poly):
        # scalar divided by polynomial: only exact when b is constant
        if b.deg != 0:
            raise ValueError("inexact coefficient division")
        return a / b.coeffs[0]
    return a / b


# -- gcd machinery ------------------------------------------------------


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over a field."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def gcd_ext(a: Poly, b: Poly) -> Tuple[Poly, Poly, Poly]:
    """Extended Euclid: g = s*a + t*b with g the monic gcd.

    gcd_ext(0, 0) returns (0, 0, 0).
    """
    r0, r1 = a, b
    s0, s1 = Poly((QONE,)), Poly(())
    t0, t1 = Poly(()), Poly((QONE,))
    while not r1.is_zero:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero:
        return Poly(()), Poly(()), Poly(())
    lc = r0.lc
    inv = QONE / lc
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def invert_mod(a: Poly, m: Poly) -> Poly:
    """Inverse of `a` modulo `m`; requires gcd(a, m) = 1."""
    g, s, _ = gcd_ext(a, m)
    if g.deg != 0:
        raise ValueError("element not invertible modulo the given polynomial")
    return (s.scale(QONE / g.coeffs[0])) % m


def squarefree(p: Poly) -> List[Tuple[Poly, int]]:
    """Squarefree factorization by Yun's algorithm (characteristic zero).

    Returns monic pairwise-coprime squarefree factors with multiplicities;
    the product of factor**mult equals p up to a coefficient-field unit.
    """
    if p.is_zero:
        raise ValueError("squarefree factorization of the zero polynomial")
    p = p.monic()
    if p.deg < 1:
        return []
    dp = p.derivative()
    g = poly_gcd(p, dp)
    out: List[Tuple[Poly, int]] = []
    if g.deg == 0:
        return [(p, 1)]
    c = p // g
    d = (dp // g) - c.derivative()
    k = 1
    while c.deg > 0:
        a = poly_gcd(c, d)
        if a.deg > 0:
            out.append((a, k))
        c = c // a
        d = (d // a) - c.derivative()
        k += 1
    return out


def squarefree_part(p: Poly) -> Poly:
    g = poly_gcd(p, p.derivative())
    return (p // g).monic()


# -- resultants and subresultants ----------------------------------------


def resultant(a: Poly, b: Poly):
    """Resultant with the Sylvester convention (rows of `a` first).

    Coefficients must form a field.
    """
    if a.is_zero or b.is_zero:
        return QZERO
    sign = 1
    acc = QONE
    p, q = a, b
    if p.deg < q.deg:
        if (p.deg * q.deg) % 2:
            sign = -sign
        p, q = q, p
    while q.deg > 0:
        r = p % q
        if r.is_zero:
            return QZERO
        if (p.deg * q.deg) % 2:
            sign = -sign
        acc = acc * _coeff_pow(q.lc, p.deg - r.deg)
        p, q = q, r
    acc = acc * _coeff_pow(q.lc, p.deg)
    return acc if sign > 0 else -acc


def _coeff_pow(c, n: int):
    out = QONE
    for _ in range(n):
        out = out * c
    return out


def pseudo_rem(a: Poly, b: Poly) -> Poly:
    """prem(a, b) = lc(b)^(deg a - deg b + 1) * a  mod b, ring coefficients."""
    if b.is_zero:
        raise ZeroDivisionError("pseudo-remainder by zero")
    e = a.deg - b.deg + 1
    r = a
    d = b.lc
    while not r.is_zero and r.deg >= b.deg:
        m = Poly((QZERO,) * (r.deg - b.deg) + (r.lc,))
        r = r.scale(d) - b * m
        e -= 1
    for _ in range(max(e, 0)):
        r = r.scale(d)
    return r


def subresultant_prs(a: Poly, b: Poly):
    """Subresultant polynomial remainder sequence and the resultant.

    Returns (res, prs) where prs = [a, b, R2, ...] are the subresultant
    remainders (exact divisions keep coefficient growth controlled) and res
    is the resultant of a and b in the Sylvester rows-of-a-first convention.
    Accepts ring coefficients (e.g. Poly-in-z values) for the prs; the
    resultant is computed over the fraction field.
    """
    if a.is_zero and b.is_zero:
        raise ValueError("subresultant sequence of two zero polynomials")
    prs = [a, b]
    if a.is_zero or b.is_zero:
        return QZERO, prs
    if a.deg < b.deg:
        res, tail = subresultant_prs(b, a)
        if (a.deg * b.deg) % 2:
            res = -res
        return res, [a, b] + tail[2:]
    r_prev, r_cur = a, b
    d = a.deg - b.deg
    beta = QONE if (d + 1) % 2 == 0 else -QONE
    psi = -QONE
    while True:
        prem = pseudo_rem(r_prev, r_cur)
        if prem.is_zero:
            break
        r_next = prem.scale_divexact(beta)
        prs.append(r_next)
        d_next = r_cur.deg - r_next.deg
        neg_lc = -r_cur.lc
        if d == 0:
            pass  # psi unchanged
        else:
            psi = _ring_quo(_coeff_pow_ring(neg_lc, d), _coeff_pow_ring(psi, d - 1))
        beta = _ring_mul(neg_lc, _coeff_pow_ring(psi, d_next))
        d = d_next
        r_prev, r_cur = r_cur, r_next
        if r_cur.deg == 0:
            break
    res = _resultant_via_field(a, b)
    return res, prs


def _coeff_pow_ring(c, n: int):
    out = QONE
    for _ in range(n):
        out = _ring_mul(out, c)
    return out


def _ring_mul(a, b):
    if isinstance(a, Poly) and not isinstance(b, Poly):
        return a.scale(b)
    if isinstance(b, Poly) and not isinstance(a, Poly):
        return b.scale(a)
    return a * b


def _ring_quo(a, b):
    if isinstance(a, Poly):
        if isinstance(b, Poly):
            return a.divexact(b)
        return a.scale_divexact(b)
    if isinstance(b, Poly):
        if b.deg != 0:
            raise ValueError("inexact coefficient division")
        return a / b.coeffs[0]
    return a / b


def _resultant_via_field(a: Poly, b: Poly):
    """Resultant over ring coefficients by lifting them to the fraction field."""
    if not (isinstance(a.lc, Poly) or isinstance(b.lc, Poly)):
        return resultant(a, b)
    fa = a.map_coeffs(lambda c: Frac(c if isinstance(c, Poly) else Poly.const(c)))
    fb = b.map_coeffs(lambda c: Frac(c if isinstance(c, Poly) else Poly.const(c)))
    res = resultant(fa, fb)
    if isinstance(res, Frac):
        if res.den.deg != 0:
            raise AssertionError("ring resultant produced a proper fraction")
        num = res.num.scale(QONE / res.den.coeffs[0])
        return num
    return Poly.const(res)


class Frac:
    """Reduced fraction of two Polys over a common coefficient field.

    Denominators are monic; gcd(num, den) = 1.  Used both as the generic
    rational-function type and as the fraction field K(z) needed when
    resultants are taken over polynomial coefficients.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = None):
        if den is None:
            den = Poly((QONE,))
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            self.num = Poly(())
            self.den = Poly((QONE,))
            return
        g = poly_gcd(num, den)
        if g.deg > 0:
            num = num // g
            den = den // g
        lc = den.lc
        if lc != QONE:
            inv = QONE / lc
            num = num.scale(inv)
            den = den.scale(inv)
        self.num = num
        self.den = den

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __bool__(self) -> bool:
        return not self.num.is_zero

    def __eq__(self, other) -> bool:
        return isinstance(other, Frac) and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash(("Frac", self.num, self.den))

    def __repr__(self) -> str:
        return f"Frac({self.num!r}, {self.den!r})"

    def _coerce(self, other) -> Optional["Frac"]:
        if isinstance(other, Frac):
            return other
        if isinstance(other, Poly):
            return Frac(other)
        if isinstance(other, (int, Fraction)):
            return Frac(Poly.const(Fraction(other)))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Frac(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return Frac(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Frac(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("division by zero fraction")
        return Frac(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self


# -- partial fractions ---------------------------------------------------


def partial_fractions(num: Poly, den: Poly, denfactors: Sequence[Tuple[Poly, int]]):
    """Partial fraction decomposition over pairwise-coprime monic factors.

    Returns (polypart, terms) with terms a list of (numerator, factor, power)
    and deg(numerator) < deg(factor).  The factor list must rebuild `den` up
    to a coefficient-field unit.
    """
    if den.is_zero:
        raise ZeroDivisionError("zero denominator")
    check = Poly((QONE,))
    for p, m in denfactors:
        if m < 1:
            raise ValueError("factor multiplicities must be positive")
        check = check * p ** m
    if check.monic() != den.monic():
        raise ValueError("inconsistent denominator factor list")
    # absorb the denominator's unit into the numerator
    num = num.scale(QONE / den.lc)
    den = den.monic()
    polypart, rest = num.divmod(den)
    terms = []
    for idx, (p, m) in enumerate(denfactors):
        pm = (p ** m).monic()
        other = Poly((QONE,))
        for q, k in denfactors[idx + 1:]:
            other = other * q ** k
        other = other.monic()
        if other.deg == 0:
            a = rest % pm
        else:
            g, s, t = gcd_ext(pm, other)
            if g.deg != 0:
                raise ValueError("denominator factors are not pairwise coprime")
            # rest/(pm*other) = (rest*t mod pm)/pm + rest'/other
            a = (rest * t) % pm
            rest = (rest - a * other).divexact(pm)
        # p-adic expansion of a/p^m
        digits = []
        r = a
        for _ in range(m):
            r, d = r.divmod(p)
            digits.append(d)
        for i, d in enumerate(digits):
            if not d.is_zero:
                terms.append((d, p, m - i))
    return polypart, terms


# -- dense linear algebra --------------------------------------------------


def solve_linear(rows: Sequence[Sequence], rhs: Sequence):
    """Solve A x = rhs over a field.

    Returns (particular, nullspace): `particular` is one solution or None if
    the system is inconsistent; `nullspace` is a basis of {v : A v = 0}.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    aug = [list(row) + [r] for row, r in zip(rows, rhs)]
    pivots: List[int] = []
    r = 0
    for c in range(n):
        pr = None
        for i in range(r, m):
            if not _is_zero(aug[i][c]):
                pr = i
                break
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        pv = aug[r][c]
        aug[r] = [v / pv for v in aug[r]]
        for i in range(m):
            if i != r and not _is_zero(aug[i][c]):
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    # consistency
    for i in range(r, m):
        if not _is_zero(aug[i][n]):
            return None, _nullspace(aug[:r], pivots, n)
    particular = [QZERO] * n
    for i, c in enumerate(pivots):
        particular[c] = aug[i][n]
    return particular, _nullspace(aug[:r], pivots, n)


def _nullspace(reduced, pivots, n):
    basis = []
    pivset = set(pivots)
    for free in range(n):
        if free in pivset:
            continue
        v = [QZERO] * n
        v[free] = QONE
        for i, c in enumerate(pivots):
            v[c] = -reduced[i][free]
        basis.append(v)
    return basis
