"""Differential field towers of transcendental monomial extensions.

A tower is an ordered list of generators over Q: optional formal constant
symbols (derivative zero), then the base variable x (derivative one), then
monomials t with Dt in K[t] where K is the field generated by everything
below.  Supported monomial kinds are logarithms (Dt = Da/a), exponentials
(Dt = Da*t), primitives (Dt = a) and hyperexponentials (Dt = a*t); nonlinear
monomials such as tan are rejected at construction.

Elements are stored recursively: an `Elem` at level i is a reduced fraction
of polynomials in generator i whose coefficients are elements of strictly
lower level, bottoming out at plain Fractions.  Reduction and the
minimal-level invariant (an element free of the top generator is demoted)
make zero-testing and equality syntactic.  Everything is immutable, so the
whole module is thread-safe by construction.

The structural transcendence conditions are enforced by the tower builder in
`frontend.py`; towers assembled by hand with dependent generators fall
outside the guarantees, exactly as heuristic operation is understood in this
domain.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple, Union

from .algebra import Poly, QONE, QZERO, gcd_ext, poly_gcd, squarefree

# generator kinds
BASE = "base"
LOG = "log"
EXP = "exp"
PRIMITIVE = "primitive"
HYPEREXP = "hyperexp"
CONST = "const"

# classification of squarefree polynomials w.r.t. the derivation
NORMAL = "normal"
SPECIAL = "special"
MIXED = "mixed"

FieldElement = Union[Fraction, "Elem"]


class Elem:
    """Tower element: reduced fraction in the level's generator.

    Coefficients of num/den are elements of lower level (Fractions at the
    bottom).  Invariants: den monic, gcd(num, den) = 1, and the element
    genuinely involves the level's generator (otherwise it would have been
    demoted by `make_elem`).
    """

    __slots__ = ("level", "num", "den")

    def __init__(self, level: int, num: Poly, den: Poly):
        self.level = level
        self.num = num
        self.den = den

    def __bool__(self) -> bool:
        return not self.num.is_zero

    def __eq__(self, other) -> bool:
        if isinstance(other, Elem):
            return (self.level == other.level and self.num == other.num
                    and self.den == other.den)
        return False

    def __hash__(self) -> int:
        return hash(("Elem", self.level, self.num, self.den))

    def __repr__(self) -> str:
        return f"Elem(level={self.level}, num={self.num!r}, den={self.den!r})"

    # -- arithmetic ------------------------------------------------------

    def _binary(self, other, op):
        lo = level_of(other)
        if lo > self.level:
            return NotImplemented
        if isinstance(other, int):
            other = Fraction(other)
        elif not isinstance(other, (Fraction, Elem)):
            return NotImplemented
        return op(self, other)

    def __add__(self, other):
        return self._binary(other, _add)

    __radd__ = __add__

    def __neg__(self):
        return Elem(self.level, -self.num, self.den)

    def __sub__(self, other):
        r = self._binary(other, _add_neg)
        return r

    def __rsub__(self, other):
        r = self.__neg__().__add__(other)
        return r

    def __mul__(self, other):
        return self._binary(other, _mul)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binary(other, _div)

    def __rtruediv__(self, other):
        inv = _invert(self)
        if isinstance(other, int):
            other = Fraction(other)
        return inv * other

    def __pow__(self, n: int):
        if n == 0:
            return Fraction(1)
        base: FieldElement = self
        if n < 0:
            base = _invert(self)
            n = -n
        out: FieldElement = Fraction(1)
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out


def level_of(v) -> int:
    if isinstance(v, Elem):
        return v.level
    return -1


def make_elem(level: int, num: Poly, den: Poly) -> FieldElement:
    """Normalize a fraction of level-`level` polynomials into a FieldElement.

    Reduces by the gcd, makes the denominator monic, and demotes to the
    coefficient (minimal level) when the generator cancels out.
    """
    if den.is_zero:
        raise ZeroDivisionError("division by the zero element")
    if num.is_zero:
        return Fraction(0)
    g = poly_gcd(num, den)
    if g.deg > 0:
        num = num // g
        den = den // g
    lc = den.lc
    if not (isinstance(lc, Fraction) and lc == 1):
        inv = _invert_coeff(lc)
        num = num.scale(inv)
        den = den.scale(inv)
    if den.deg == 0 and num.deg == 0:
        return num.coeffs[0]
    return Elem(level, num, den)


def as_poly_pair(v: FieldElement, level: int) -> Tuple[Poly, Poly]:
    """View a tower element as (num, den) polynomials in generator `level`."""
    lv = level_of(v)
    if lv > level:
        raise ValueError("element lives above the requested level")
    if lv == level:
        return v.num, v.den
    if isinstance(v, Fraction) and v == 0:
        return Poly(()), Poly((QONE,))
    return Poly((v,)), Poly((QONE,))


def from_poly(level: int, p: Poly) -> FieldElement:
    return make_elem(level, p, Poly((QONE,)))


def _invert_coeff(c):
    if isinstance(c, Fraction):
        return QONE / c
    return _invert(c)


def _invert(e: FieldElement) -> FieldElement:
    if isinstance(e, Fraction):
        if e == 0:
            raise ZeroDivisionError("division by the zero element")
        return QONE / e
    return make_elem(e.level, e.den, e.num)


def _add(a: Elem, b) -> FieldElement:
    if isinstance(b, Elem) and b.level == a.level:
        return make_elem(a.level, a.num * b.den + b.num * a.den, a.den * b.den)
    if not b:
        return a
    return make_elem(a.level, a.num + a.den.scale(b), a.den)


def _add_neg(a: Elem, b) -> FieldElement:
    if isinstance(b, Elem) and b.level == a.level:
        return make_elem(a.level, a.num * b.den - b.num * a.den, a.den * b.den)
    if not b:
        return a
    return make_elem(a.level, a.num - a.den.scale(b), a.den)


def _mul(a: Elem, b) -> FieldElement:
    if isinstance(b, Elem) and b.level == a.level:
        return make_elem(a.level, a.num * b.num, a.den * b.den)
    if not b:
        return Fraction(0)
    return make_elem(a.level, a.num.scale(b), a.den)


def _div(a: Elem, b) -> FieldElement:
    if isinstance(b, Elem) and b.level == a.level:
        return make_elem(a.level, a.num * b.den, a.den * b.num)
    if not b:
        raise ZeroDivisionError("division by the zero element")
    return make_elem(a.level, a.num, a.den.scale(b))


# -- tower structure ---------------------------------------------------


@dataclass(frozen=True)
class Monomial:
    """One tower generator with its cached derivative Dt in K[t]."""

    kind: str
    name: str
    arg: Optional[FieldElement] = None      # log/exp argument, primitive deriv, hyperexp logderiv
    deriv: Poly = field(default_factory=Poly)  # Dt as polynomial in t over lower levels
    origin: Optional[tuple] = None          # numeric origin for const symbols, e.g. ("ln", Fraction(2))


class Tower:
    """Frozen ordered list of generators; index = element level."""

    def __init__(self, monomials: Sequence[Monomial], base_level: int):
        self.monomials = tuple(monomials)
        self.base_level = base_level
        if not (0 <= base_level < len(self.monomials)):
            raise ValueError("tower must contain a base variable")
        if self.monomials[base_level].kind != BASE:
            raise ValueError("base_level must point at the base variable")

    # -- construction ---------------------------------------------------

    @classmethod
    def rational(cls, var: str = "x", const_names: Sequence[str] = ()) -> "Tower":
        mons = [Monomial(CONST, n, deriv=Poly(())) for n in const_names]
        mons.append(Monomial(BASE, var, deriv=Poly((QONE,))))
        return cls(mons, len(const_names))

    def _extend(self, mon: Monomial) -> "Tower":
        return Tower(self.monomials + (mon,), self.base_level)

    def extend_log(self, arg: FieldElement, name: str) -> "Tower":
        if not arg:
            raise ZeroDivisionError("logarithm of the zero element")
        d = self.derive(arg) / arg
        return self._extend(Monomial(LOG, name, arg=arg, deriv=Poly((d,))))

    def extend_exp(self, arg: FieldElement, name: str) -> "Tower":
        da = self.derive(arg)
        return self._extend(Monomial(EXP, name, arg=arg, deriv=Poly((QZERO, da))))

    def extend_primitive(self, deriv: FieldElement, name: str) -> "Tower":
        return self._extend(Monomial(PRIMITIVE, name, arg=deriv, deriv=Poly((deriv,))))

    def extend_hyperexp(self, logderiv: FieldElement, name: str) -> "Tower":
        return self._extend(Monomial(HYPEREXP, name, arg=logderiv, deriv=Poly((QZERO, logderiv))))

    def truncate(self, level: int) -> "Tower":
        """Tower containing generators 0..level."""
        if level < self.base_level:
            raise ValueError("cannot truncate below the base variable")
        return Tower(self.monomials[:level + 1], self.base_level)

    # -- queries ----------------------------------------------------------

    @property
    def top_level(self) -> int:
        return len(self.monomials) - 1

    def gen(self, level: int) -> FieldElement:
        return Elem(level, Poly((QZERO, QONE)), Poly((QONE,)))

    def name(self, level: int) -> str:
        return self.monomials[level].name

    def is_constant(self, e: FieldElement) -> bool:
        return level_of(e) < self.base_level

    # -- derivation ---------------------------------------------------------

    def derive(self, e: FieldElement) -> FieldElement:
        """Apply the tower derivation (chain rule over all generators)."""
        if isinstance(e, Fraction):
            return Fraction(0)
        num, den = e.num, e.den
        dnum = self.derive_poly(num, e.level)
        if den.deg == 0 and den.coeffs[0] == QONE:
            return from_poly(e.level, dnum)
        dden = self.derive_poly(den, e.level)
        return make_elem(e.level, dnum * den - num * dden, den * den)

    def derive_poly(self, p: Poly, level: int) -> Poly:
        """Derivation of a polynomial in generator `level`; lands in K[t]."""
        dcoeffs = p.map_coeffs(self.derive)
        dt = self.monomials[level].deriv
        if dt.is_zero:
            return dcoeffs
        return dcoeffs + p.derivative() * dt

    def partial(self, e: FieldElement, param_level: int) -> FieldElement:
        """Partial derivative with respect to a constant-symbol generator.

        Treats the base variable as fixed; defined for towers whose
        monomials above the parameter are logs and exponentials (their
        parameter derivative has a closed form by the chain rule).
        """
        if isinstance(e, Fraction):
            return Fraction(0)
        lvl = e.level
        num, den = e.num, e.den
        dnum = self._partial_poly(num, lvl, param_level)
        dden = self._partial_poly(den, lvl, param_level)
        return make_elem(lvl, dnum * den - num * dden, den * den)

    def _partial_poly(self, p: Poly, level: int, param_level: int) -> Poly:
        dcoeffs = p.map_coeffs(lambda c: self.partial(c, param_level))
        dgen = self._partial_gen(level, param_level)
        if isinstance(dgen, Poly):
            return dcoeffs + p.derivative() * dgen
        if not dgen:
            return dcoeffs
        return dcoeffs + p.derivative().scale(dgen)

    def _partial_gen(self, level: int, param_level: int):
        mon = self.monomials[level]
        if level == param_level:
            return QONE
        if mon.kind in (CONST, BASE):
            return Fraction(0)
        if mon.kind == LOG:
            return self.partial(mon.arg, param_level) / mon.arg
        if mon.kind == EXP:
            da = self.partial(mon.arg, param_level)
            # d/dy exp(a) = (da/dy) * t: polynomial in t
            return Poly((QZERO, da)) if da else Fraction(0)
        raise ValueError(f"parameter derivative undefined for {mon.kind} monomials")


# -- classification and canonical representation ---------------------------


def classify(p: Poly, tower: Tower, level: int) -> str:
    """Classify a squarefree polynomial as NORMAL, SPECIAL or MIXED."""
    if p.is_zero:
        raise ValueError("cannot classify the zero polynomial")
    sf = poly_gcd(p, p.derivative())
    if sf.deg > 0:
        raise ValueError("classification requires a squarefree polynomial")
    if p.deg == 0:
        return SPECIAL  # units divide everything, including their derivative
    g = poly_gcd(p, tower.derive_poly(p, level))
    if g.deg == 0:
        return NORMAL
    if g.deg == p.deg:
        return SPECIAL
    return MIXED


def splitting_factorization(d: Poly, tower: Tower, level: int) -> Tuple[Poly, Poly]:
    """Split d = special * normal up to a unit of the coefficient field.

    Every squarefree factor of the special part is special; every irreducible
    factor of the normal part is normal.  Mixed squarefree factors are
    refined by iterated gcds with their derivative.
    """
    if d.is_zero:
        raise ValueError("cannot split the zero polynomial")
    special = Poly((QONE,))
    normal = Poly((QONE,))
    if d.deg == 0:
        return special, normal
    for q, m in squarefree(d):
        pending = [q]
        while pending:
            p = pending.pop()
            if p.deg == 0:
                continue
            kind = classify(p, tower, level)
            if kind == NORMAL:
                normal = normal * p ** m
            elif kind == SPECIAL:
                special = special * p ** m
            else:
                g = poly_gcd(p, tower.derive_poly(p, level))
                pending.append(g)
                pending.append(p // g)
    return special, normal


@dataclass(frozen=True)
class CanonicalSplit:
    """f = polypart + special fraction + normal fraction in K(t)."""

    level: int
    polypart: Poly
    special_num: Poly
    special_den: Poly
    normal_num: Poly
    normal_den: Poly

    def polypart_elem(self) -> FieldElement:
        return from_poly(self.level, self.polypart)

    def special_elem(self) -> FieldElement:
        return make_elem(self.level, self.special_num, self.special_den)

    def normal_elem(self) -> FieldElement:
        return make_elem(self.level, self.normal_num, self.normal_den)

    def resum(self) -> FieldElement:
        return self.polypart_elem() + self.special_elem() + self.normal_elem()


def canonical_split(f: FieldElement, tower: Tower, level: Optional[int] = None) -> CanonicalSplit:
    """Canonical representation of f at the requested level."""
    if level is None:
        level = level_of(f)
    if level < tower.base_level:
        raise ValueError("canonical split needs at least the base level")
    num, den = as_poly_pair(f, level)
    polypart, rest = num.divmod(den)
    one = Poly((QONE,))
    if rest.is_zero:
        return CanonicalSplit(level, polypart, Poly(()), one, Poly(()), one)
    d_s, d_n = splitting_factorization(den, tower, level)
    if d_s.deg == 0:
        return CanonicalSplit(level, polypart, Poly(()), one, rest, den.monic())
    if d_n.deg == 0:
        return CanonicalSplit(level, polypart, rest, den.monic(), Poly(()), one)
    d_s = d_s.monic()
    d_n = d_n.monic()
    g, s, t = gcd_ext(d_s, d_n)
    if g.deg != 0:
        raise AssertionError("special and normal parts are not coprime")
    # rest/(d_s d_n) = (rest*t mod d_s)/d_s + remainder/d_n
    a_s = (rest * t) % d_s
    a_n = (rest - a_s * d_n).divexact(d_s)
    return CanonicalSplit(level, polypart, a_s, d_s, a_n, d_n)
