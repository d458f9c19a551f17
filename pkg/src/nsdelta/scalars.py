"""Exact coefficient arithmetic: rational functions in q, t and truncated u-polynomials.

Two interchangeable coefficient domains are provided.  ``SymbolicDomain``
computes with exact rational functions in q, t over the integers (class
``QtRat``).  ``SpecializedDomain`` replaces them by tuples of exact rational
numbers evaluated on the four-point orbit of a random base point under
(q,t) -> (1/q,1/t) and t -> 1/t, which turns identity checks into fast
Schwartz-Zippel style evidence while keeping the bar involution and the
t-inversion available.

Scalars of either domain support +, -, *, / (exact), ==, ``is_zero``,
``bar`` (q -> 1/q, t -> 1/t) and ``invert_t`` (t -> 1/t only).
"""

from __future__ import annotations

from fractions import Fraction

from sympy.polys.domains import ZZ
from sympy.polys.rings import ring

_RING, _q, _t = ring("q,t", ZZ)

# Lazy fraction policy: always strip integer content, run a full bivariate
# gcd only when the term count passes this threshold.
_GCD_THRESHOLD = 48


class PoleError(ZeroDivisionError):
    """Evaluation or division hit a zero denominator."""


def _poly_from_triples(triples):
    return _RING.from_dict({(int(a), int(b)): ZZ(c) for (a, b, c) in triples})


def _poly_to_triples(p):
    return sorted((int(m[0]), int(m[1]), int(c)) for m, c in p.iterterms())


def _reverse_exponents(p, flip_q, flip_t):
    """Return p with the chosen exponents reversed inside its degree box."""
    if not p:
        return p, 0, 0
    aq = max(m[0] for m in p.itermonoms()) if flip_q else 0
    bt = max(m[1] for m in p.itermonoms()) if flip_t else 0
    d = {}
    for m, c in p.iterterms():
        d[(aq - m[0] if flip_q else m[0], bt - m[1] if flip_t else m[1])] = c
    return _RING.from_dict(d), aq, bt


def _eval_poly(p, q0, t0):
    acc = Fraction(0)
    for m, c in p.iterterms():
        acc += Fraction(int(c)) * q0 ** m[0] * t0 ** m[1]
    return acc


class QtRat:
    """A rational function in q, t kept as a lazily reduced fraction."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, reduce=True):
        if den is None:
            den = _RING.one
        if not den:
            raise PoleError("zero denominator")
        self.num = num
        self.den = den
        if reduce:
            self._normalize()

    def _normalize(self):
        num, den = self.num, self.den
        if not num:
            self.num, self.den = _RING.zero, _RING.one
            return
        cn, num = num.primitive()
        cd, den = den.primitive()
        g = ZZ.gcd(cn, cd)
        cn //= g
        cd //= g
        if den.LC < 0:
            num, den = -num, -den
        if len(den) == 1:
            # Monomial denominator: cancel the common q^a t^b part exactly.
            (dm,) = den.itermonoms()
            sq = min(min(m[0] for m in num.itermonoms()), dm[0])
            st = min(min(m[1] for m in num.itermonoms()), dm[1])
            if sq or st:
                shift = _RING.from_dict({(sq, st): ZZ(1)})
                num = num.exquo(shift)
                den = den.exquo(shift)
        elif len(num) + len(den) > _GCD_THRESHOLD:
            g = num.gcd(den)
            if not g.is_one:
                num = num.exquo(g)
                den = den.exquo(g)
        self.num = num * cn
        self.den = den * cd

    # -- ring structure ----------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, QtRat):
            return x
        if isinstance(x, int):
            return QtRat(_RING(ZZ(x)), reduce=False)
        if isinstance(x, Fraction):
            return QtRat(_RING(ZZ(x.numerator)), _RING(ZZ(x.denominator)), reduce=False)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return QtRat(self.num + other.num, self.den)
        if self.den.is_one:
            return QtRat(self.num * other.den + other.num, other.den)
        if other.den.is_one:
            return QtRat(self.num + other.num * self.den, self.den)
        g = self.den.gcd(other.den)
        if g.is_one:
            return QtRat(self.num * other.den + other.num * self.den, self.den * other.den)
        da = self.den.exquo(g)
        db = other.den.exquo(g)
        return QtRat(self.num * db + other.num * da, da * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QtRat(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QtRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise PoleError("division by zero rational function")
        return QtRat(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n):
        if n < 0:
            return QtRat(self.den, self.num) ** (-n)
        return QtRat(self.num ** n, self.den ** n)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    def __bool__(self):
        return bool(self.num)

    def is_zero(self):
        return not self.num

    # -- involutions and evaluation ----------------------------------------

    def bar(self):
        """q -> 1/q, t -> 1/t, renormalized to a polynomial fraction."""
        rn, anq, ant = _reverse_exponents(self.num, True, True)
        rd, adq, adt = _reverse_exponents(self.den, True, True)
        shift_num = _RING.from_dict({(max(0, adq - anq), max(0, adt - ant)): ZZ(1)})
        shift_den = _RING.from_dict({(max(0, anq - adq), max(0, ant - adt)): ZZ(1)})
        return QtRat(rn * shift_num, rd * shift_den)

    def invert_t(self):
        """t -> 1/t with q left alone."""
        rn, _, ant = _reverse_exponents(self.num, False, True)
        rd, _, adt = _reverse_exponents(self.den, False, True)
        shift_num = _RING.from_dict({(0, max(0, adt - ant)): ZZ(1)})
        shift_den = _RING.from_dict({(0, max(0, ant - adt)): ZZ(1)})
        return QtRat(rn * shift_num, rd * shift_den)

    def specialize(self, q0, t0):
        """Exact evaluation at a rational point; raises PoleError on a pole."""
        q0, t0 = Fraction(q0), Fraction(t0)
        dv = _eval_poly(self.den, q0, t0)
        if dv == 0:
            # The lazy fraction may merely look singular; reduce and retry.
            g = self.num.gcd(self.den)
            if not g.is_one:
                return QtRat(self.num.exquo(g), self.den.exquo(g)).specialize(q0, t0)
            raise PoleError(f"pole at q={q0}, t={t0}")
        return _eval_poly(self.num, q0, t0) / dv

    def reduced(self):
        g = self.num.gcd(self.den)
        if g.is_one:
            return self
        return QtRat(self.num.exquo(g), self.den.exquo(g))

    def as_fraction(self):
        """The value as a rational number, if q and t do not appear."""
        r = self.reduced()
        if r.num.degree(0) > 0 or r.num.degree(1) > 0 or r.den.degree(0) > 0 or r.den.degree(1) > 0:
            raise ValueError(f"not a constant: {r}")
        n = int(r.num.LC) if r.num else 0
        return Fraction(n, int(r.den.LC))

    def to_triples(self):
        return {"num": _poly_to_triples(self.num), "den": _poly_to_triples(self.den)}

    @staticmethod
    def from_triples(data):
        return QtRat(_poly_from_triples(data["num"]), _poly_from_triples(data["den"]))

    def __repr__(self):
        r = self.reduced()
        if r.den.is_one:
            return str(r.num)
        return f"({r.num})/({r.den})"


class SymbolicDomain:
    """Scalar factory for exact computation in Q(q,t).

    Stateless, so a singleton: caches keyed on the domain are shared.
    """

    name = "symbolic"
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        if getattr(self, "zero", None) is not None:
            return
        self.zero = QtRat(_RING.zero, reduce=False)
        self.one = QtRat(_RING.one, reduce=False)
        self.q = QtRat(_q, reduce=False)
        self.t = QtRat(_t, reduce=False)

    def from_int(self, n):
        return QtRat(_RING(ZZ(n)), reduce=False)

    def from_fraction(self, fr):
        fr = Fraction(fr)
        return QtRat(_RING(ZZ(fr.numerator)), _RING(ZZ(fr.denominator)), reduce=False)

    def q_pow(self, e):
        if e >= 0:
            return QtRat(_q ** e, reduce=False)
        return QtRat(_RING.one, _q ** (-e), reduce=False)

    def t_pow(self, e):
        if e >= 0:
            return QtRat(_t ** e, reduce=False)
        return QtRat(_RING.one, _t ** (-e), reduce=False)

    def monomial(self, c, a, b):
        """c * q^a * t^b with integer exponents of either sign."""
        num = {(max(a, 0), max(b, 0)): ZZ(c)}
        den = {(max(-a, 0), max(-b, 0)): ZZ(1)}
        return QtRat(_RING.from_dict(num), _RING.from_dict(den), reduce=False)


class PointValue:
    """A scalar known only through its values on a 4-point (q,t) orbit."""

    __slots__ = ("domain", "vals")

    def __init__(self, domain, vals):
        self.domain = domain
        self.vals = vals

    def _coerce(self, x):
        if isinstance(x, PointValue):
            if x.domain is not self.domain:
                raise ValueError("mixed specialization domains")
            return x
        if isinstance(x, (int, Fraction)):
            f = Fraction(x)
            return PointValue(self.domain, (f, f, f, f))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PointValue(self.domain, tuple(a + b for a, b in zip(self.vals, other.vals)))

    __radd__ = __add__

    def __neg__(self):
        return PointValue(self.domain, tuple(-a for a in self.vals))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PointValue(self.domain, tuple(a * b for a, b in zip(self.vals, other.vals)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if any(b == 0 for b in other.vals):
            raise PoleError("specialized division by zero; pick another point")
        return PointValue(self.domain, tuple(a / b for a, b in zip(self.vals, other.vals)))

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n):
        if n < 0:
            if any(v == 0 for v in self.vals):
                raise PoleError("specialized inverse of zero")
            return PointValue(self.domain, tuple(v ** n for v in self.vals))
        return PointValue(self.domain, tuple(v ** n for v in self.vals))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.vals == other.vals

    def __bool__(self):
        return any(v != 0 for v in self.vals)

    def is_zero(self):
        return all(v == 0 for v in self.vals)

    def bar(self):
        v = self.vals
        return PointValue(self.domain, (v[1], v[0], v[3], v[2]))

    def invert_t(self):
        v = self.vals
        return PointValue(self.domain, (v[2], v[3], v[0], v[1]))

    def __repr__(self):
        return f"PointValue{self.vals}"


class SpecializedDomain:
    """Scalars evaluated on the orbit of (q0,t0) under bar and t-inversion.

    The base point must avoid 0 and +-1 in either coordinate and q0*t0 != 1,
    so that all four orbit points are distinct non-poles of the algebraic
    expressions in play.
    """

    name = "specialized"

    def __init__(self, q0, t0):
        q0, t0 = Fraction(q0), Fraction(t0)
        if q0 in (0, 1, -1) or t0 in (0, 1, -1) or q0 * t0 == 1 or q0 == t0:
            raise ValueError(f"bad specialization point ({q0}, {t0})")
        self.q0, self.t0 = q0, t0
        self.points = ((q0, t0), (1 / q0, 1 / t0), (q0, 1 / t0), (1 / q0, t0))
        self.zero = PointValue(self, (Fraction(0),) * 4)
        self.one = PointValue(self, (Fraction(1),) * 4)
        self.q = PointValue(self, tuple(p[0] for p in self.points))
        self.t = PointValue(self, tuple(p[1] for p in self.points))

    def from_int(self, n):
        f = Fraction(n)
        return PointValue(self, (f, f, f, f))

    def from_fraction(self, fr):
        f = Fraction(fr)
        return PointValue(self, (f, f, f, f))

    def q_pow(self, e):
        return PointValue(self, tuple(p[0] ** e for p in self.points))

    def t_pow(self, e):
        return PointValue(self, tuple(p[1] ** e for p in self.points))

    def monomial(self, c, a, b):
        c = Fraction(c)
        return PointValue(self, tuple(c * p[0] ** a * p[1] ** b for p in self.points))


class UPoly:
    """Polynomial in the formal variable u, truncated above degree K.

    Coefficients live in a base scalar domain; multiplication silently
    discards u-degrees beyond the truncation order.
    """

    __slots__ = ("dom", "coeffs")

    def __init__(self, dom, coeffs):
        self.dom = dom
        k = dom.order
        coeffs = list(coeffs)
        if len(coeffs) < k + 1:
            coeffs += [dom.base.zero] * (k + 1 - len(coeffs))
        self.coeffs = tuple(coeffs[: k + 1])

    def _coerce(self, x):
        if isinstance(x, UPoly):
            if x.dom.order != self.dom.order:
                raise ValueError("mixed u-truncation orders")
            return x
        if isinstance(x, (int, Fraction)):
            x = self.dom.base.from_fraction(Fraction(x))
        return UPoly(self.dom, [x])

    def __add__(self, other):
        other = self._coerce(other)
        return UPoly(self.dom, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return UPoly(self.dom, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        return UPoly(self.dom, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        k = self.dom.order
        out = [self.dom.base.zero] * (k + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(k + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return UPoly(self.dom, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if any(not c.is_zero() for c in other.coeffs[1:]):
            raise ValueError("UPoly division only by u-constants")
        c = other.coeffs[0]
        return UPoly(self.dom, [a / c for a in self.coeffs])

    def __eq__(self, other):
        other = self._coerce(other)
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __bool__(self):
        return any(not a.is_zero() for a in self.coeffs)

    def is_zero(self):
        return not bool(self)

    def bar(self):
        return UPoly(self.dom, [a.bar() for a in self.coeffs])

    def invert_t(self):
        return UPoly(self.dom, [a.invert_t() for a in self.coeffs])

    def u_coeff(self, k):
        """Raw <u^k> coefficient; callers add the (-1)^k sign themselves."""
        if k > self.dom.order:
            raise ValueError(f"u-degree {k} beyond truncation order {self.dom.order}")
        return self.coeffs[k]

    def __repr__(self):
        return " + ".join(f"({c})u^{i}" for i, c in enumerate(self.coeffs) if not c.is_zero()) or "0"


class UDomain:
    """Scalar domain of u-truncated polynomials over a base domain."""

    def __init__(self, base, order):
        self.base = base
        self.order = order
        self.name = f"u[{base.name},K={order}]"
        self.zero = UPoly(self, [base.zero])
        self.one = UPoly(self, [base.one])
        self.q = UPoly(self, [base.q])
        self.t = UPoly(self, [base.t])
        self.u = UPoly(self, [base.zero, base.one]) if order >= 1 else self.zero

    def from_int(self, n):
        return UPoly(self, [self.base.from_int(n)])

    def from_fraction(self, fr):
        return UPoly(self, [self.base.from_fraction(fr)])

    def q_pow(self, e):
        return UPoly(self, [self.base.q_pow(e)])

    def t_pow(self, e):
        return UPoly(self, [self.base.t_pow(e)])

    def monomial(self, c, a, b):
        return UPoly(self, [self.base.monomial(c, a, b)])

    def lift(self, scalar):
        """Embed a base scalar as a u-constant."""
        return UPoly(self, [scalar])

    def u_shift(self, scalar, m):
        """scalar * u^m as a UPoly (zero if m exceeds the order)."""
        if m > self.order:
            return self.zero
        return UPoly(self, [self.base.zero] * m + [scalar])


def domain_cache(domain):
    """A per-domain memo dict, attached to the domain object itself."""
    cache = getattr(domain, "_nsdelta_cache", None)
    if cache is None:
        cache = {}
        domain._nsdelta_cache = cache
    return cache


def u_coeff(s, k):
    """Coefficient extraction on UPoly scalars (module-level convenience)."""
    return s.u_coeff(k)


def bar_qt(s):
    """The bar involution q -> 1/q, t -> 1/t on any scalar."""
    return s.bar()


def specialize(s, q0, t0):
    """Exact rational evaluation of a symbolic scalar."""
    return s.specialize(q0, t0)
