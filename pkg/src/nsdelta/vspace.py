"""The polynomial representation V_ell = Q(q,t)[y_1..y_ell] (x) Sym[X].

Elements are stored as maps (y-exponent vector, partition) -> scalar with
the symmetric part in the power-sum basis, where the plethystic shifts
X -> X +- (t-1)y are term-local: p_k picks up +-(t^k - 1) y^k.
"""

from __future__ import annotations

from fractions import Fraction

from .partitions import sort_to_partition
from .scalars import UDomain
from .symfunc import SymFunc, _p_expansion


class VElem:
    """An element of V_ell."""

    __slots__ = ("domain", "level", "terms")

    def __init__(self, domain, level, terms):
        self.domain = domain
        self.level = level
        clean = {}
        for (yexp, lam), c in terms.items():
            if len(yexp) != level:
                raise ValueError(f"y-exponent vector {yexp} at level {level}")
            if not c.is_zero():
                clean[(tuple(yexp), tuple(lam))] = c
        self.terms = clean

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(domain, level=0):
        return VElem(domain, level, {})

    @staticmethod
    def one(domain, level=0):
        return VElem(domain, level, {((0,) * level, ()): domain.one})

    @staticmethod
    def from_symfunc(f, level=0):
        fp = f.convert("p")
        ze = (0,) * level
        return VElem(f.domain, level, {(ze, lam): c for lam, c in fp.coeffs.items()})

    def to_symfunc(self):
        if self.level != 0:
            raise ValueError("only level-0 elements are symmetric functions")
        return SymFunc(self.domain, "p", {lam: c for (_y, lam), c in self.terms.items()})

    # -- linear structure -------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return VElem(self.domain, self.level, out)

    def __neg__(self):
        return VElem(self.domain, self.level, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        return VElem(self.domain, self.level, {k: c * scalar for k, c in self.terms.items()})

    def __mul__(self, other):
        """Product in V_ell (same level)."""
        self._check(other)
        out = {}
        for (ya, la), ca in self.terms.items():
            for (yb, lb), cb in other.terms.items():
                key = (tuple(a + b for a, b in zip(ya, yb)), tuple(sorted(la + lb, reverse=True)))
                c = ca * cb
                out[key] = out[key] + c if key in out else c
        return VElem(self.domain, self.level, out)

    def __eq__(self, other):
        if not isinstance(other, VElem) or other.level != self.level:
            return False
        keys = set(self.terms) | set(other.terms)
        zero = self.domain.zero
        return all(self.terms.get(k, zero) == other.terms.get(k, zero) for k in keys)

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(y) + sum(lam) for (y, lam) in self.terms), default=0)

    def in_y_module(self):
        """True when every term has all y-exponents >= 1."""
        return all(min(y, default=1) >= 1 for (y, _lam) in self.terms)

    def _check(self, other):
        if other.level != self.level:
            raise ValueError(f"level mismatch {self.level} != {other.level}")

    def map_coeffs(self, fn):
        return VElem(self.domain, self.level, {k: fn(c) for k, c in self.terms.items()})

    def with_domain(self, domain):
        return VElem(domain, self.level, self.terms)

    # -- operators --------------------------------------------------------------

    def y_mult(self, i):
        """Multiplication by y_i."""
        if not (1 <= i <= self.level):
            raise ValueError(f"y_{i} out of range at level {self.level}")
        out = {}
        for (y, lam), c in self.terms.items():
            yy = list(y)
            yy[i - 1] += 1
            out[(tuple(yy), lam)] = c
        return VElem(self.domain, self.level, out)

    def hecke_t(self, i, inverse=False):
        """T_i F = s_i F + (1-t) y_i (F - s_i F)/(y_i - y_{i+1});
        the inverse is (T_i - (1-t))/t from the quadratic relation."""
        if not (1 <= i <= self.level - 1):
            raise ValueError(f"T_{i} out of range at level {self.level}")
        dom = self.domain
        if inverse:
            g = self.hecke_t(i)
            return (g - self.scale(dom.one - dom.t)).scale(dom.one / dom.t)
        one_minus_t = dom.one - dom.t
        out = {}

        def put(key, c):
            out[key] = out[key] + c if key in out else c

        for (y, lam), c in self.terms.items():
            a, b = y[i - 1], y[i]
            if a == b:
                put((y, lam), c)
                continue
            sy = list(y)
            sy[i - 1], sy[i] = b, a
            put((tuple(sy), lam), c)
            # (1-t) y_i * divided difference of the monomial pair.
            lo, hi, sign = (b, a, 1) if a > b else (a, b, -1)
            for cc in range(lo, hi):
                ey = list(y)
                ey[i - 1], ey[i] = cc + 1, a + b - 1 - cc
                put((tuple(ey), lam), c * one_minus_t * sign)
        return VElem(self.domain, self.level, out)

    def _pleth_shift(self, sign, pos, new_level):
        """X -> X + sign*(t-1)*y_pos applied to the Sym part, at new_level."""
        dom = self.domain
        out = {}

        def put(key, c):
            out[key] = out[key] + c if key in out else c

        for (y, lam), c in self.terms.items():
            base = tuple(y) + (0,) * (new_level - len(y))
            # expand prod_k (p_k + sign (t^k - 1) y_pos^k) over the parts
            acc = [((), 0, c)]
            for k in lam:
                nxt = []
                w = (dom.t_pow(k) - dom.one) * sign
                for kept, extra, coeff in acc:
                    nxt.append((kept + (k,), extra, coeff))
                    nxt.append((kept, extra + k, coeff * w))
                acc = nxt
            for kept, extra, coeff in acc:
                yy = list(base)
                yy[pos - 1] += extra
                put((tuple(yy), tuple(sorted(kept, reverse=True))), coeff)
        return VElem(dom, new_level, out)

    def d_plus(self):
        """d_+ : V_ell -> V_{ell+1}."""
        lv = self.level
        g = self._pleth_shift(+1, lv + 1, lv + 1)
        g = g.y_mult(lv + 1)
        for i in range(lv, 0, -1):
            g = g.hecke_t(i)
        return -g

    def d_plus_star(self):
        """d_+^* : V_ell -> V_{ell+1}: plethystic shift then the q-twisted
        cyclic shift gamma(G)[y_1..y_{l+1}] = G[y_2,..,y_{l+1}, q y_1]."""
        lv = self.level
        g = self._pleth_shift(+1, lv + 1, lv + 1)
        dom = self.domain
        out = {}
        for (y, lam), c in g.terms.items():
            yy = (y[lv],) + y[:lv]
            coeff = c * dom.q_pow(y[lv]) if y[lv] else c
            key = (yy, lam)
            out[key] = out[key] + coeff if key in out else coeff
        return VElem(dom, lv + 1, out)

    def d_minus(self):
        """d_- : V_ell -> V_{ell-1}: the <y_ell^0> coefficient of
        F[X - (t-1) y_ell] Omega[-y_ell^{-1} X]."""
        lv = self.level
        if lv < 1:
            raise ValueError("d_- undefined on V_0")
        dom = self.domain
        g = self._pleth_shift(-1, lv, lv)
        out = {}

        def put(key, c):
            out[key] = out[key] + c if key in out else c

        for (y, lam), c in g.terms.items():
            m = y[lv - 1]
            # pair with h_m[-X] = (-1)^m e_m from the Omega factor
            sign = -1 if m % 2 else 1
            for mu, fr in _p_expansion("e", m).items() if m else {(): Fraction(1)}.items():
                key = (y[: lv - 1], tuple(sorted(lam + mu, reverse=True)))
                put(key, c * (fr * sign))
        return VElem(dom, lv - 1, out)

    def z_one(self):
        """z_1 = t^ell/(1-t) (d_+^* d_- - d_- d_+^*) T^{-1}_{ell-1}..T^{-1}_1."""
        lv = self.level
        if lv < 1:
            raise ValueError("z_1 undefined on V_0")
        dom = self.domain
        g = self
        for i in range(1, lv):
            g = g.hecke_t(i, inverse=True)
        comm = g.d_minus().d_plus_star() - g.d_plus_star().d_minus()
        return comm.scale(dom.t_pow(lv) / (dom.one - dom.t))

    # -- involution-style coefficient maps ---------------------------------------

    def bar_coeffs(self):
        return self.map_coeffs(lambda c: c.bar())

    def invert_t_coeffs(self):
        return self.map_coeffs(lambda c: c.invert_t())

    def to_records(self):
        def enc(c):
            return c.to_triples() if hasattr(c, "to_triples") else repr(c)

        return {
            "space": "V",
            "level": self.level,
            "terms": [
                {"exponents": list(y), "partition": list(lam), "scalar": enc(c)}
                for (y, lam), c in sorted(self.terms.items())
            ],
        }

    def __repr__(self):
        if not self.terms:
            return f"VElem<{self.level}>(0)"
        bits = [f"({c})*y{list(y)}*p{list(lam)}" for (y, lam), c in sorted(self.terms.items())]
        return f"VElem<{self.level}>(" + " + ".join(bits) + ")"


def y_operator_check(i, F):
    """The recursive definition of y_i as operators, for cross-checks:
    y_1 = (d_+ d_- - d_- d_+) T_{l-1}..T_1 / (t^{l-1}(t-1)), and
    y_{i+1} = t T_i^{-1} y_i T_i^{-1}."""
    dom = F.domain
    lv = F.level
    if i == 1:
        g = F
        for j in range(1, lv):
            g = g.hecke_t(j)
        comm = g.d_minus().d_plus() - g.d_plus().d_minus()
        return comm.scale(dom.one / (dom.t_pow(lv - 1) * (dom.t - dom.one)))
    g = F.hecke_t(i - 1, inverse=True)
    g = y_operator_check(i - 1, g)
    g = g.hecke_t(i - 1, inverse=True)
    return g.scale(dom.t)


# ---------------------------------------------------------------------------
# tau*_{u,ell} on V_ell
# ---------------------------------------------------------------------------

def _power_sum_y(level, k, domain):
    """y_1^k + ... + y_level^k as a VElem."""
    terms = {}
    for i in range(level):
        y = [0] * level
        y[i] = k
        terms[(tuple(y), ())] = domain.one
    return VElem(domain, level, terms)


def _kernel_y_part(level, j, domain, kind):
    """e_j or h_j of the alphabet (t-1)(y_1+..+y_level)/M, by Newton's identity."""
    if j == 0:
        return VElem.one(domain, level)
    ps = []
    for k in range(1, j + 1):
        w = (domain.t_pow(k) - domain.one) / (
            (domain.one - domain.q_pow(k)) * (domain.one - domain.t_pow(k))
        )
        ps.append(_power_sum_y(level, k, domain).scale(w))
    es = [VElem.one(domain, level)]
    for m in range(1, j + 1):
        acc = VElem.zero(domain, level)
        for i in range(1, m + 1):
            sgn = 1 if (i % 2 == 1 or kind == "h") else -1
            acc = acc + (es[m - i] * ps[i - 1]).scale(domain.from_fraction(Fraction(sgn, m)))
        es.append(acc)
    return es[j]


def tau_kernel(level, n, domain, inverse=False):
    """e_n[(X + (t-1)(y_1+..+y_l))/M] (or h_n for the inverse series)."""
    from .macdonald import e_star, h_star

    acc = VElem.zero(domain, level)
    kind = "h" if inverse else "e"
    star = h_star if inverse else e_star
    for i in range(n + 1):
        sym_part = VElem.from_symfunc(star(i, domain), level)
        acc = acc + sym_part * _kernel_y_part(level, n - i, domain, kind)
    return acc


def lift_velem(F, udom):
    if isinstance(F.domain, UDomain):
        if F.domain.order != udom.order:
            raise ValueError("mixed truncation orders")
        return F
    return VElem(udom, F.level, {k: udom.lift(c) for k, c in F.terms.items()})


def u_component_v(F, m):
    """The <u^m> layer of a VElem with UPoly scalars."""
    base = F.domain.base
    out = VElem(base, F.level, {})
    terms = {k: c.u_coeff(m) for k, c in F.terms.items()}
    return VElem(base, F.level, terms) if terms else out


def assemble_u(layers, udom, level):
    """Inverse of u_component_v: sum_m u^m layers[m]."""
    terms = {}
    for m, layer in enumerate(layers):
        for k, c in layer.terms.items():
            cur = terms.get(k, udom.zero)
            terms[k] = cur + udom.u_shift(c, m)
    return VElem(udom, level, terms)


def tau_star_ell(F, K, inverse=False, qt_scale=False):
    """Multiply F in V_ell by the u-truncated series
    sum_n (-u)^n e_n[(X+(t-1)Y)/M] (h-series with +u^n for the inverse);
    with qt_scale the n-th layer is additionally scaled by (qt)^n."""
    base = F.domain.base if isinstance(F.domain, UDomain) else F.domain
    udom = F.domain if isinstance(F.domain, UDomain) else UDomain(base, K)
    lifted = lift_velem(F, udom)
    series_terms = {}
    for n in range(K + 1):
        layer = tau_kernel(F.level, n, base, inverse=inverse)
        sign = 1 if inverse else (-1) ** n
        scale = (base.q * base.t) ** n if qt_scale else base.one
        for k, c in layer.terms.items():
            cur = series_terms.get(k, udom.zero)
            series_terms[k] = cur + udom.u_shift(c * sign * scale, n)
    series = VElem(udom, F.level, series_terms)
    return lifted * series
