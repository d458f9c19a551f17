"""Modified Macdonald polynomials and the nabla / Delta / Theta / C operator suite.

The basis is constructed from the statistic-generating fillings formula over
the diagram of mu (inv and maj with respect to descents, attack pairs and
arms/legs), which is exact and needs no external tables.  Everything that is
diagonal on the basis goes through an exact per-degree linear solve against
the monomial basis.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .partitions import (
    cell_stats,
    cell_weights,
    cells,
    elementary_of_weights,
    mu_stats,
    partitions_of,
)
from .scalars import UDomain, UPoly, domain_cache as _domain_cache
from .symfunc import SymFunc, _p_expansion


# ---------------------------------------------------------------------------
# The fillings formula
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _ht_int(mu):
    """Monomial expansion of Ht_mu as {lambda: {(q_exp, t_exp): int}}."""
    n = sum(mu)
    cs = cells(mu)
    idx = {c: k for k, c in enumerate(cs)}
    south = [idx.get((i, j - 1), -1) for (i, j) in cs]
    legp1 = []
    arm = []
    for c in cs:
        a, l, _, _ = cell_stats(mu, c)
        arm.append(a)
        legp1.append(l + 1)
    # Reading order: top row first, left to right within rows.
    order = sorted(range(len(cs)), key=lambda k: (-cs[k][1], cs[k][0]))
    pos = [0] * len(cs)
    for p, k in enumerate(order):
        pos[k] = p
    attacks = []
    for u in range(len(cs)):
        iu, ju = cs[u]
        for v in range(len(cs)):
            iv, jv = cs[v]
            if (jv == ju and iu < iv) or (jv == ju - 1 and iv < iu):
                a, b = (u, v) if pos[u] < pos[v] else (v, u)
                attacks.append((a, b))
    out = {}
    for filling in itertools.product(range(1, n + 1), repeat=len(cs)):
        content = [0] * n
        for v in filling:
            content[v - 1] += 1
        if any(content[i] < content[i + 1] for i in range(n - 1)):
            continue
        lam = tuple(c for c in content if c)
        maj = 0
        inv = 0
        for k in range(len(cs)):
            if south[k] >= 0 and filling[k] > filling[south[k]]:
                maj += legp1[k]
                inv -= arm[k]
        for a, b in attacks:
            if filling[a] > filling[b]:
                inv += 1
        out.setdefault(lam, {})
        key = (inv, maj)
        out[lam][key] = out[lam].get(key, 0) + 1
    return {lam: {k: c for k, c in d.items() if c} for lam, d in out.items()}


def macdonald_ht(mu, domain):
    """The modified Macdonald polynomial of mu, in the monomial basis."""
    mu = tuple(mu)
    data = _ht_int(mu)
    coeffs = {}
    for lam, terms in data.items():
        acc = domain.zero
        for (qe, te), c in terms.items():
            acc = acc + domain.monomial(c, qe, te)
        coeffs[lam] = acc
    return SymFunc(domain, "m", coeffs)


def _ht_matrix(domain, d):
    """{mu: {lam: scalar}} giving Ht_mu in the monomial basis, degree d."""
    cache = _domain_cache(domain)
    key = ("ht_matrix", d)
    if key not in cache:
        cache[key] = {mu: macdonald_ht(mu, domain).coeffs for mu in partitions_of(d)}
    return cache[key]


def _ht_inverse(domain, d):
    """Inverse transition: monomial coefficients -> Ht coefficients."""
    cache = _domain_cache(domain)
    key = ("ht_inverse", d)
    if key not in cache:
        order = partitions_of(d)
        n = len(order)
        mat = _ht_matrix(domain, d)
        a = [[mat[order[r]].get(order[c], domain.zero) for c in range(n)] for r in range(n)]
        inv = [[domain.one if r == c else domain.zero for c in range(n)] for r in range(n)]
        for col in range(n):
            piv = None
            for r in range(col, n):
                if not a[r][col].is_zero():
                    piv = r
                    break
            if piv is None:
                raise ArithmeticError(
                    f"Macdonald transition matrix singular in degree {d}; "
                    "basis corruption or bad specialization point"
                )
            a[col], a[piv] = a[piv], a[col]
            inv[col], inv[piv] = inv[piv], inv[col]
            pv = a[col][col]
            a[col] = [x / pv for x in a[col]]
            inv[col] = [x / pv for x in inv[col]]
            for r in range(n):
                if r != col and not a[r][col].is_zero():
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                    inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
        # to_ht computes c_mu = sum_lam d_lam (A^-1)[lam][mu], so store the
        # transpose keyed by mu first.
        cache[key] = {
            order[r]: {order[c]: inv[c][r] for c in range(n) if not inv[c][r].is_zero()}
            for r in range(n)
        }
    return cache[key]


def to_ht(f):
    """Expand f in the modified Macdonald basis (exact linear solve)."""
    fm = f.convert("m") if f.basis != "m" else f
    domain = f.domain
    out = {}
    for d in fm.degrees():
        comp = {lam: c for lam, c in fm.coeffs.items() if sum(lam) == d}
        inv = _ht_inverse(domain, d)
        vec = list(comp.items())
        for mu in partitions_of(d):
            row = inv[mu]
            acc = domain.zero
            for lam, c in vec:
                if lam in row:
                    acc = acc + row[lam] * c
            if not acc.is_zero():
                out[mu] = acc
    return SymFunc(domain, "Ht", out)


def from_ht(f):
    """Ht-basis coefficients back to the monomial basis."""
    domain = f.domain
    out = {}
    for mu, c in f.coeffs.items():
        for lam, entry in _ht_matrix(domain, sum(mu))[mu].items():
            v = c * entry
            out[lam] = out[lam] + v if lam in out else v
    return SymFunc(domain, "m", out)


def macdonald_expand(f):
    """Coefficient map of f over the modified Macdonald basis."""
    return dict(to_ht(f).coeffs)


# ---------------------------------------------------------------------------
# Diagonal operators
# ---------------------------------------------------------------------------

def _diagonal(f, eigen):
    fh = to_ht(f)
    domain = f.domain
    out = {mu: c * eigen(mu) for mu, c in fh.coeffs.items()}
    return from_ht(SymFunc(domain, "Ht", out))


def nabla(f, primed=False, inverse=False):
    """nabla Ht_mu = T_mu Ht_mu; the primed variant carries (-1)^|mu|."""
    domain = f.domain

    def eigen(mu):
        T = mu_stats(mu, domain)[1]
        if primed and sum(mu) % 2:
            T = -T
        return domain.one / T if inverse else T

    return _diagonal(f, eigen)


def delta_op(k, f, primed=False):
    """Delta_{e_k} (or Delta'_{e_k}) acting diagonally via e_k[B_mu]."""
    domain = f.domain

    def eigen(mu):
        ws = cell_weights(mu, domain, drop_corner=primed)
        return elementary_of_weights(ws, k, domain)

    return _diagonal(f, eigen)


def pi_diag(f, inverse=False):
    """The operator multiplying Ht_mu by Pi_mu (or its inverse)."""
    domain = f.domain

    def eigen(mu):
        Pi = mu_stats(mu, domain)[2]
        return domain.one / Pi if inverse else Pi

    return _diagonal(f, eigen)


def e_star(k, domain):
    """e_k[X/M] with M = (1-q)(1-t)."""
    cache = _domain_cache(domain)
    key = ("e_star", k)
    if key not in cache:
        coeffs = {}
        for lam, fr in _p_expansion("e", k).items():
            c = domain.from_fraction(fr)
            for part in lam:
                c = c / ((domain.one - domain.q_pow(part)) * (domain.one - domain.t_pow(part)))
            coeffs[lam] = c
        cache[key] = SymFunc(domain, "p", coeffs) if k else SymFunc.one(domain)
    return cache[key]


def h_star(k, domain):
    """h_k[X/M]."""
    cache = _domain_cache(domain)
    key = ("h_star", k)
    if key not in cache:
        coeffs = {}
        for lam, fr in _p_expansion("h", k).items():
            c = domain.from_fraction(fr)
            for part in lam:
                c = c / ((domain.one - domain.q_pow(part)) * (domain.one - domain.t_pow(part)))
            coeffs[lam] = c
        cache[key] = SymFunc(domain, "p", coeffs) if k else SymFunc.one(domain)
    return cache[key]


def theta_op(k, f):
    """Theta_{e_k} = Pi e_k[X/M] Pi^{-1}, per graded component.

    On a degree-0 component the convention is Theta_{e_k} 1 = 0 for k >= 1.
    """
    domain = f.domain
    if k == 0:
        return f
    out = SymFunc.zero(domain, "m")
    for d in f.degrees():
        comp = f.graded_component(d)
        if d == 0:
            continue
        g = pi_diag(comp, inverse=True)
        g = g * e_star(k, domain)
        out = out + pi_diag(g).convert("m")
    return out


# ---------------------------------------------------------------------------
# u-series: tau*_u and friends on Sym
# ---------------------------------------------------------------------------

def lift_to_udomain(f, udom):
    if isinstance(f.domain, UDomain):
        if f.domain.order != udom.order:
            raise ValueError("mixed truncation orders")
        return f
    return SymFunc(udom, f.basis, {lam: udom.lift(c) for lam, c in f.coeffs.items()})


def u_component(f, k):
    """The <u^k> layer of a SymFunc with UPoly coefficients."""
    udom = f.domain
    base = udom.base
    return SymFunc(base, f.basis, {lam: c.u_coeff(k) for lam, c in f.coeffs.items()})


def map_u_components(f, op):
    """Apply a base-domain operator to each u-layer and reassemble."""
    udom = f.domain
    layers = [op(u_component(f, m)).convert("p") for m in range(udom.order + 1)]
    coeffs = {}
    for m, layer in enumerate(layers):
        for lam, c in layer.coeffs.items():
            cur = coeffs.get(lam, udom.zero)
            coeffs[lam] = cur + udom.u_shift(c, m)
    return SymFunc(udom, "p", coeffs)


def tau_star_sym(f, K, inverse=False, qt_scale=False):
    """Multiply by the u-truncated series sum (-u)^n e_n[X/M] (or its inverse).

    The inverse is the series sum u^n h_n[X/M]; with qt_scale the formal u is
    replaced by q*t*u by scaling the n-th layer by (qt)^n.
    """
    base = f.domain.base if isinstance(f.domain, UDomain) else f.domain
    udom = f.domain if isinstance(f.domain, UDomain) else UDomain(base, K)
    flift = lift_to_udomain(f, udom).convert("p")
    series = SymFunc.zero(udom, "p")
    for n in range(K + 1):
        kern = h_star(n, base) if inverse else e_star(n, base)
        sign = 1 if inverse else (-1) ** n
        scale = (base.q * base.t) ** n if qt_scale else base.one
        layer = SymFunc(
            udom,
            "p",
            {lam: udom.u_shift(c * sign * scale, n) for lam, c in kern.convert("p").coeffs.items()},
        )
        series = series + layer
    return flift * series


def bracket_tau_nabla_tau(f, k, qt_scale=False, primed_inverse=False):
    """[tau* nabla' tau*]_k f, or with inverses when primed_inverse is set."""
    base = f.domain
    g = tau_star_sym(f, k, inverse=primed_inverse, qt_scale=qt_scale)
    g = map_u_components(g, lambda h: nabla(h, primed=True, inverse=primed_inverse))
    g = tau_star_sym(g, k, inverse=primed_inverse, qt_scale=qt_scale)
    sign = (-1) ** k
    return u_component(g, k).scale(base.from_int(sign))


# ---------------------------------------------------------------------------
# The C operators
# ---------------------------------------------------------------------------

def c_single(a, f):
    """C_a f = <z^a> (-1/t)^(a-1) f[X - (1-1/t)/z] Omega[zX]."""
    from .symfunc import VirtualAlphabet, plethysm

    domain = f.domain
    shift = VirtualAlphabet.x() - VirtualAlphabet.variable(
        "z", exp=-1, weight=lambda k, dom: dom.one - dom.t_pow(-k)
    )
    val = plethysm(f, shift)
    acc = SymFunc.zero(domain, "p")
    for aux, part in val.terms.items():
        j = -aux[0][1] if aux else 0
        if aux and (len(aux) > 1 or aux[0][0] != "z" or aux[0][1] > 0):
            raise AssertionError("unexpected auxiliary content in C-operator expansion")
        m = a + j
        if m < 0:
            continue
        acc = acc + part * SymFunc.gen(domain, "h", (m,) if m else ())
    pref = (-domain.one / domain.t) ** (a - 1) if a >= 1 else (-domain.t)
    return acc.scale(pref)


def c_compose(alpha, domain):
    """C_alpha = C_{a_1} ... C_{a_l} (1)."""
    f = SymFunc.one(domain)
    for a in reversed(tuple(alpha)):
        f = c_single(a, f)
    return f
