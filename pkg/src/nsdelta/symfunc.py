"""Symmetric functions over an exact scalar domain.

A ``SymFunc`` is a basis-tagged, partition-indexed coefficient map.  The
classical bases m, e, h, p, s are converted through the monomial basis with
rational transition matrices computed once per degree by brute expansion in
d variables (exact for degree d).  The modified Macdonald basis lives in
``macdonald.py``.

Plethysm is evaluated in the power-sum basis: an alphabet is anything that
can produce p_k values, possibly involving auxiliary single variables (used
for the z-extraction of the C operators and the Omega kernels).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .partitions import partitions_of, sort_to_partition, z_lambda

BASES = ("m", "e", "h", "p", "s", "Ht")


# ---------------------------------------------------------------------------
# Transition matrices between the classical bases, per degree.
# ---------------------------------------------------------------------------

def _poly_mul(f, g):
    out = {}
    for ea, ca in f.items():
        for eb, cb in g.items():
            key = tuple(a + b for a, b in zip(ea, eb))
            c = out.get(key, 0) + ca * cb
            if c:
                out[key] = c
            else:
                out.pop(key, None)
    return out


def _expand_ehp(kind, k, nvars):
    """e_k, h_k or p_k as an exponent-vector polynomial in nvars variables."""
    if k == 0:
        return {(0,) * nvars: 1}
    out = {}
    if kind == "e":
        for sub in itertools.combinations(range(nvars), k):
            e = [0] * nvars
            for i in sub:
                e[i] = 1
            out[tuple(e)] = 1
    elif kind == "h":
        for sub in itertools.combinations_with_replacement(range(nvars), k):
            e = [0] * nvars
            for i in sub:
                e[i] += 1
            out[tuple(e)] = 1
    else:
        for i in range(nvars):
            e = [0] * nvars
            e[i] = k
            out[tuple(e)] = 1
    return out


def _collect_to_m(poly):
    out = {}
    for exps, c in poly.items():
        lam = sort_to_partition(exps)
        if exps == tuple(sorted(exps, reverse=True)):
            out[lam] = out.get(lam, 0) + c
    return out


def _perm_sign_iter(n):
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        yield perm, -1 if inv % 2 else 1


@lru_cache(maxsize=None)
def _s_in_h(d):
    """Jacobi-Trudi: s_lam = det(h_{lam_i - i + j}) as an h-expansion."""
    table = {}
    for lam in partitions_of(d):
        ell = len(lam)
        acc = {}
        for perm, sign in _perm_sign_iter(ell):
            idx = [lam[i] - (i + 1) + (perm[i] + 1) for i in range(ell)]
            if any(x < 0 for x in idx):
                continue
            mu = tuple(sorted((x for x in idx if x > 0), reverse=True))
            acc[mu] = acc.get(mu, 0) + sign
        table[lam] = {mu: c for mu, c in acc.items() if c}
    return table


@lru_cache(maxsize=None)
def _basis_to_m(basis, d):
    """Fraction matrix: coefficient of m_mu in basis_lam, degree d."""
    if d == 0:
        return {(): {(): Fraction(1)}}
    nvars = d
    if basis == "m":
        return {lam: {lam: Fraction(1)} for lam in partitions_of(d)}
    if basis in ("e", "h", "p"):
        out = {}
        for lam in partitions_of(d):
            poly = {(0,) * nvars: 1}
            for part in lam:
                poly = _poly_mul(poly, _expand_ehp(basis, part, nvars))
            out[lam] = {mu: Fraction(c) for mu, c in _collect_to_m(poly).items()}
        return out
    if basis == "s":
        h_to_m = _basis_to_m("h", d)
        out = {}
        for lam, hrow in _s_in_h(d).items():
            acc = {}
            for mu, c in hrow.items():
                for nu, c2 in h_to_m[mu].items():
                    acc[nu] = acc.get(nu, Fraction(0)) + c * c2
            out[lam] = {nu: c for nu, c in acc.items() if c}
        return out
    raise ValueError(f"unknown basis {basis}")


def _invert_fraction_matrix(mat, order):
    n = len(order)
    a = [[mat[order[i]].get(order[j], Fraction(0)) for j in range(n)] for i in range(n)]
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        inv[col] = [x / pv for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    # Conversion is the row-vector action c -> c * A, so the inverse map
    # needs entry [lam][mu] = (A^-1)[lam][mu].
    return {order[r]: {order[c]: inv[r][c] for c in range(n) if inv[r][c]} for r in range(n)}


@lru_cache(maxsize=None)
def _m_to_basis(basis, d):
    order = partitions_of(d)
    return _invert_fraction_matrix(_basis_to_m(basis, d), order)


@lru_cache(maxsize=None)
def _p_expansion(kind, k):
    """e_k or h_k in the p basis via the classical z_lambda formulas."""
    out = {}
    for lam in partitions_of(k):
        c = Fraction(1) / z_lambda(lam)
        if kind == "e":
            c *= (-1) ** (k - len(lam))
        out[lam] = c
    return out


# ---------------------------------------------------------------------------
# SymFunc
# ---------------------------------------------------------------------------

class SymFunc:
    """Graded symmetric function as a basis-tagged coefficient map."""

    __slots__ = ("domain", "basis", "coeffs", "degree_bound")

    def __init__(self, domain, basis, coeffs, degree_bound=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis}")
        self.domain = domain
        self.basis = basis
        self.coeffs = {lam: c for lam, c in coeffs.items() if not c.is_zero()}
        sizes = [sum(lam) for lam in self.coeffs]
        self.degree_bound = degree_bound if degree_bound is not None else (max(sizes) if sizes else 0)
        if sizes and max(sizes) > self.degree_bound:
            raise ValueError("term beyond the declared degree bound")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(domain, basis="p"):
        return SymFunc(domain, basis, {})

    @staticmethod
    def one(domain, basis="p"):
        return SymFunc(domain, basis, {(): domain.one})

    @staticmethod
    def gen(domain, basis, lam):
        return SymFunc(domain, basis, {tuple(lam): domain.one})

    # -- basic structure ------------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def degrees(self):
        return sorted({sum(lam) for lam in self.coeffs})

    def graded_component(self, d):
        return SymFunc(self.domain, self.basis, {lam: c for lam, c in self.coeffs.items() if sum(lam) == d})

    def map_coeffs(self, fn):
        return SymFunc(self.domain, self.basis, {lam: fn(c) for lam, c in self.coeffs.items()})

    def __add__(self, other):
        if other.basis != self.basis:
            other = other.convert(self.basis)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out[lam] + c if lam in out else c
        return SymFunc(self.domain, self.basis, out)

    def __neg__(self):
        return self.map_coeffs(lambda c: -c)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        return self.map_coeffs(lambda c: c * scalar)

    def __mul__(self, other):
        """Product, computed in the power-sum basis."""
        a = self.convert("p")
        b = other.convert("p")
        out = {}
        for la, ca in a.coeffs.items():
            for lb, cb in b.coeffs.items():
                key = tuple(sorted(la + lb, reverse=True))
                c = ca * cb
                out[key] = out[key] + c if key in out else c
        return SymFunc(self.domain, "p", out)

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        a = self.convert("p")
        b = other.convert("p")
        keys = set(a.coeffs) | set(b.coeffs)
        zero = self.domain.zero
        return all(a.coeffs.get(k, zero) == b.coeffs.get(k, zero) for k in keys)

    # -- conversions ----------------------------------------------------------

    def convert(self, target):
        if target == self.basis:
            return self
        if self.basis == "Ht" or target == "Ht":
            from . import macdonald

            if self.basis == "Ht":
                return macdonald.from_ht(self).convert(target)
            return macdonald.to_ht(self)
        out = {}
        for d in self.degrees():
            comp = {lam: c for lam, c in self.coeffs.items() if sum(lam) == d}
            if self.basis != "m":
                mat = _basis_to_m(self.basis, d)
                mcomp = {}
                for lam, c in comp.items():
                    for mu, f in mat[lam].items():
                        v = c * f
                        mcomp[mu] = mcomp[mu] + v if mu in mcomp else v
                comp = mcomp
            if target != "m":
                mat = _m_to_basis(target, d)
                tcomp = {}
                for lam, c in comp.items():
                    for mu, f in mat[lam].items():
                        v = c * f
                        tcomp[mu] = tcomp[mu] + v if mu in tcomp else v
                comp = tcomp
            for lam, c in comp.items():
                if lam in out:
                    out[lam] = out[lam] + c
                else:
                    out[lam] = c
        return SymFunc(self.domain, target, out, self.degree_bound)

    # -- pairings and involutions ----------------------------------------------

    def hall(self, other):
        """Hall inner product, <p_lam, p_mu> = delta * z_lam."""
        a = self.convert("p")
        b = other.convert("p")
        acc = self.domain.zero
        for lam, c in a.coeffs.items():
            if lam in b.coeffs:
                acc = acc + c * b.coeffs[lam] * z_lambda(lam)
        return acc

    def omega(self):
        """The classical involution, p_k -> (-1)^(k-1) p_k."""
        f = self.convert("p")
        return SymFunc(
            self.domain,
            "p",
            {lam: c * ((-1) ** (sum(lam) - len(lam))) for lam, c in f.coeffs.items()},
        ).convert(self.basis if self.basis != "Ht" else "p")

    def omega_bar(self):
        """F[X;q,t] -> F[-X;1/q,1/t] (antilinear)."""
        f = self.convert("p")
        return SymFunc(
            self.domain,
            "p",
            {lam: c.bar() * ((-1) ** len(lam)) for lam, c in f.coeffs.items()},
        )

    def vartheta(self):
        """Coefficientwise q -> 1/q, t -> 1/t."""
        return self.map_coeffs(lambda c: c.bar())

    def invert_t(self):
        """Coefficientwise t -> 1/t."""
        return self.map_coeffs(lambda c: c.invert_t())

    # -- serialization ----------------------------------------------------------

    def to_records(self):
        def enc(c):
            return c.to_triples() if hasattr(c, "to_triples") else repr(c)

        return [
            {"basis": self.basis, "partition": list(lam), "scalar": enc(c)}
            for lam, c in sorted(self.coeffs.items())
        ]

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = [f"({c})*{self.basis}{list(lam)}" for lam, c in sorted(self.coeffs.items())]
        return " + ".join(parts)


def involutions(f, which):
    if which == "omega":
        return f.omega()
    if which == "omega_bar":
        return f.omega_bar()
    if which == "vartheta":
        return f.vartheta()
    raise ValueError(f"unknown involution {which}")


# ---------------------------------------------------------------------------
# Virtual alphabets and plethysm
# ---------------------------------------------------------------------------

class AlphValue:
    """Element of Sym (x) aux-Laurent-monomials, keyed by aux exponents."""

    __slots__ = ("domain", "terms")

    def __init__(self, domain, terms):
        self.domain = domain
        self.terms = {k: f for k, f in terms.items() if not f.is_zero()}

    @staticmethod
    def of(f, aux=()):
        return AlphValue(f.domain, {tuple(sorted(aux)): f})

    def __add__(self, other):
        out = dict(self.terms)
        for k, f in other.terms.items():
            out[k] = out[k] + f if k in out else f
        return AlphValue(self.domain, out)

    def __neg__(self):
        return AlphValue(self.domain, {k: -f for k, f in self.terms.items()})

    def __mul__(self, other):
        out = {}
        for ka, fa in self.terms.items():
            for kb, fb in other.terms.items():
                exps = {}
                for name, e in ka + kb:
                    exps[name] = exps.get(name, 0) + e
                key = tuple(sorted((n, e) for n, e in exps.items() if e))
                f = fa * fb
                out[key] = out[key] + f if key in out else f
        return AlphValue(self.domain, out)

    def aux_coefficient(self, aux):
        key = tuple(sorted(aux))
        return self.terms.get(key, SymFunc.zero(self.domain))

    def to_symfunc(self):
        if any(k != () for k in self.terms):
            raise ValueError("value carries auxiliary variables")
        return self.terms.get((), SymFunc.zero(self.domain))

    def to_scalar(self):
        f = self.to_symfunc().convert("p")
        if any(lam != () for lam in f.coeffs):
            raise ValueError("value is not scalar")
        return f.coeffs.get((), self.domain.zero)


class VirtualAlphabet:
    """An alphabet known through its power sums p_k[A].

    ``pk(k, domain)`` returns an AlphValue.  Alphabets are closed under
    +, - and *, with p_k additive over sums and multiplicative over
    products; negation is the formal plethystic minus p_k[-A] = -p_k[A].
    """

    def __init__(self, pk, contains_x=False):
        self._pk = pk
        self.contains_x = contains_x

    def pk(self, k, domain):
        if k < 1:
            raise ValueError("power sums are indexed from 1")
        return self._pk(k, domain)

    def __add__(self, other):
        return VirtualAlphabet(
            lambda k, dom: self.pk(k, dom) + other.pk(k, dom),
            self.contains_x or other.contains_x,
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return VirtualAlphabet(lambda k, dom: -self.pk(k, dom), self.contains_x)

    def __mul__(self, other):
        return VirtualAlphabet(
            lambda k, dom: self.pk(k, dom) * other.pk(k, dom),
            self.contains_x or other.contains_x,
        )

    # -- stock alphabets ------------------------------------------------------

    @staticmethod
    def x():
        return VirtualAlphabet(
            lambda k, dom: AlphValue.of(SymFunc.gen(dom, "p", (k,))), contains_x=True
        )

    @staticmethod
    def from_scalar_fn(fn):
        """Scalar alphabet whose p_k is fn evaluated at (q^k, t^k)."""
        return VirtualAlphabet(lambda k, dom: AlphValue.of(SymFunc(dom, "p", {(): fn(k, dom)})))

    @staticmethod
    def one():
        return VirtualAlphabet.from_scalar_fn(lambda k, dom: dom.one)

    @staticmethod
    def minus_one():
        """The sign alphabet -1 with p_k = -1."""
        return -VirtualAlphabet.one()

    @staticmethod
    def t_minus_1_over_M():
        return VirtualAlphabet.from_scalar_fn(
            lambda k, dom: (dom.t_pow(k) - dom.one)
            / ((dom.one - dom.q_pow(k)) * (dom.one - dom.t_pow(k)))
        )

    @staticmethod
    def one_over_M():
        return VirtualAlphabet.from_scalar_fn(
            lambda k, dom: dom.one / ((dom.one - dom.q_pow(k)) * (dom.one - dom.t_pow(k)))
        )

    @staticmethod
    def one_over_1_minus_t():
        return VirtualAlphabet.from_scalar_fn(lambda k, dom: dom.one / (dom.one - dom.t_pow(k)))

    @staticmethod
    def variable(name, exp=1, weight=None):
        """A single variable v^exp with scalar weight c: p_k = c(k) v^(k*exp)."""

        def pk(k, dom):
            w = weight(k, dom) if weight is not None else dom.one
            return AlphValue.of(SymFunc(dom, "p", {(): w}), aux=((name, k * exp),))

        return VirtualAlphabet(pk)


def plethysm(f, alphabet):
    """f[A] by substituting p_k[A] into the power-sum expansion of f."""
    fp = f.convert("p")
    dom = f.domain
    acc = AlphValue(dom, {})
    for lam, c in fp.coeffs.items():
        term = AlphValue.of(SymFunc(dom, "p", {(): c}))
        for part in lam:
            term = term * alphabet.pk(part, dom)
        acc = acc + term
    return acc


def omega_kernel(n, alphabet, domain):
    """h_n[A], the degree-n piece of the Cauchy kernel Omega[A]."""
    if n == 0:
        return AlphValue.of(SymFunc.one(domain))
    acc = AlphValue(domain, {})
    for lam in partitions_of(n):
        c = domain.from_fraction(Fraction(1) / z_lambda(lam))
        term = AlphValue.of(SymFunc(domain, "p", {(): c}))
        for part in lam:
            term = term * alphabet.pk(part, domain)
        acc = acc + term
    return acc


def e_kernel(n, alphabet, domain):
    """e_n[A] via the p-expansion of e_n."""
    if n == 0:
        return AlphValue.of(SymFunc.one(domain))
    acc = AlphValue(domain, {})
    for lam, fr in _p_expansion("e", n).items():
        term = AlphValue.of(SymFunc(domain, "p", {(): domain.from_fraction(fr)}))
        for part in lam:
            term = term * alphabet.pk(part, domain)
        acc = acc + term
    return acc
