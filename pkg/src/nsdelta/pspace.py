"""The space P(ell): nonsymmetric in x_1..x_ell, symmetric beyond.

Elements are maps (x-exponent vector, partition) -> scalar where the
partition indexes a power sum of the tail alphabet x_{ell+1} + x_{ell+2} + ...
The module provides the isomorphism with V_ell, Demazure operators and the
stable Weyl symmetrization, the ell-nonsymmetric plethysm with its inverse,
and Demazure atoms with their stable versions.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .partitions import partitions_of, sort_to_partition
from .scalars import domain_cache as _domain_cache
from .symfunc import SymFunc, _m_to_basis
from .vspace import VElem


class TruncationError(ArithmeticError):
    """A variable truncation was too small to represent the result."""


class PElem:
    """An element of P(ell)."""

    __slots__ = ("domain", "level", "terms")

    def __init__(self, domain, level, terms):
        self.domain = domain
        self.level = level
        clean = {}
        for (xexp, lam), c in terms.items():
            if len(xexp) != level:
                raise ValueError(f"x-exponent vector {xexp} at level {level}")
            if not c.is_zero():
                clean[(tuple(xexp), tuple(lam))] = c
        self.terms = clean

    @staticmethod
    def zero(domain, level=0):
        return PElem(domain, level, {})

    @staticmethod
    def one(domain, level=0):
        return PElem(domain, level, {((0,) * level, ()): domain.one})

    @staticmethod
    def x_monomial(domain, exps):
        exps = tuple(exps)
        return PElem(domain, len(exps), {(exps, ()): domain.one})

    @staticmethod
    def from_symfunc(f, level=0):
        """Embed, rewriting the Sym part in terms of the tail alphabet.

        For level 0 the tail alphabet is the whole of X.  For positive level
        this substitutes p_k[X] = p_k[tail] + x_1^k + ... + x_level^k.
        """
        fp = f.convert("p")
        out = PElem.zero(f.domain, level)
        base = PElem(f.domain, level, {((0,) * level, lam): c for lam, c in fp.coeffs.items()})
        if level == 0:
            return base
        return _full_to_tail(base)

    def to_symfunc(self):
        if self.level != 0:
            raise ValueError("only level-0 elements are symmetric functions")
        return SymFunc(self.domain, "p", {lam: c for (_x, lam), c in self.terms.items()})

    # -- linear structure -------------------------------------------------------

    def __add__(self, other):
        if other.level != self.level:
            raise ValueError("level mismatch")
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return PElem(self.domain, self.level, out)

    def __neg__(self):
        return PElem(self.domain, self.level, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        return PElem(self.domain, self.level, {k: c * scalar for k, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, PElem) or other.level != self.level:
            return False
        keys = set(self.terms) | set(other.terms)
        zero = self.domain.zero
        return all(self.terms.get(k, zero) == other.terms.get(k, zero) for k in keys)

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(x) + sum(lam) for (x, lam) in self.terms), default=0)

    def map_coeffs(self, fn):
        return PElem(self.domain, self.level, {k: fn(c) for k, c in self.terms.items()})

    def vartheta(self):
        return self.map_coeffs(lambda c: c.bar())

    def invert_t(self):
        return self.map_coeffs(lambda c: c.invert_t())

    def truncate(self, nvars):
        """Concrete polynomial in x_1..x_nvars as an exponent-vector map."""
        if nvars < self.level:
            raise ValueError("truncation below the nonsymmetric block")
        out = {}
        for (xexp, lam), c in self.terms.items():
            tail = _expand_tail_powersum(lam, self.level, nvars)
            for texp, mult in tail.items():
                key = tuple(xexp) + texp
                v = c * mult
                out[key] = out[key] + v if key in out else v
        return {k: v for k, v in out.items() if not v.is_zero()}

    def to_records(self):
        def enc(c):
            return c.to_triples() if hasattr(c, "to_triples") else repr(c)

        return {
            "space": "P",
            "level": self.level,
            "terms": [
                {"exponents": list(x), "partition": list(lam), "scalar": enc(c)}
                for (x, lam), c in sorted(self.terms.items())
            ],
        }

    def __repr__(self):
        if not self.terms:
            return f"PElem<{self.level}>(0)"
        bits = [f"({c})*x{list(x)}*p{list(lam)}" for (x, lam), c in sorted(self.terms.items())]
        return f"PElem<{self.level}>(" + " + ".join(bits) + ")"


@lru_cache(maxsize=None)
def _tail_powersum_exps(lam, level, nvars):
    """Exponent map of p_lam(x_{level+1}, ..., x_nvars) with int multiplicities."""
    acc = {(0,) * (nvars - level): 1}
    for k in lam:
        nxt = {}
        for exps, mult in acc.items():
            for i in range(nvars - level):
                e = list(exps)
                e[i] += k
                key = tuple(e)
                nxt[key] = nxt.get(key, 0) + mult
        acc = nxt
    return acc


def _expand_tail_powersum(lam, level, nvars):
    return _tail_powersum_exps(tuple(lam), level, nvars)


# ---------------------------------------------------------------------------
# The isomorphism PP_ell : P(ell) -> V_ell
# ---------------------------------------------------------------------------

def pp_map(f):
    """x^eta g[x_{ell+1}+...] -> y^eta g[X/(t-1)]."""
    dom = f.domain
    out = {}
    for (xexp, lam), c in f.terms.items():
        for k in lam:
            c = c / (dom.t_pow(k) - dom.one)
        key = (xexp, lam)
        out[key] = out[key] + c if key in out else c
    return VElem(dom, f.level, out)


def pp_inv(v):
    """Inverse of pp_map."""
    dom = v.domain
    out = {}
    for (yexp, lam), c in v.terms.items():
        for k in lam:
            c = c * (dom.t_pow(k) - dom.one)
        key = (yexp, lam)
        out[key] = out[key] + c if key in out else c
    return PElem(dom, v.level, out)


# ---------------------------------------------------------------------------
# Concrete polynomials and Demazure operators
# ---------------------------------------------------------------------------

def demazure_pi(poly, i, hat=False):
    """pi_i f = (x_i f - s_i(x_i f))/(x_i - x_{i+1}) on exponent maps (1-based i).

    The divided difference is evaluated by the exact closed form on
    monomials; ``hat`` subtracts the identity.
    """
    out = {}

    def put(key, c):
        out[key] = out[key] + c if key in out else c

    for exps, c in poly.items():
        a, b = exps[i - 1], exps[i]
        if a >= b:
            rng = range(b, a + 1)
            sign = 1
        elif b == a + 1:
            rng = ()
            sign = 1
        else:
            rng = range(a + 1, b)
            sign = -1
        for cc in rng:
            e = list(exps)
            e[i - 1], e[i] = cc, a + b - cc
            put(tuple(e), c * sign if sign == 1 else -c)
        if hat:
            put(exps, -c)
    return {k: v for k, v in out.items() if not v.is_zero()}


def pi_block_longest(poly, lo, hi):
    """pi_w for the longest permutation of the block x_lo..x_hi."""
    for r in range(lo, hi):
        for j in range(r, lo - 1, -1):
            poly = demazure_pi(poly, j)
    return poly


def lift_polynomial(poly, level, domain, strict=True):
    """Read a concrete polynomial, symmetric in x_{level+1}.., back into P(level)."""
    import math

    groups = {}
    for exps, c in poly.items():
        head, tail = exps[:level], exps[level:]
        groups.setdefault(head, {})[tail] = c
    out = {}
    for head, tails in groups.items():
        reps = {}
        orbit_count = {}
        for tail, c in tails.items():
            rep = tuple(sorted(tail, reverse=True))
            orbit_count[rep] = orbit_count.get(rep, 0) + 1
            if rep == tail:
                reps[rep] = c
        if strict:
            for tail, c in tails.items():
                rep = tuple(sorted(tail, reverse=True))
                if rep not in reps or not (reps[rep] == c):
                    raise TruncationError(
                        "result not symmetric in the trailing variables; "
                        "truncation too small"
                    )
            for rep, count in orbit_count.items():
                size = math.factorial(len(rep))
                for m in set(rep):
                    size //= math.factorial(rep.count(m))
                if count != size:
                    raise TruncationError(
                        "orbit of a trailing monomial is incomplete; "
                        "truncation too small"
                    )
        # monomial coefficients -> p expansion, per degree
        by_deg = {}
        for rep, c in reps.items():
            lam = sort_to_partition(rep)
            by_deg.setdefault(sum(lam), {})[lam] = c
        for d, comp in by_deg.items():
            mat = _m_to_basis("p", d)
            for lam, c in comp.items():
                for mu, fr in mat[lam].items():
                    key = (head, mu)
                    v = c * fr
                    out[key] = out[key] + v if key in out else v
    return PElem(domain, level, out)


# ---------------------------------------------------------------------------
# Stable Weyl symmetrization
# ---------------------------------------------------------------------------

def weyl_pibold(f, retries=2):
    """pibold_ell : P(ell) -> P(ell-1), the stable limit of block Demazure
    symmetrization; computed at two truncations and checked to agree."""
    if f.level < 1:
        raise ValueError("weyl_pibold needs level >= 1")
    if f.is_zero():
        return PElem.zero(f.domain, f.level - 1)
    nbase = f.level + f.degree() + 1
    for attempt in range(retries + 1):
        n1 = nbase + attempt
        r1 = _pibold_at(f, n1)
        r2 = _pibold_at(f, n1 + 1)
        if r1 == r2:
            return r1
    raise TruncationError("Weyl symmetrization failed to stabilize")


def _pibold_at(f, nvars):
    poly = f.truncate(nvars)
    poly = pi_block_longest(poly, f.level, nvars)
    return lift_polynomial(poly, f.level - 1, f.domain)


def weyl_chain(f):
    """pibold_1 ... pibold_ell, landing in P(0)."""
    g = f
    while g.level > 0:
        g = weyl_pibold(g)
    return g


# ---------------------------------------------------------------------------
# pol and the ell-nonsymmetric plethysm
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _pol_monomial_int(eta):
    """pol(x^eta / prod_{i<j}(1 - t x_i/x_j)) as {eta': {t-exp: int}}:
    each geometric factor expanded and the nonnegative monomials kept.

    Geometric factors are truncated at (ell-1)*|eta|, which bounds every
    transfer: the potential sum_i (ell-i) e_i grows by at least 1 per unit
    and stays within [0, (ell-1)|eta|] on surviving monomials.
    """
    ell = len(eta)
    d = sum(eta)
    cap = max((ell - 1) * d, 0)
    acc = {tuple(eta): {0: 1}}
    for i in range(1, ell + 1):
        for j in range(i + 1, ell + 1):
            nxt = {}
            for exps, tpolys in acc.items():
                for a in range(cap + 1):
                    e = list(exps)
                    e[i - 1] += a
                    e[j - 1] -= a
                    key = tuple(e)
                    tgt = nxt.setdefault(key, {})
                    for te, c in tpolys.items():
                        tgt[te + a] = tgt.get(te + a, 0) + c
            acc = nxt
    out = {}
    for exps, tpolys in acc.items():
        if min(exps, default=0) >= 0:
            out[exps] = tpolys
    return out


def pol_part(eta, domain):
    """Materialized pol of a single x-monomial over the given domain."""
    out = {}
    for exps, tpolys in _pol_monomial_int(tuple(eta)).items():
        acc = domain.zero
        for te, c in tpolys.items():
            acc = acc + domain.monomial(c, 0, te)
        out[exps] = acc
    return out


def _tail_to_full(f):
    """Rewrite tail power sums via p_k[tail] = p_k[X] - sum_{j<=ell} x_j^k."""
    dom = f.domain
    ell = f.level
    out = {}

    def put(key, c):
        out[key] = out[key] + c if key in out else c

    for (xexp, lam), c in f.terms.items():
        acc = [(xexp, (), c)]
        for k in lam:
            nxt = []
            for exps, kept, coeff in acc:
                nxt.append((exps, kept + (k,), coeff))
                for j in range(ell):
                    e = list(exps)
                    e[j] += k
                    nxt.append((tuple(e), kept, -coeff))
            acc = nxt
        for exps, kept, coeff in acc:
            put((exps, tuple(sorted(kept, reverse=True))), coeff)
    return PElem(dom, ell, out)


def _full_to_tail(f):
    """Inverse rewriting p_k[X] = p_k[tail] + sum_{j<=ell} x_j^k."""
    dom = f.domain
    ell = f.level
    out = {}

    def put(key, c):
        out[key] = out[key] + c if key in out else c

    for (xexp, lam), c in f.terms.items():
        acc = [(xexp, (), c)]
        for k in lam:
            nxt = []
            for exps, kept, coeff in acc:
                nxt.append((exps, kept + (k,), coeff))
                for j in range(ell):
                    e = list(exps)
                    e[j] += k
                    nxt.append((tuple(e), kept, coeff))
            acc = nxt
        for exps, kept, coeff in acc:
            put((exps, tuple(sorted(kept, reverse=True))), coeff)
    return PElem(dom, ell, out)


# ---------------------------------------------------------------------------
# The ell-nonsymmetric plethysm Pi_ell and its inverse
# ---------------------------------------------------------------------------
#
# Pi_ell is realized through the pair of flagged homogeneous bases: it is the
# linear map with
#
#     hpm_eta(X_ell) h_lam[(1-t)X]  |-->  h_eta(X_ell) h_lam[X],
#
# where h_eta(X_ell) = prod_i h_{eta_i}(x_1..x_i) and the signed row factor
# is hpm_m(x_1..x_i) = h_m[(1-t)(x_1+..+x_{i-1}) + x_i].  Both families are
# bases, and the expansion is triangular for the order (potential, last
# exponent) on x-heads.  The naive reading of the kernel-truncation formula
# (expand every geometric factor, keep nonnegative monomials) agrees with
# this map for ell <= 2 but provably differs from three variables on.


def _flagged_head(eta, domain, signed):
    """prod_i h_{eta_i}(x_1..x_i), with the first i-1 variables scaled by
    (1-t) in the signed version; as a map xexp -> scalar."""
    cache = _domain_cache(domain)
    key = ("fhead", tuple(eta), signed)
    if key not in cache:
        ell = len(eta)
        one_minus_t = domain.one - domain.t
        acc = {(0,) * ell: domain.one}
        for i, m in enumerate(eta, start=1):
            if m == 0:
                continue
            factor = {}
            for comb in itertools.combinations_with_replacement(range(i), m):
                e = [0] * ell
                for j in comb:
                    e[j] += 1
                w = domain.one
                if signed:
                    # h_m[(1-t)(x_1+..+x_{i-1}) + x_i]: each active early
                    # variable carries one factor h_a[(1-t)x] = (1-t) x^a
                    for j in range(i - 1):
                        if e[j]:
                            w = w * one_minus_t
                kk = tuple(e)
                factor[kk] = factor[kk] + w if kk in factor else w
            nxt = {}
            for e1, c1 in acc.items():
                for e2, c2 in factor.items():
                    kk = tuple(a + b for a, b in zip(e1, e2))
                    v = c1 * c2
                    nxt[kk] = nxt[kk] + v if kk in nxt else v
            acc = nxt
        cache[key] = {k: v for k, v in acc.items() if not v.is_zero()}
    return cache[key]


def _tail_factor(lam, ell, domain, scaled):
    """h_lam[(1-t)X] (scaled) or h_lam[X] as a PElem at the given level."""
    cache = _domain_cache(domain)
    key = ("tailf", tuple(lam), ell, scaled)
    if key not in cache:
        from .symfunc import SymFunc

        f = SymFunc.one(domain)
        for k in lam:
            f = f * SymFunc.gen(domain, "h", (k,))
        f = f.convert("p")
        if scaled:
            coeffs = {}
            for mu, c in f.coeffs.items():
                for k in mu:
                    c = c * (domain.one - domain.t_pow(k))
                coeffs[mu] = c
            f = SymFunc(domain, "p", coeffs)
        cache[key] = PElem.from_symfunc(f, ell)
    return cache[key]


def _basis_elem(eta, lam, domain, signed):
    """hpm/h_eta(X_ell) times h_lam[(1-t)X or X], as a PElem."""
    cache = _domain_cache(domain)
    key = ("fbasis", tuple(eta), tuple(lam), signed)
    if key not in cache:
        ell = len(eta)
        head = _flagged_head(eta, domain, signed)
        tail = _tail_factor(lam, ell, domain, scaled=signed)
        out = {}
        for e1, c1 in head.items():
            for (e2, mu), c2 in tail.terms.items():
                kk = (tuple(a + b for a, b in zip(e1, e2)), mu)
                v = c1 * c2
                out[kk] = out[kk] + v if kk in out else v
        cache[key] = PElem(domain, ell, out)
    return cache[key]


def _p_to_h_coeffs(pvec, domain):
    """Convert a {mu: scalar} power-sum coordinate vector to h coordinates."""
    from .symfunc import _m_to_basis, _basis_to_m

    out = {}
    by_deg = {}
    for mu, c in pvec.items():
        by_deg.setdefault(sum(mu), {})[mu] = c
    for d, comp in by_deg.items():
        p_to_m = _basis_to_m("p", d)
        m_to_h = _m_to_basis("h", d)
        mid = {}
        for mu, c in comp.items():
            for nu, fr in p_to_m[mu].items():
                v = c * fr
                mid[nu] = mid[nu] + v if nu in mid else v
        for nu, c in mid.items():
            for lam, fr in m_to_h[nu].items():
                v = c * fr
                out[lam] = out[lam] + v if lam in out else v
    return out


def _pi_basis_map(f, signed_in):
    """Expand f over the (signed_in ? signed : plain) flagged basis and map
    each element across to its partner; this is Pi_ell or its inverse."""
    dom = f.domain
    ell = f.level
    if ell == 0:
        # pure plethysm on the symmetric part
        out = {}
        for ((), mu), c in f.terms.items():
            for k in mu:
                factor = dom.one - dom.t_pow(k)
                c = c / factor if signed_in else c * factor
            out[((), mu)] = c
        return PElem(dom, 0, out)
    out = PElem.zero(dom, ell)
    by_deg = {}
    for key, c in f.terms.items():
        by_deg.setdefault(sum(key[0]) + sum(key[1]), {})[key] = c
    for comp in by_deg.values():
        residual = dict(comp)
        while residual:
            eta = min(
                {k[0] for k in residual},
                key=lambda e: (_phi(e, ell), e[-1], e),
            )
            tailvec = {k[1]: c for k, c in residual.items() if k[0] == eta}
            if signed_in:
                scaled = {}
                for mu, c in tailvec.items():
                    for k in mu:
                        c = c / (dom.one - dom.t_pow(k))
                    scaled[mu] = c
                tailvec = scaled
            hcoeffs = _p_to_h_coeffs(tailvec, dom)
            for lam, c in hcoeffs.items():
                if c.is_zero():
                    continue
                src = _basis_elem(eta, lam, dom, signed=signed_in)
                for kk, v in src.terms.items():
                    nv = residual.get(kk, dom.zero) - v * c
                    if nv.is_zero():
                        residual.pop(kk, None)
                    else:
                        residual[kk] = nv
                out = out + _basis_elem(eta, lam, dom, signed=not signed_in).scale(c)
            if any(k[0] == eta for k in residual):
                raise ArithmeticError("flagged basis elimination failed to clear a head")
    return out


def plethysm_pi_ell(f):
    """The ell-nonsymmetric plethysm Pi_ell extending f[X] -> f[X/(1-t)]."""
    return _pi_basis_map(f, signed_in=True)


def pi_ell_inv(f):
    """Exact inverse of plethysm_pi_ell."""
    return _pi_basis_map(f, signed_in=False)


def _phi(exps, ell):
    return sum((ell - i) * e for i, e in enumerate(exps, start=1))


# ---------------------------------------------------------------------------
# Demazure atoms and stable atoms
# ---------------------------------------------------------------------------

def atom(alpha, domain, nvars=None):
    """The Demazure atom of an exponent vector, as a concrete polynomial."""
    alpha = tuple(alpha)
    nvars = len(alpha) if nvars is None else nvars
    alpha = alpha + (0,) * (nvars - len(alpha))

    def rec(vec):
        for i in range(len(vec) - 1):
            if vec[i] < vec[i + 1]:
                swapped = list(vec)
                swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
                return demazure_pi(rec(tuple(swapped)), i + 1, hat=True)
        return {tuple(vec): domain.one}

    return rec(alpha)


def stable_atom(eta, lam, domain):
    """The stable atom of (eta | lam) as an element of P(len(eta))."""
    eta, lam = tuple(eta), tuple(lam)
    ell, k = len(eta), len(lam)
    finite = atom(eta + lam, domain, nvars=ell + k)
    g = lift_polynomial(finite, ell + k, domain, strict=True)
    for _ in range(k):
        g = weyl_pibold(g)
    return g


def atom_basis(ell, degree, domain):
    """All stable atoms of the given level and total degree."""
    out = {}
    for dlam in range(degree + 1):
        for lam in partitions_of(dlam):
            rest = degree - dlam
            for eta in itertools.product(range(rest + 1), repeat=ell):
                if sum(eta) == rest:
                    out[(tuple(eta), lam)] = stable_atom(eta, lam, domain)
    return out


def atom_expand(f, nvars=None):
    """Expand f in the stable atom basis of its level and degrees."""
    dom = f.domain
    ell = f.level
    out = {}
    by_deg = {}
    for (xexp, lam), c in f.terms.items():
        d = sum(xexp) + sum(lam)
        by_deg.setdefault(d, {})[(xexp, lam)] = c
    for d, comp in by_deg.items():
        n = (ell + d + 1) if nvars is None else nvars
        basis = atom_basis(ell, d, dom)
        cols = sorted(basis)
        rows = {}
        for jcol, key in enumerate(cols):
            for exps, c in basis[key].truncate(n).items():
                fr = _as_fraction(c)
                rows.setdefault(exps, [Fraction(0)] * len(cols))[jcol] = fr
        target = {}
        for exps, c in PElem(dom, ell, comp).truncate(n).items():
            target[exps] = c
        coeffs = _solve_rows(rows, cols, target, dom)
        for key, c in coeffs.items():
            if not c.is_zero():
                out[key] = out.get(key, dom.zero) + c
    return {k: c for k, c in out.items() if not c.is_zero()}


def _as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if hasattr(c, "as_fraction"):
        return c.as_fraction()
    raise TypeError("atom basis coefficients should be rational")


def _solve_rows(rows, cols, target, dom):
    """Solve the (integer) atom matrix against a scalar-valued target."""
    ncols = len(cols)
    keys = sorted(set(rows) | set(target))
    mat = [list(rows.get(k, [Fraction(0)] * ncols)) for k in keys]
    vec = [target.get(k, dom.zero) for k in keys]
    sol = [None] * ncols
    rused = set()
    for col in range(ncols):
        piv = None
        for r, row in enumerate(mat):
            if r not in rused and row[col] != 0:
                piv = r
                break
        if piv is None:
            raise TruncationError("stable atom system lost a pivot; enlarge truncation")
        rused.add(piv)
        pv = mat[piv][col]
        mat[piv] = [x / pv for x in mat[piv]]
        vec[piv] = vec[piv] * (Fraction(1) / pv)
        for r in range(len(mat)):
            if r != piv and mat[r][col] != 0:
                fct = mat[r][col]
                mat[r] = [x - fct * y for x, y in zip(mat[r], mat[piv])]
                vec[r] = vec[r] - vec[piv] * fct
        sol[col] = piv
    out = {}
    for col, piv in enumerate(sol):
        out[cols[col]] = vec[piv]
    for r in range(len(mat)):
        if r not in rused and not vec[r].is_zero():
            raise TruncationError("inconsistent stable atom expansion; enlarge truncation")
    return out
