"""The verification registry: every in-scope identity bound to a named,
parameterized check, with suite execution and reporting.

Checks compute both sides of an identity through independent routes and
compare exactly.  In specialized mode the scalar field is replaced by
values on random rational points (three independent points per check),
which is Schwartz-Zippel style evidence, never a symbolic proof.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field

from . import macdonald as mac
from .delta_ops import (
    calpha_word_value,
    chi_op,
    core_bracket,
    lhs_column,
    lhs_eq1,
    lhs_eq2,
    newform_value,
    ns_c_alpha,
    ns_m_alpha_k,
    w_check_p,
)
from .llt import all_llt_cases, llt_poly, rhs_nonsym, rhs_symmetric
from .partitions import compositions_of, partitions_of
from .paths import DecoratedPath, DyckPath, dinv, dinv_pairs, enumerate_dyck
from .pspace import (
    PElem,
    atom_expand,
    pi_ell_inv,
    plethysm_pi_ell,
    pp_inv,
    pp_map,
    weyl_chain,
)
from .scalars import PoleError, SpecializedDomain, SymbolicDomain, UDomain
from .symfunc import SymFunc
from .vspace import VElem, tau_star_ell, u_component_v, lift_velem
from .words import (
    WordExpansion,
    eval_word,
    expand_in_word_images,
    mq_apply,
    nabla_check,
    ns_argument_words,
    w_check,
    y_as_words,
    _skeletons,
)


@dataclass
class CheckSpec:
    name: str
    params: dict = field(default_factory=dict)
    theorem_ref: str = ""


@dataclass
class Report:
    name: str
    params: dict
    status: str  # pass | fail | skipped
    witness: str | None
    millis: int
    mode: str

    def to_json(self):
        return {
            "name": self.name,
            "params": {k: _enc(v) for k, v in self.params.items()},
            "status": self.status,
            "witness": self.witness,
            "millis": self.millis,
            "mode": self.mode,
        }

    def line(self):
        p = ", ".join(f"{k}={_enc(v)}" for k, v in self.params.items())
        status = self.status
        if self.status == "pass" and self.mode == "specialized":
            status = "pass (specialized)"
        msg = f"{self.name}({p}): {status} [{self.millis} ms]"
        if self.witness and self.status != "pass":
            msg += f"  witness: {self.witness}"
        return msg


def _enc(v):
    if isinstance(v, (tuple, list)):
        return list(v)
    return v


# ---------------------------------------------------------------------------
# Comparisons and witnesses
# ---------------------------------------------------------------------------

def _scalar_str(c):
    return repr(c)


def _first_mismatch(lhs, rhs):
    if isinstance(lhs, (PElem, VElem)):
        keys = set(lhs.terms) | set(rhs.terms)
        zero = lhs.domain.zero
        for k in sorted(keys):
            a = lhs.terms.get(k, zero)
            b = rhs.terms.get(k, zero)
            if not (a == b):
                return f"at {k}: {_scalar_str(a)} != {_scalar_str(b)}"
        return None
    if isinstance(lhs, SymFunc):
        a = lhs.convert("p")
        b = rhs.convert("p")
        zero = lhs.domain.zero
        for k in sorted(set(a.coeffs) | set(b.coeffs)):
            ca, cb = a.coeffs.get(k, zero), b.coeffs.get(k, zero)
            if not (ca == cb):
                return f"at p{list(k)}: {_scalar_str(ca)} != {_scalar_str(cb)}"
        return None
    return f"{lhs!r} != {rhs!r}"


def _compare(label, lhs, rhs):
    if lhs == rhs:
        return None
    w = _first_mismatch(lhs, rhs)
    return f"{label}: {w}"


# ---------------------------------------------------------------------------
# Random element generators (deterministic in the seed)
# ---------------------------------------------------------------------------

def rand_velem(domain, level, seed, degree=3, terms=4):
    rng = random.Random(("velem", level, seed))
    out = {}
    for _ in range(terms):
        y = tuple(rng.randint(0, max(0, degree - 1)) for _ in range(level))
        room = max(0, degree - sum(y))
        lam = []
        while room > 0 and rng.random() < 0.6:
            p = rng.randint(1, room)
            lam.append(p)
            room -= p
        c = domain.monomial(rng.randint(-3, 3), rng.randint(0, 1), rng.randint(0, 1))
        if not c.is_zero():
            out[(y, tuple(sorted(lam, reverse=True)))] = c
    return VElem(domain, level, out)


def rand_pelem(domain, level, seed, degree=3, terms=4):
    v = rand_velem(domain, level, seed, degree, terms)
    return pp_inv(v)


def rand_y_element(domain, level, degree, seed, terms=3):
    """A random homogeneous element of y_1..y_l V_l, built from word images."""
    rng = random.Random(("ymod", level, degree, seed))
    words = _skeletons(level, degree)
    acc = VElem.zero(domain, level)
    for _ in range(terms):
        w = words[rng.randrange(len(words))]
        c = domain.monomial(rng.randint(-2, 3) or 1, rng.randint(0, 1), rng.randint(0, 1))
        acc = acc + eval_word(w, domain).scale(c)
    if acc.is_zero():
        acc = eval_word(words[0], domain)
    return acc


def rand_symfunc(domain, degree, seed, terms=3):
    rng = random.Random(("sym", degree, seed))
    out = {}
    for _ in range(terms):
        parts = partitions_of(rng.randint(0, degree))
        lam = parts[rng.randrange(len(parts))]
        c = domain.monomial(rng.randint(-3, 3), rng.randint(0, 1), rng.randint(0, 1))
        if not c.is_zero():
            out[lam] = c
    return SymFunc(domain, "m", out)


# ---------------------------------------------------------------------------
# The checks
# ---------------------------------------------------------------------------

def check_symmetric_delta(domain, params):
    alpha = tuple(params["alpha"])
    k = params["k"]
    lhs = mac.theta_op(k, mac.nabla(mac.c_compose(alpha, domain)))
    rhs = rhs_symmetric(alpha, k, domain)
    yield _compare(f"Theta_e{k} nabla C_{list(alpha)}", lhs, rhs)


def check_figure2_stats(domain, params):
    path = DyckPath.from_string("NNNEENEENNNEENEE")
    dec = DecoratedPath(path, {2, 6})
    labels = (1, 2, 3, 2, 1, 3, 4, 4)
    expected_pairs = frozenset(
        {(2, 5), (2, 6), (2, 8), (3, 4), (3, 7), (4, 5), (4, 6), (4, 8), (6, 8)}
    )
    if dec.area() != 6:
        yield f"area: {dec.area()} != 6"
    if dinv(path, labels) != 9:
        yield f"dinv: {dinv(path, labels)} != 9"
    if dec.dcomp() != (3, 3):
        yield f"dcomp: {dec.dcomp()} != (3, 3)"
    if dinv_pairs(path, labels) != expected_pairs:
        yield f"contributing pairs: {sorted(dinv_pairs(path, labels))}"
    yield None


def check_eq1(domain, params):
    alpha = tuple(params["alpha"])
    k = params["k"]
    lhs = lhs_eq1(alpha, k, domain)
    rhs = rhs_nonsym(alpha, k, domain, weak=True)
    yield _compare(f"Pi_l nsM vs weak parking sum, alpha={list(alpha)} k={k}", lhs, rhs)


def check_eq1_unmod_indirect(domain, params):
    # The signed identity is phrased through the zeta image of each path,
    # which is out of scope; its content is covered by eq1 plus llt_row.
    return
    yield


def check_recover_omega(domain, params):
    alpha = tuple(params["alpha"])
    k = params["k"]
    lhs = weyl_chain(lhs_eq1(alpha, k, domain)).to_symfunc()
    rhs = mac.theta_op(k, mac.nabla(mac.c_compose(alpha, domain))).omega()
    yield _compare(f"weyl(lhs_eq1) vs omega Theta nabla C, alpha={list(alpha)} k={k}", lhs, rhs)


def check_llt_row(domain, params):
    ell, n = params["ell"], params["n"]
    from .paths import enumerate_partial

    for partial in enumerate_partial(ell, n):
        for sigma in partial.markings():
            lhs = llt_poly(partial, sigma, "row_signed", ell + n + 1, domain)
            rhs = chi_op(partial, sigma, "row_P", domain)
            yield _compare(f"Grow+- vs chi^P at {partial} sigma={sorted(sigma)}", lhs, rhs)


def check_llt_col(domain, params):
    ell, n = params["ell"], params["n"]
    from .paths import enumerate_partial

    for partial in enumerate_partial(ell, n):
        for sigma in partial.markings():
            lhs = llt_poly(partial, sigma, "col_signed", ell + n + 1, domain).invert_t()
            rhs = chi_op(partial, sigma, "col_P", domain)
            yield _compare(f"Gcol+-(1/t) vs col chi^P at {partial} sigma={sorted(sigma)}", lhs, rhs)


def check_llt_pi(domain, params):
    ell, n = params["ell"], params["n"]
    from .paths import enumerate_partial

    for partial in enumerate_partial(ell, n):
        for sigma in partial.markings():
            signed = llt_poly(partial, sigma, "row_signed", ell + n + 1, domain)
            unsigned = llt_poly(partial, sigma, "row", ell + n + 1, domain)
            yield _compare(f"Pi Grow+- vs Grow at {partial} sigma={sorted(sigma)}",
                           plethysm_pi_ell(signed), unsigned)
            signed_c = llt_poly(partial, sigma, "col_signed", ell + n + 1, domain).invert_t()
            unsigned_c = llt_poly(partial, sigma, "col", ell + n + 1, domain).invert_t()
            yield _compare(f"Pi Gcol+-(1/t) vs Gcol(1/t) at {partial} sigma={sorted(sigma)}",
                           plethysm_pi_ell(signed_c), unsigned_c)


def check_weyl_llt(domain, params):
    ell, n = params["ell"], params["n"]
    from .paths import enumerate_partial

    if ell == 0:
        return
    for partial in enumerate_partial(ell, n):
        for sigma in partial.markings():
            v = chi_op(partial, sigma, "row_V", domain)
            for _ in range(ell):
                v = v.d_minus()
            sym = v.to_symfunc()
            grow = llt_poly(partial, sigma, "row", ell + n + 1, domain)
            gcol = llt_poly(partial, sigma, "col", ell + n + 1, domain)
            yield _compare(f"weyl(Grow) vs omega chi at {partial} sigma={sorted(sigma)}",
                           weyl_chain(grow).to_symfunc(), sym.omega())
            yield _compare(f"weyl(Gcol) vs chi at {partial} sigma={sorted(sigma)}",
                           weyl_chain(gcol).to_symfunc(), sym)


def check_newform(domain, params):
    alpha = tuple(params["alpha"])
    k = params["k"]
    yield _compare(
        f"nsM vs w-check^P bracket, alpha={list(alpha)} k={k}",
        ns_m_alpha_k(alpha, k, domain),
        newform_value(alpha, k, domain),
    )


def check_p_flip(domain, params):
    ell, n = params["ell"], params["n"]
    from .paths import enumerate_partial

    for partial in enumerate_partial(ell, n):
        for sigma in partial.markings():
            grow = llt_poly(partial, sigma, "row_signed", ell + n + 1, domain)
            lhs = w_check_p(grow)
            rhs = llt_poly(partial, sigma, "col_signed", ell + n + 1, domain)
            rhs = rhs.invert_t().scale(domain.from_int((-1) ** n))
            yield _compare(f"w-check^P Grow+- vs Gcol+- at {partial} sigma={sorted(sigma)}", lhs, rhs)


def check_eq2(domain, params):
    alpha = tuple(params["alpha"])
    k = params["k"]
    lhs = lhs_eq2(alpha, k, domain)
    rhs = rhs_nonsym(alpha, k, domain, weak=False)
    yield _compare(f"eq2 lhs vs strict parking sum, alpha={list(alpha)} k={k}", lhs, rhs)


def check_eq2_column(domain, params):
    alpha = tuple(params["alpha"])
    k = params["k"]
    n = sum(alpha) + k
    lhs = lhs_column(alpha, k, domain)
    rhs = w_check_p(ns_m_alpha_k(alpha, k, domain)).vartheta().scale(domain.from_int((-1) ** n))
    yield _compare(f"column lhs vs vartheta w-check^P nsM, alpha={list(alpha)} k={k}", lhs, rhs)


def check_restore(domain, params):
    alpha = tuple(params["alpha"])
    k = params["k"]
    target = mac.theta_op(k, mac.nabla(mac.c_compose(alpha, domain)))
    yield _compare(
        f"weyl(lhs_eq2) vs Theta nabla C, alpha={list(alpha)} k={k}",
        weyl_chain(lhs_eq2(alpha, k, domain)).to_symfunc(),
        target,
    )
    yield _compare(
        f"weyl(rhs_eq2) vs symmetric sum, alpha={list(alpha)} k={k}",
        weyl_chain(rhs_nonsym(alpha, k, domain, weak=False)).to_symfunc(),
        rhs_symmetric(alpha, k, domain),
    )


# -- operator relation suite ---------------------------------------------------

def _one_minus_uy1(udom, level):
    terms = {((0,) * level, ()): udom.one}
    y = [0] * level
    y[0] = 1
    terms[(tuple(y), ())] = -udom.u
    return VElem(udom, level, terms)


def relation_hecke(domain, level, seed):
    F = rand_velem(domain, level, seed)
    for i in range(1, level):
        TF = F.hecke_t(i)
        yield _compare(f"(T_{i}-1)(T_{i}+t)=0 seed={seed}",
                       TF.hecke_t(i) - TF.scale(domain.one - domain.t), F.scale(domain.t))
        if i + 1 <= level - 1:
            yield _compare(
                f"braid T_{i} seed={seed}",
                F.hecke_t(i).hecke_t(i + 1).hecke_t(i),
                F.hecke_t(i + 1).hecke_t(i).hecke_t(i + 1),
            )


def relation_eqnewtau(domain, level, seed, K=2):
    F = rand_velem(domain, level, seed)
    udom = UDomain(domain, K)
    tF = tau_star_ell(F, K)
    yield _compare(f"tau d- seed={seed}", tF.d_minus(), tau_star_ell(F.d_minus(), K))
    yield _compare(f"tau d+ seed={seed}", tF.d_plus(), tau_star_ell(F.d_plus(), K))
    if level >= 2:
        yield _compare(f"tau T_1 seed={seed}", tF.hecke_t(1), tau_star_ell(F.hecke_t(1), K))
    if level >= 1:
        yield _compare(f"tau y_1 seed={seed}", tF.y_mult(1), tau_star_ell(F.y_mult(1), K))
        yield _compare(
            f"d+* tau = (1-u y1) tau d+* seed={seed}",
            tF.d_plus_star(),
            _one_minus_uy1(udom, level + 1) * tau_star_ell(F.d_plus_star(), K),
        )
        yield _compare(
            f"z1 tau = (1-u y1) tau z1 seed={seed}",
            tF.z_one(),
            _one_minus_uy1(udom, level) * tau_star_ell(F.z_one(), K),
        )


def relation_eqtau_inv(domain, level, seed, K=2):
    F = rand_velem(domain, level, seed)
    yield _compare(
        f"d- tau^-1 = tau^-1 d- seed={seed}",
        tau_star_ell(F, K, inverse=True).d_minus(),
        tau_star_ell(F.d_minus(), K, inverse=True),
    )
    yield _compare(
        f"tau tau^-1 = id seed={seed}",
        tau_star_ell(tau_star_ell(F, K), K, inverse=True),
        lift_velem(F, UDomain(domain, K)),
    )


def relation_zd(domain, level, seed):
    F = rand_velem(domain, level, seed)
    yield _compare(
        f"z1 d+ = -q t^(l+1) y1 d+* seed={seed}",
        F.d_plus().z_one(),
        F.d_plus_star().y_mult(1).scale(-(domain.q * domain.t_pow(level + 1))),
    )


def relation_prenewM(domain, level, degree, seed, K=1):
    v = rand_y_element(domain, level, degree, seed)
    expansion = expand_in_word_images(v)
    mv = mq_apply(expansion, K, domain)
    yield _compare(
        f"M^Q d- = d- M^Q seed={seed}",
        mq_apply(expand_in_word_images(v.d_minus()), K, domain) if level >= 1 else mv,
        mv.d_minus() if level >= 1 else mv,
    )
    if level >= 2:
        yield _compare(
            f"M^Q T_1 = T_1^-1 M^Q seed={seed}",
            mq_apply(expand_in_word_images(v.hecke_t(1)), K, domain),
            mv.hecke_t(1, inverse=True),
        )
    udom = UDomain(domain, K)
    series = {}
    for m in range(K + 1):
        y = [0] * (level + 1)
        y[0] = m + 1
        series[(tuple(y), ())] = -udom.u_shift(domain.one, m)
    mult = VElem(udom, level + 1, series)
    yield _compare(
        f"M^Q d+ = (-y1/(1-u y1)) d+* M^Q seed={seed}",
        mq_apply(expand_in_word_images(v.d_plus()), K, domain),
        mult * mv.d_plus_star(),
    )


def relation_nabla_w(domain, level, degree, seed):
    v = rand_y_element(domain, level, degree, seed)
    yield _compare(f"w-check involution seed={seed}", w_check(w_check(v)), v)
    yield _compare(
        f"(nabla-check w-check)^2 = id seed={seed}",
        nabla_check(w_check(nabla_check(w_check(v)))),
        v,
    )


def relation_newM(domain, level, degree, seed, K=1):
    v = rand_y_element(domain, level, degree, seed)
    lhs = mq_apply(expand_in_word_images(v), K, domain)
    udom = UDomain(domain, K)
    # tau* nabla-check tau* w-check
    g = lift_velem(w_check(v), udom)
    g = tau_star_ell(g, K)
    layers = [nabla_check(u_component_v(g, m)) for m in range(K + 1)]
    from .vspace import assemble_u

    g = assemble_u(layers, udom, level)
    g = tau_star_ell(g, K)
    yield _compare(f"M^Q = tau nabla-check tau w-check seed={seed}", lhs, g)
    # w-check (tau_qtu)^-1 nabla-check^-1 (tau_qtu)^-1
    h = lift_velem(v, udom)
    h = tau_star_ell(h, K, inverse=True, qt_scale=True)
    layers = [nabla_check(u_component_v(h, m), inverse=True) for m in range(K + 1)]
    h = assemble_u(layers, udom, level)
    h = tau_star_ell(h, K, inverse=True, qt_scale=True)
    layers = [w_check(u_component_v(h, m)) for m in range(K + 1)]
    # w-check is antilinear: conjugate the u-layers after applying
    h = assemble_u(layers, udom, level)
    yield _compare(f"M^Q = w-check tau_qtu^-1 nabla^-1 tau_qtu^-1 seed={seed}", lhs, h)


def relation_deltaprime(domain, seed):
    rng = random.Random(("dp", seed))
    n = rng.randint(1, 5)
    parts = partitions_of(n)
    mu = parts[rng.randrange(len(parts))]
    f = mac.from_ht(SymFunc(domain, "Ht", {mu: domain.one}))
    k = rng.randint(1, n)
    yield _compare(
        f"Delta_e{k} = Delta'_e{k} + Delta'_e{k-1} on Ht{list(mu)}",
        mac.delta_op(k, f),
        mac.delta_op(k, f, primed=True) + mac.delta_op(k - 1, f, primed=True),
    )


def relation_thetanabla(domain, seed):
    rng = random.Random(("tn", seed))
    d = rng.randint(1, 4)
    k = rng.randint(0, 2)
    f = rand_symfunc(domain, d, seed)
    lhs = mac.theta_op(k, mac.nabla(f, primed=True))
    rhs = SymFunc.zero(domain, "m")
    for i in range(k + 1):
        g = mac.e_star(k - i, domain) * f
        g = mac.nabla(g, primed=True)
        rhs = rhs + (mac.e_star(i, domain) * g).convert("m")
    yield _compare(f"Theta_k nabla' = sum e_i* nabla' e_(k-i)* (d={d},k={k})", lhs.convert("m"), rhs)


def relation_remarksign(domain, seed):
    rng = random.Random(("rs", seed))
    d = rng.randint(1, 4)
    k = rng.randint(0, 2)
    f = rand_symfunc(domain, d, seed).graded_component(d)
    if f.is_zero():
        f = SymFunc.gen(domain, "h", (d,))
    lhs = mac.bracket_tau_nabla_tau(f, k).scale(domain.from_int((-1) ** d))
    rhs = mac.theta_op(k, mac.nabla(f))
    yield _compare(f"(-1)^d [tau nabla' tau]_k = Theta_ek nabla (d={d},k={k})", lhs.convert("m"), rhs.convert("m"))


def relation_111(domain, seed):
    rng = random.Random(("i111", seed))
    n = rng.randint(1, 4)
    parts = partitions_of(n)
    mu = parts[rng.randrange(len(parts))]
    f = mac.from_ht(SymFunc(domain, "Ht", {mu: domain.one}))
    # vartheta omega nabla'^-1 omega vartheta, applied inside-out
    h = f.vartheta().omega()
    h = mac.nabla(h, primed=True, inverse=True)
    lhs = h.omega().vartheta()
    yield _compare(f"vartheta omega nabla'^-1 omega vartheta = nabla' on Ht{list(mu)}",
                   lhs.convert("m"), mac.nabla(f, primed=True).convert("m"))


def relation_222(domain, seed):
    rng = random.Random(("i222", seed))
    n = rng.randint(1, 3)
    i = rng.randint(0, 2)
    parts = partitions_of(n)
    mu = parts[rng.randrange(len(parts))]
    f = mac.from_ht(SymFunc(domain, "Ht", {mu: domain.one}))
    h = f.vartheta().omega()
    h = (mac.h_star(i, domain) * h).scale((domain.q * domain.t) ** i)
    lhs = h.omega().vartheta()
    rhs = mac.e_star(i, domain) * f
    yield _compare(f"vartheta omega (qt)^{i} h_{i}* omega vartheta = e_{i}* on Ht{list(mu)}",
                   lhs.convert("m"), rhs.convert("m"))


def relation_pi0p0(domain, seed):
    rng = random.Random(("pp0", seed))
    d = rng.randint(1, 4)
    f = rand_symfunc(domain, d, seed).graded_component(d)
    if f.is_zero():
        f = SymFunc.gen(domain, "s", (d,))
    lhs = plethysm_pi_ell(pp_inv(VElem.from_symfunc(f))).to_symfunc()
    rhs = f.omega().scale(domain.from_int((-1) ** d))
    yield _compare(f"Pi_0 PP_0^-1 f = (-1)^d omega f (d={d})", lhs.convert("m"), rhs.convert("m"))


def relation_calpha(domain, seed):
    rng = random.Random(("ca", seed))
    comps = [a for m in range(1, 5) for a in compositions_of(m) if len(a) <= 3]
    alpha = comps[rng.randrange(len(comps))]
    lhs = mac.c_compose(alpha, domain).scale(domain.from_int((-1) ** sum(alpha)))
    yield _compare(f"(-1)^|a| C_a = t^(l-|a|) omega-bar(d_-^l y^(a-1) d_+^l 1), a={list(alpha)}",
                   lhs.convert("p"), calpha_word_value(alpha, domain).convert("p"))


def relation_weylnsc(domain, seed):
    rng = random.Random(("wc", seed))
    comps = [a for m in range(1, 4) for a in compositions_of(m) if len(a) <= 3]
    alpha = comps[rng.randrange(len(comps))]
    lhs = weyl_chain(ns_c_alpha(alpha, domain)).to_symfunc()
    rhs = mac.c_compose(alpha, domain).invert_t()
    yield _compare(f"weyl(ns C_a) = C_a(X;1/t), a={list(alpha)}", lhs.convert("p"), rhs.convert("p"))


def relation_useful(domain, seed):
    rng = random.Random(("uf", seed))
    level = rng.randint(1, 2)
    f = rand_pelem(domain, level, seed)
    lhs = weyl_chain(plethysm_pi_ell(f)).to_symfunc()
    v = pp_map(f)
    for _ in range(level):
        v = v.d_minus()
    rhs = plethysm_pi_ell(pp_inv(v)).to_symfunc()
    yield _compare(f"weyl Pi_l f = Pi_0 PP_0^-1 d_-^l PP_l f (l={level})", lhs, rhs)


def relation_lemma783(domain, seed):
    rng = random.Random(("l783", seed))
    level = rng.randint(1, 2)
    d = rng.randint(1, 3)
    f = rand_pelem(domain, level, seed, degree=d)
    comps = {}
    for key, c in f.terms.items():
        comps.setdefault(sum(key[0]) + sum(key[1]), {})[key] = c
    for dd, terms in comps.items():
        g = PElem(domain, level, terms)
        v = pp_map(pi_ell_inv(g))
        for _ in range(level):
            v = v.d_minus()
        lhs = v.to_symfunc()
        rhs = weyl_chain(g).to_symfunc().omega().scale(domain.from_int((-1) ** dd))
        yield _compare(f"d_-^l PP Pi^-1 f = (-1)^d omega weyl f (l={level}, d={dd})", lhs, rhs)


def relation_y_words(domain, seed):
    rng = random.Random(("yw", seed))
    level = rng.randint(1, 3)
    i = rng.randint(1, level)
    F = rand_velem(domain, level, seed, degree=2)
    expansion = y_as_words(i, level, domain)
    acc = VElem.zero(domain, level)
    # apply the word expansion to F directly
    for c, w in expansion.terms:
        g = F
        for tok in reversed(w):
            if tok[0] == "D+":
                g = g.d_plus()
            elif tok[0] == "D-":
                g = g.d_minus()
            elif tok[0] == "T":
                g = g.hecke_t(tok[1])
            else:
                g = g.hecke_t(tok[1], inverse=True)
        acc = acc + g.scale(c)
    yield _compare(f"y_{i} word expansion acts as multiplication (l={level})", acc, F.y_mult(i))


RELATIONS = {
    "hecke": lambda dom, seed: relation_hecke(dom, 2 + seed % 2, seed),
    "eqnewtau": lambda dom, seed: relation_eqnewtau(dom, 1 + seed % 2, seed),
    "eqtau_inv": lambda dom, seed: relation_eqtau_inv(dom, 1 + seed % 2, seed),
    "zd_relation": lambda dom, seed: relation_zd(dom, seed % 3, seed),
    "prenewM": lambda dom, seed: relation_prenewM(dom, 1 + seed % 2, 2 + seed % 2, seed),
    "nabla_w": lambda dom, seed: relation_nabla_w(dom, 1 + seed % 2, 2 + seed % 2, seed),
    "newM": lambda dom, seed: relation_newM(dom, 1 + seed % 2, 2 + seed % 2, seed),
    "deltaprime": relation_deltaprime,
    "thetanabla": relation_thetanabla,
    "remarksign": relation_remarksign,
    "eq111": relation_111,
    "eq222": relation_222,
    "pi0p0": relation_pi0p0,
    "calpha": relation_calpha,
    "weylnsc": relation_weylnsc,
    "useful": relation_useful,
    "lemma783": relation_lemma783,
    "y_words": relation_y_words,
}


def check_operator_relations(domain, params):
    name = params["relation"]
    count = params.get("count", 20)
    if name not in RELATIONS:
        raise ValueError(f"unknown relation {name}")
    for seed in range(count):
        yield from RELATIONS[name](domain, seed)


def check_shuffle_degeneration(domain, params):
    n = params.get("n", 3)
    for alpha in compositions_of(n):
        yield from check_eq1(domain, {"alpha": alpha, "k": 0})
        yield from check_eq2(domain, {"alpha": alpha, "k": 0})


# -- atom positivity (observational) -------------------------------------------

def _qt_nonneg(c):
    r = c.reduced()
    if r.den.degree(0) > 0 or r.den.degree(1) > 0:
        return False
    den = int(r.den.LC)
    return all((int(v) * den) >= 0 for _m, v in r.num.iterterms())


def atom_findings(f):
    """Stable-atom expansion findings: entries with non-polynomial or
    negative coefficients (empty means atom positive)."""
    out = []
    for (eta, lam), c in sorted(atom_expand(f).items()):
        if not _qt_nonneg(c):
            out.append(f"A[{list(eta)}|{list(lam)}]: {c!r}")
    return out


def check_atom_positivity(domain, params):
    target = params["target"]
    findings = []
    if target == "llt":
        bound = params.get("bound", 4)
        for (ell, n, pp, sigma) in all_llt_cases(bound):
            for variant in ("row", "col"):
                f = llt_poly(pp, sigma, variant, ell + n + 1, domain)
                for note in atom_findings(f):
                    findings.append(f"{variant} {pp} sigma={sorted(sigma)}: {note}")
    else:
        alpha = tuple(params["alpha"])
        k = params["k"]
        f = lhs_eq1(alpha, k, domain) if target == "eq1" else lhs_eq2(alpha, k, domain)
        findings.extend(atom_findings(f))
    # findings are observations against the positivity conjecture, not failures
    if findings:
        yield "OBSERVATION: " + "; ".join(findings[:4])
    yield None


CHECKS = {
    "symmetric_delta": check_symmetric_delta,
    "figure2_stats": check_figure2_stats,
    "eq1": check_eq1,
    "eq1_unmod_indirect": check_eq1_unmod_indirect,
    "recover_omega": check_recover_omega,
    "llt_row": check_llt_row,
    "llt_col": check_llt_col,
    "llt_pi": check_llt_pi,
    "weyl_llt": check_weyl_llt,
    "operator_relations": check_operator_relations,
    "newform": check_newform,
    "p_flip": check_p_flip,
    "eq2": check_eq2,
    "eq2_column": check_eq2_column,
    "restore": check_restore,
    "shuffle_degeneration": check_shuffle_degeneration,
    "atom_positivity": check_atom_positivity,
}

OBSERVATIONAL = {"atom_positivity"}


def _validate_params(name, params):
    if "alpha" in params and "k" in params:
        alpha = tuple(params["alpha"])
        if not all(isinstance(a, int) and a >= 1 for a in alpha):
            raise ValueError(f"{name}: alpha must be a strict composition, got {alpha}")
        if params["k"] < 0:
            raise ValueError(f"{name}: k must be nonnegative")


def _specialized_domains(seed, count=3):
    rng = random.Random(("points", seed))
    out = []
    while len(out) < count:
        from fractions import Fraction

        q0 = Fraction(rng.randint(2, 19), rng.randint(1, 7))
        t0 = Fraction(rng.randint(2, 19), rng.randint(1, 7))
        try:
            out.append(SpecializedDomain(q0, t0))
        except ValueError:
            continue
    return out


def run_check(spec, mode="symbolic", seed=0, mutate=False):
    """Execute one registered check and produce a Report."""
    name, params = spec.name, dict(spec.params)
    if name not in CHECKS:
        raise KeyError(f"unknown check name {name}")
    _validate_params(name, params)
    start = time.time()
    if name == "eq1_unmod_indirect":
        return Report(name, params, "skipped",
                      "signed form is zeta-phrased; covered indirectly by eq1 + llt_row",
                      0, mode)
    domains = [SymbolicDomain()] if mode == "symbolic" else _specialized_domains(seed)
    witness = None
    status = "pass"
    for domain in domains:
        try:
            for w in CHECKS[name](domain, params):
                if mutate and w is None:
                    w = "mutation hook: deliberately perturbed comparison"
                if w is not None:
                    if name in OBSERVATIONAL and w.startswith("OBSERVATION"):
                        witness = w
                        continue
                    status = "fail"
                    witness = w
                    break
        except PoleError as exc:
            status = "fail"
            witness = f"specialization hit a pole: {exc}"
        if status == "fail":
            break
    millis = int((time.time() - start) * 1000)
    return Report(name, params, status, witness, millis, mode)


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------

def _alpha_cases(nmax, kmax):
    for n in range(1, nmax + 1):
        for k in range(0, min(kmax, n - 1) + 1):
            if n - k < 1:
                continue
            for alpha in compositions_of(n - k):
                yield alpha, k


def suite_specs(suite="default"):
    """The registered check instances for a named suite."""
    if suite == "fast":
        nop, ncomb, kmax, llt_bound, relcount = 3, 4, 1, 3, 5
    elif suite == "full":
        nop, ncomb, kmax, llt_bound, relcount = 4, 6, 2, 4, 20
    else:
        nop, ncomb, kmax, llt_bound, relcount = 4, 6, 2, 4, 20
    specs = [CheckSpec("figure2_stats")]
    for n in range(1, (5 if suite == "full" else nop) + 1):
        for k in range(0, n):
            for alpha in compositions_of(n - k):
                specs.append(CheckSpec("symmetric_delta", {"alpha": alpha, "k": k}))
    for alpha, k in _alpha_cases(nop, kmax):
        specs.append(CheckSpec("eq1", {"alpha": alpha, "k": k}))
        specs.append(CheckSpec("recover_omega", {"alpha": alpha, "k": k}))
        if k <= 1:
            specs.append(CheckSpec("eq2", {"alpha": alpha, "k": k}))
            specs.append(CheckSpec("eq2_column", {"alpha": alpha, "k": k}))
            specs.append(CheckSpec("restore", {"alpha": alpha, "k": k}))
        if sum(alpha) <= 3 and k <= 1:
            specs.append(CheckSpec("newform", {"alpha": alpha, "k": k}))
    specs.append(CheckSpec("eq1_unmod_indirect"))
    for ell in range(0, llt_bound):
        for n in range(max(ell, 1), llt_bound - ell + 1 + (1 if suite == "full" else 0)):
            if ell + n > (5 if suite == "full" else llt_bound):
                continue
            specs.append(CheckSpec("llt_row", {"ell": ell, "n": n}))
            specs.append(CheckSpec("llt_col", {"ell": ell, "n": n}))
            if ell + n <= llt_bound:
                specs.append(CheckSpec("llt_pi", {"ell": ell, "n": n}))
                specs.append(CheckSpec("p_flip", {"ell": ell, "n": n}))
                if ell >= 1:
                    specs.append(CheckSpec("weyl_llt", {"ell": ell, "n": n}))
    for rel in RELATIONS:
        specs.append(CheckSpec("operator_relations", {"relation": rel, "count": relcount}))
    specs.append(CheckSpec("shuffle_degeneration", {"n": 3}))
    specs.append(CheckSpec("atom_positivity", {"target": "llt", "bound": 3 if suite == "fast" else 4}))
    for alpha, k in _alpha_cases(3, 1):
        specs.append(CheckSpec("atom_positivity", {"target": "eq1", "alpha": alpha, "k": k}))
        if k <= 1:
            specs.append(CheckSpec("atom_positivity", {"target": "eq2", "alpha": alpha, "k": k}))
    return specs


def run_suite(specs, mode="symbolic", seed=0):
    """Run checks and return reports sorted by name and parameters."""
    reports = [run_check(s, mode=mode, seed=seed) for s in specs]
    reports.sort(key=lambda r: (r.name, json.dumps(r.to_json()["params"], sort_keys=True)))
    return reports
