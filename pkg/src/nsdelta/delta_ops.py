"""Left-hand sides of the main identities: the u-extracted operator element,
the path-traversal operators, and the bracket refactorizations.
"""

from __future__ import annotations

from .pspace import PElem, plethysm_pi_ell, pp_inv, pp_map
from .scalars import UDomain
from .vspace import VElem, assemble_u, tau_star_ell, u_component_v
from .words import (
    expand_in_word_images,
    mq_apply,
    nabla_check,
    ns_argument_words,
    w_check,
)


def ns_m_alpha_k(alpha, k, domain):
    """(-1)^n PP^{-1} t^{l-|alpha|} M^Q_k (y^(alpha-1) d_+^l (1))."""
    alpha = tuple(alpha)
    n = sum(alpha) + k
    ell = len(alpha)
    expansion = ns_argument_words(alpha, domain)
    mv = mq_apply(expansion, k, domain)
    comp = u_component_v(mv, k).scale(domain.from_int((-1) ** k))
    comp = comp.scale(domain.from_int((-1) ** n) * domain.t_pow(ell - sum(alpha)))
    return pp_inv(comp)


def lhs_eq1(alpha, k, domain):
    """Pi_ell applied to the operator element; the modified identity LHS."""
    return plethysm_pi_ell(ns_m_alpha_k(alpha, k, domain))


# ---------------------------------------------------------------------------
# Path traversal operators
# ---------------------------------------------------------------------------

def _d_minus_or_zero(v):
    if v.level == 0:
        return VElem.zero(v.domain, 0)
    return v.d_minus()


def chi_op(partial, sigma, variant, domain):
    """The operator composition read off a marked partial path, applied to 1.

    ``row_V`` uses d_- and d_+ with the corner commutator (d_- d_+ - d_+ d_-)
    /(t-1) and lands in V_ell; ``row_P`` is its P(ell) avatar (every
    horizontal step carries a sign); ``col_P`` twists horizontal steps by
    -t^{-r} with r = #horizontal - #vertical steps traversed so far.
    """
    if variant not in ("row_V", "row_P", "col_P"):
        raise ValueError(f"unknown chi variant {variant}")
    sigma = frozenset(sigma)
    corners = set(partial.corners())
    if not sigma <= corners:
        raise ValueError("marking outside the corner set")
    steps = str(partial)
    n = partial.n
    corner_at = {}
    for p in range(len(steps) - 1):
        if steps[p] == "E" and steps[p + 1] == "N":
            j = partial.ell + sum(1 for s in steps[: p + 2] if s == "N")
            xj = sum(1 for s in steps[: p + 1] if s == "E")
            if (xj, j) in sigma:
                corner_at[p] = (xj, j)

    t = domain.t
    one = domain.one
    v = VElem.one(domain, 0)
    h_cnt = v_cnt = 0
    p = len(steps) - 1
    while p >= 0:
        if (
            p >= 1
            and steps[p] == "N"
            and steps[p - 1] == "E"
            and (p - 1) in corner_at
        ):
            if variant in ("row_V", "row_P"):
                comm = _d_minus_or_zero(v.d_plus()) - _d_minus_or_zero(v).d_plus()
                v = comm.scale(one / (t - one))
            else:
                r = h_cnt - v_cnt
                first = _d_minus_or_zero(v.d_plus().scale(-domain.t_pow(-r)))
                second = _d_minus_or_zero(v).d_plus().scale(-domain.t_pow(-r + 1))
                v = (first - second).scale(one / (one / t - one))
            h_cnt += 1
            v_cnt += 1
            p -= 2
        elif steps[p] == "N":
            v = v.d_minus()
            v_cnt += 1
            p -= 1
        else:
            if variant == "col_P":
                r = h_cnt - v_cnt
                v = v.d_plus().scale(-domain.t_pow(-r))
            else:
                v = v.d_plus()
            h_cnt += 1
            p -= 1
    if variant == "row_V":
        return v
    if variant == "row_P":
        return pp_inv(v).scale(domain.from_int((-1) ** n))
    return pp_inv(v)


# ---------------------------------------------------------------------------
# The bracket refactorization and the final forms
# ---------------------------------------------------------------------------

def _nabla_check_u(v, inverse):
    """nabla-check layerwise over the u grading."""
    udom = v.domain
    layers = [nabla_check(u_component_v(v, m), inverse=inverse) for m in range(udom.order + 1)]
    return assemble_u(layers, udom, v.level)


def core_bracket(alpha, k, domain):
    """[(tau*_{qtu})^{-1} nabla-check^{-1} (tau*_{qtu})^{-1}]_k (x^alpha),
    evaluated through the V_ell realization and carried back to P(ell)."""
    alpha = tuple(alpha)
    ell = len(alpha)
    v = VElem(domain, ell, {(alpha, ()): domain.one})
    v = tau_star_ell(v, k, inverse=True, qt_scale=True)
    v = _nabla_check_u(v, inverse=True)
    v = tau_star_ell(v, k, inverse=True, qt_scale=True)
    comp = u_component_v(v, k).scale(domain.from_int((-1) ** k))
    return pp_inv(comp)


def w_check_p(f):
    """The P(ell) avatar of the antilinear involution w-check."""
    return pp_inv(w_check(pp_map(f)))


def nabla_check_p(f, inverse=False):
    """The P(ell) avatar of the nabla-check operator (the signed
    nonsymmetric nabla)."""
    return pp_inv(nabla_check(pp_map(f), inverse=inverse))


def newform_value(alpha, k, domain):
    """(-1)^k (-t)^{l-|alpha|} w-check^P of the bracket; equals the operator
    element of lhs_eq1 by the refactorization theorem."""
    alpha = tuple(alpha)
    ell = len(alpha)
    scalar = domain.from_int((-1) ** k) * (-domain.t) ** (ell - sum(alpha))
    return w_check_p(core_bracket(alpha, k, domain)).scale(scalar)


def lhs_column(alpha, k, domain):
    """(-1)^{n+k} (-t)^{l-|alpha|} vartheta of the bracket value; the signed
    flagged column LLT side."""
    alpha = tuple(alpha)
    n = sum(alpha) + k
    ell = len(alpha)
    scalar = domain.from_int((-1) ** (n + k)) * (-domain.t) ** (ell - sum(alpha))
    return core_bracket(alpha, k, domain).vartheta().scale(scalar)


def lhs_eq2(alpha, k, domain):
    """(-1)^{n+k} vartheta Pi_ell((-t)^{|alpha|-l} bracket value); the
    flagged word parking function side."""
    alpha = tuple(alpha)
    n = sum(alpha) + k
    ell = len(alpha)
    inner = core_bracket(alpha, k, domain).scale((-domain.t) ** (sum(alpha) - ell))
    return plethysm_pi_ell(inner).vartheta().scale(domain.from_int((-1) ** (n + k)))


def ns_c_alpha(alpha, domain):
    """The nonsymmetric compositional element (-t)^{|alpha|-l} Pi_l(x^alpha)."""
    alpha = tuple(alpha)
    ell = len(alpha)
    mono = PElem.x_monomial(domain, alpha)
    return plethysm_pi_ell(mono).scale((-domain.t) ** (sum(alpha) - ell))


def calpha_word_value(alpha, domain):
    """t^{l-|alpha|} omega-bar(d_-^l y^(alpha-1) d_+^l (1)); equals
    (-1)^|alpha| C_alpha(X;t) by the compositional Hall-Littlewood identity."""
    alpha = tuple(alpha)
    ell = len(alpha)
    v = VElem.one(domain, 0)
    for _ in range(ell):
        v = v.d_plus()
    for i, a in enumerate(alpha, start=1):
        for _ in range(a - 1):
            v = v.y_mult(i)
    for _ in range(ell):
        v = v.d_minus()
    f = v.to_symfunc().omega_bar()
    return f.scale(domain.t_pow(ell - sum(alpha)))
