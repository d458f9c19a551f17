"""Words in the Dyck path algebra generators and the operators defined
through them.

A word is a tuple of tokens ('D+',), ('D-',), ('T', i), ('Ti', i) in
composition order: the leftmost token is the outermost operator, and
evaluation applies tokens right to left starting from 1 in V_0.  Elements
of y_1..y_ell V_ell are expanded over images of such words (the module is
spanned by them), which is the computational handle for the level
extensions of nabla' and of the omega-bar twist, and for the u-series
operator whose u^k extraction produces the Delta-theorem left-hand sides.
"""

from __future__ import annotations

import itertools

from .scalars import UDomain, domain_cache as _domain_cache
from .vspace import VElem


class SpanError(ArithmeticError):
    """Word images failed to span the requested element."""


def word_levels(word, entry=0):
    """Level before each application step (right to left) and the exit level;
    raises on bookkeeping violations."""
    lvl = entry
    levels = []
    for tok in reversed(word):
        levels.append(lvl)
        if tok[0] == "D+":
            lvl += 1
        elif tok[0] == "D-":
            if lvl < 1:
                raise ValueError("d_- below level 0")
            lvl -= 1
        else:
            if not (1 <= tok[1] <= lvl - 1):
                raise ValueError(f"T_{tok[1]} invalid at level {lvl}")
    return levels, lvl


def word_degree(word):
    return sum(1 for tok in word if tok[0] == "D+")


def word_to_text(word):
    bits = []
    for tok in word:
        if tok[0] == "D+":
            bits.append("D+")
        elif tok[0] == "D-":
            bits.append("D-")
        elif tok[0] == "T":
            bits.append(f"T{tok[1]}")
        else:
            bits.append(f"T{tok[1]}^-1")
    return " ".join(bits)


def word_from_text(text):
    out = []
    for bit in text.split():
        if bit == "D+":
            out.append(("D+",))
        elif bit == "D-":
            out.append(("D-",))
        elif bit.endswith("^-1"):
            out.append(("Ti", int(bit[1:-3])))
        else:
            out.append(("T", int(bit[1:])))
    return tuple(out)


def eval_word(word, domain):
    """The image of the word applied to 1 in V_0 (cached per domain)."""
    cache = _domain_cache(domain)
    key = ("word", word)
    if key not in cache:
        word_levels(word)
        v = VElem.one(domain, 0)
        for tok in reversed(word):
            v = _apply_token(tok, v)
        cache[key] = v
    return cache[key]


def _apply_token(tok, v):
    if tok[0] == "D+":
        return v.d_plus()
    if tok[0] == "D-":
        return v.d_minus()
    if tok[0] == "T":
        return v.hecke_t(tok[1])
    return v.hecke_t(tok[1], inverse=True)


class WordExpansion:
    """A linear combination of generator words with a common exit level."""

    __slots__ = ("level", "terms")

    def __init__(self, level, terms):
        self.level = level
        self.terms = list(terms)

    def evaluate(self, domain):
        acc = VElem.zero(domain, self.level)
        for c, w in self.terms:
            acc = acc + eval_word(w, domain).scale(c)
        return acc

    def compose(self, inner):
        """self o inner, concatenating words with multiplied coefficients."""
        out = [(c1 * c2, w1 + w2) for c1, w1 in self.terms for c2, w2 in inner.terms]
        return WordExpansion(self.level, out)

    def to_records(self):
        def enc(c):
            return c.to_triples() if hasattr(c, "to_triples") else repr(c)

        return [{"scalar": enc(c), "word": word_to_text(w)} for c, w in self.terms]


def y_as_words(i, level, domain):
    """The multiplication operator y_i on V_level as a word expansion:
    y_1 = (d_+ d_- - d_- d_+) T_{l-1}..T_1 / (t^{l-1}(t-1)) and
    y_{i+1} = t T_i^{-1} y_i T_i^{-1}."""
    if not 1 <= i <= level:
        raise ValueError(f"y_{i} out of range at level {level}")
    if i == 1:
        chain = tuple(("T", j) for j in range(level - 1, 0, -1))
        c = domain.one / (domain.t_pow(level - 1) * (domain.t - domain.one))
        return WordExpansion(
            level,
            [(c, (("D+",), ("D-",)) + chain), (-c, (("D-",), ("D+",)) + chain)],
        )
    inner = y_as_words(i - 1, level, domain)
    wrapped = [
        (c * domain.t, (("Ti", i - 1),) + w + (("Ti", i - 1),)) for c, w in inner.terms
    ]
    return WordExpansion(level, wrapped)


def ns_argument_words(alpha, domain):
    """y_1^{a_1-1} .. y_l^{a_l-1} d_+^l (1) as a word expansion."""
    ell = len(alpha)
    expansion = WordExpansion(ell, [(domain.one, (("D+",),) * ell)])
    for i, a in enumerate(alpha, start=1):
        for _ in range(a - 1):
            expansion = y_as_words(i, ell, domain).compose(expansion)
    return expansion


# ---------------------------------------------------------------------------
# Spanning families and exact expansion over word images
# ---------------------------------------------------------------------------

def _module_keys(ell, d):
    """Basis keys of y_1..y_ell V_ell in degree d (all y-exponents >= 1)."""
    from .partitions import partitions_of

    keys = []
    for ytotal in range(ell, d + 1):
        for yexp in itertools.product(range(1, d + 1), repeat=ell):
            if sum(yexp) == ytotal:
                for lam in partitions_of(d - ytotal):
                    keys.append((yexp, lam))
    if ell == 0:
        keys = [((), lam) for lam in partitions_of(d)]
    return keys


def _skeletons(ell, d):
    """T-free words with d raising steps from level 0 to level ell."""
    out = []

    def rec(seq, lvl, ups, downs):
        if ups == d and downs == d - ell:
            out.append(tuple(reversed(seq)))
            return
        if ups < d:
            seq.append(("D+",))
            rec(seq, lvl + 1, ups + 1, downs)
            seq.pop()
        if lvl > 0 and downs < d - ell:
            seq.append(("D-",))
            rec(seq, lvl - 1, ups, downs + 1)
            seq.pop()

    rec([], 0, 0, 0)
    return out


def _t_insertions(word):
    """All single T/T-inverse insertions respecting level bookkeeping."""
    out = set()
    rev = tuple(reversed(word))
    lvl = 0
    for pos in range(len(rev) + 1):
        for i in range(1, lvl):
            for kind in ("T", "Ti"):
                cand = rev[:pos] + ((kind, i),) + rev[pos:]
                out.add(tuple(reversed(cand)))
        if pos < len(rev):
            tok = rev[pos]
            lvl += 1 if tok[0] == "D+" else (-1 if tok[0] == "D-" else 0)
    return out


class _RowBasis:
    """Gauss-Jordan row basis over the scalar field with word tracking."""

    def __init__(self, domain):
        self.domain = domain
        self.pivots = {}  # key -> (vec dict, combo dict word -> scalar)

    def _eliminate(self, vec, sol):
        for pk, (pvec, pcombo) in self.pivots.items():
            c = vec.get(pk)
            if c is None or c.is_zero():
                continue
            for k2, s in pvec.items():
                v2 = vec.get(k2, self.domain.zero) - c * s
                if v2.is_zero():
                    vec.pop(k2, None)
                else:
                    vec[k2] = v2
            for w, s in pcombo.items():
                v2 = sol.get(w, self.domain.zero) + c * s
                if v2.is_zero():
                    sol.pop(w, None)
                else:
                    sol[w] = v2
        return vec, sol

    def add_image(self, word, velem):
        """Insert a word image; returns True if it increased the rank."""
        vec = dict(velem.terms)
        combo = {word: self.domain.one}
        # vec = sum combo * images is preserved by subtracting pivot rows
        for pk, (pvec, pcombo) in self.pivots.items():
            c = vec.get(pk)
            if c is None or c.is_zero():
                continue
            for k2, s in pvec.items():
                v2 = vec.get(k2, self.domain.zero) - c * s
                if v2.is_zero():
                    vec.pop(k2, None)
                else:
                    vec[k2] = v2
            for w, s in pcombo.items():
                v2 = combo.get(w, self.domain.zero) - c * s
                if v2.is_zero():
                    combo.pop(w, None)
                else:
                    combo[w] = v2
        if not vec:
            return False
        pk = max(vec)
        pv = vec[pk]
        vec = {k: v / pv for k, v in vec.items()}
        combo = {w: v / pv for w, v in combo.items()}
        # keep earlier rows reduced at the new pivot key
        for ok, (ovec, ocombo) in self.pivots.items():
            c = ovec.get(pk)
            if c is None or c.is_zero():
                continue
            for k2, s in vec.items():
                v2 = ovec.get(k2, self.domain.zero) - c * s
                if v2.is_zero():
                    ovec.pop(k2, None)
                else:
                    ovec[k2] = v2
            for w, s in combo.items():
                v2 = ocombo.get(w, self.domain.zero) - c * s
                if v2.is_zero():
                    ocombo.pop(w, None)
                else:
                    ocombo[w] = v2
        self.pivots[pk] = (vec, combo)
        return True

    def solve(self, velem):
        """Coefficients expressing velem over the inserted images, or None."""
        vec = dict(velem.terms)
        sol = {}
        vec, sol = self._eliminate(vec, sol)
        if vec:
            return None
        return sol


def _span_family(domain, ell, d, max_insertions=4):
    """A word family whose images span y_1..y_ell V_ell degree d, with its
    row basis; built breadth-first with T insertions raised on demand."""
    cache = _domain_cache(domain)
    key = ("span", ell, d)
    if key in cache:
        return cache[key]
    target = len(_module_keys(ell, d))
    basis = _RowBasis(domain)
    frontier = list(_skeletons(ell, d))
    seen = set(frontier)
    rank = 0
    for word in frontier:
        img = eval_word(word, domain)
        if not img.in_y_module():
            continue
        if basis.add_image(word, img):
            rank += 1
            if rank == target:
                break
    waves = 0
    while rank < target and waves < max_insertions:
        waves += 1
        nxt = []
        for word in frontier:
            for cand in _t_insertions(word):
                if cand not in seen:
                    seen.add(cand)
                    nxt.append(cand)
        for word in nxt:
            img = eval_word(word, domain)
            if not img.in_y_module():
                continue
            if basis.add_image(word, img):
                rank += 1
                if rank == target:
                    break
        frontier = nxt
        if not nxt:
            break
    if rank < target:
        raise SpanError(
            f"word images span only {rank}/{target} dimensions at level {ell}, "
            f"degree {d} after {waves} insertion waves ({len(seen)} words tried)"
        )
    cache[key] = basis
    return basis


def expand_in_word_images(v):
    """Write v in y_1..y_ell V_ell as an exact combination of word images."""
    if not v.in_y_module():
        raise ValueError("element not in y_1..y_ell V_ell")
    if v.is_zero():
        return WordExpansion(v.level, [])
    degs = {sum(y) + sum(lam) for (y, lam) in v.terms}
    if len(degs) != 1:
        raise ValueError("expansion requires a homogeneous element")
    d = degs.pop()
    basis = _span_family(v.domain, v.level, d)
    sol = basis.solve(v)
    if sol is None:
        raise SpanError(f"element escaped the word-image span (level {v.level}, degree {d})")
    expansion = WordExpansion(v.level, [(c, w) for w, c in sol.items()])
    if not expansion.evaluate(v.domain) == v:
        raise AssertionError("word expansion failed to reproduce its source")
    return expansion


# ---------------------------------------------------------------------------
# The endomorphisms: w-check, nabla-check, M^Q
# ---------------------------------------------------------------------------

def _eval_omega_bar_word(word, domain):
    """Image of the omega-bar twisted word: T <-> T^{-1}, d_- fixed,
    d_+ from level l carried to -t^{-l} d_+."""
    cache = _domain_cache(domain)
    key = ("wbar", word)
    if key not in cache:
        v = VElem.one(domain, 0)
        for tok in reversed(word):
            if tok[0] == "D+":
                lv = v.level
                v = v.d_plus().scale(-domain.t_pow(-lv))
            elif tok[0] == "D-":
                v = v.d_minus()
            elif tok[0] == "T":
                v = v.hecke_t(tok[1], inverse=True)
            else:
                v = v.hecke_t(tok[1])
        cache[key] = v
    return cache[key]


def w_check(v):
    """The antilinear involution with w(1) = 1 intertwining the omega-bar
    twist of the algebra generators."""
    expansion = expand_in_word_images(v)
    acc = VElem.zero(v.domain, v.level)
    for c, w in expansion.terms:
        acc = acc + _eval_omega_bar_word(w, v.domain).scale(c.bar())
    return acc


def _eval_nabla_word(word, domain):
    """Image of the word with d_+ replaced by -(qt)^{-1} z_1 d_+."""
    cache = _domain_cache(domain)
    key = ("nabw", word)
    if key not in cache:
        scale = -(domain.one / (domain.q * domain.t))
        v = VElem.one(domain, 0)
        for tok in reversed(word):
            if tok[0] == "D+":
                v = v.d_plus().z_one().scale(scale)
            elif tok[0] == "D-":
                v = v.d_minus()
            elif tok[0] == "T":
                v = v.hecke_t(tok[1])
            else:
                v = v.hecke_t(tok[1], inverse=True)
        cache[key] = v
    return cache[key]


def nabla_check(v, inverse=False):
    """The level extension of nabla' determined by nabla(1) = 1 and the
    generator mapping d_+ -> -(qt)^{-1} z_1 d_+; the inverse is w nabla w."""
    from .macdonald import nabla
    from .vspace import VElem as _V

    if v.level == 0:
        f = nabla(v.to_symfunc(), primed=True, inverse=inverse)
        return _V.from_symfunc(f, 0)
    if inverse:
        return w_check(nabla_check(w_check(v)))
    expansion = expand_in_word_images(v)
    acc = VElem.zero(v.domain, v.level)
    for c, w in expansion.terms:
        acc = acc + _eval_nabla_word(w, v.domain).scale(c)
    return acc


def _mq_word(word, udom):
    """Image of the word under the push-through rules of M^Q:
    T <-> T^{-1}, d_- fixed, d_+ -> (-y_1/(1-u y_1)) d_+^*."""
    base = udom.base
    cache = _domain_cache(base)
    key = ("mqw", udom.order, word)
    if key not in cache:
        v = VElem.one(udom, 0)
        for tok in reversed(word):
            if tok[0] == "D+":
                v = v.d_plus_star()
                lv = v.level
                series = {}
                for m in range(udom.order + 1):
                    y = [0] * lv
                    y[0] = m + 1
                    series[(tuple(y), ())] = -udom.u_shift(base.one, m)
                v = VElem(udom, lv, series) * v
            elif tok[0] == "D-":
                v = v.d_minus()
            elif tok[0] == "T":
                v = v.hecke_t(tok[1], inverse=True)
            else:
                v = v.hecke_t(tok[1])
        cache[key] = v
    return cache[key]


def mq_apply(expansion, K, domain=None):
    """M^Q applied to a (y-token-free) word expansion, as a u-truncated
    element; antilinear in the expansion coefficients, with M^Q(1) = 1."""
    if domain is None:
        if not expansion.terms:
            raise ValueError("empty expansion needs an explicit domain")
        domain = _base_domain_of(expansion.terms[0][0])
    udom = UDomain(domain, K)
    acc = VElem.zero(udom, expansion.level)
    for c, w in expansion.terms:
        acc = acc + _mq_word(w, udom).scale(udom.lift(c.bar()))
    return acc


def _base_domain_of(scalar):
    # word expansions carry base-domain scalars produced by y_as_words
    from .scalars import PointValue, QtRat, SymbolicDomain

    if isinstance(scalar, QtRat):
        return SymbolicDomain()
    if isinstance(scalar, PointValue):
        return scalar.domain
    raise TypeError(f"unexpected scalar {type(scalar)}")
