"""Dyck paths, partial paths, decorations, labellings and their statistics.

Paths are step strings over {N, E}.  Rows are indexed 1..n bottom to top;
the area word entry a_i counts full cells between the path and the main
diagonal in row i.  Two different pair sets drive the statistics:

* ``attack_pairs``: i < j with a_i = a_j or a_i = a_j + 1; this is the pair
  set behind dinv and its variants on labelled paths.
* ``area_pairs``: the area cells read as (column, row) index pairs; this is
  the inversion pair set of the flagged LLT fillings.  (Marked corners are
  the cells just west of an E-then-N north step, which lie outside it.)
"""

from __future__ import annotations

import itertools
from functools import lru_cache


class DyckPath:
    """An (n,n) Dyck path as a string of N and E steps."""

    __slots__ = ("steps", "n", "area_word")

    def __init__(self, steps):
        steps = tuple(steps)
        if any(s not in "NE" for s in steps):
            raise ValueError("steps must be N or E")
        n2 = len(steps)
        if n2 % 2:
            raise ValueError("odd number of steps")
        self.n = n2 // 2
        ht = 0
        x = 0
        for s in steps:
            if s == "N":
                ht += 1
            else:
                x += 1
                if x > ht:
                    raise ValueError("path dips below the diagonal")
        if ht != self.n or x != self.n:
            raise ValueError("unbalanced path")
        self.steps = steps
        # a_i = (i-1) - x_i with x_i the x-coordinate of the i-th north step.
        xs = self.north_xs()
        self.area_word = tuple(i - xs[i] for i in range(self.n))

    @staticmethod
    def from_string(s):
        return DyckPath(s.strip().upper())

    def __str__(self):
        return "".join(self.steps)

    def __repr__(self):
        return f"DyckPath({''.join(self.steps)})"

    def __eq__(self, other):
        return isinstance(other, DyckPath) and self.steps == other.steps

    def __hash__(self):
        return hash(self.steps)

    def north_xs(self):
        """x-coordinate of each north step, bottom to top (0-indexed rows)."""
        xs = []
        x = 0
        for s in self.steps:
            if s == "N":
                xs.append(x)
            else:
                x += 1
        return xs

    def double_rises(self):
        a = self.area_word
        return tuple(i + 1 for i in range(1, self.n) if a[i] == a[i - 1] + 1)

    def touch_xs(self):
        """x-coordinates of the diagonal touch points (0, ..., n)."""
        out = [0]
        x = y = 0
        for s in self.steps:
            if s == "N":
                y += 1
            else:
                x += 1
                if x == y:
                    out.append(x)
        return out

    def diagonal_rows(self):
        """Rows whose north step starts on the main diagonal."""
        return tuple(i + 1 for i, a in enumerate(self.area_word) if a == 0)

    def attack_pairs(self):
        """All (i,j), i<j, with a_i = a_j or a_i = a_j + 1."""
        a = self.area_word
        return frozenset(
            (i + 1, j + 1)
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if a[i] == a[j] or a[i] == a[j] + 1
        )

    def area_pairs(self):
        """Area cells as (column, row) pairs: for each row j, the columns
        strictly between the path and the diagonal."""
        out = set()
        xs = self.north_xs()
        for j in range(1, self.n + 1):
            for i in range(xs[j - 1] + 1, j):
                out.add((i, j))
        return frozenset(out)

    def corners(self):
        """E-then-N corners as (column, row) = (x_j, j) pairs."""
        out = []
        xs = self.north_xs()
        for k in range(1, len(self.steps)):
            if self.steps[k - 1] == "E" and self.steps[k] == "N":
                j = sum(1 for s in self.steps[: k + 1] if s == "N")
                out.append((xs[j - 1], j))
        return tuple(out)

    def vertical_runs(self):
        """Maximal runs of consecutive rows in the same column."""
        xs = self.north_xs()
        runs = []
        cur = [1]
        for i in range(1, self.n):
            if xs[i] == xs[i - 1]:
                cur.append(i + 1)
            else:
                runs.append(tuple(cur))
                cur = [i + 1]
        runs.append(tuple(cur))
        return runs


@lru_cache(maxsize=None)
def enumerate_dyck(n):
    """All (n,n) Dyck paths."""
    out = []

    def rec(prefix, ups, downs):
        if ups == n and downs == n:
            out.append(DyckPath("".join(prefix)))
            return
        if ups < n:
            prefix.append("N")
            rec(prefix, ups + 1, downs)
            prefix.pop()
        if downs < ups and downs < n:
            prefix.append("E")
            rec(prefix, ups, downs + 1)
            prefix.pop()

    rec([], 0, 0)
    return tuple(out)


class DecoratedPath:
    """A Dyck path with a chosen subset of its double rises decorated."""

    __slots__ = ("path", "dr")

    def __init__(self, path, dr=()):
        self.path = path
        self.dr = frozenset(dr)
        if not self.dr <= set(path.double_rises()):
            raise ValueError(f"decoration {sorted(self.dr)} not within double rises")

    def __repr__(self):
        return f"DecoratedPath({self.path}, dr={sorted(self.dr)})"

    def __eq__(self, other):
        return (
            isinstance(other, DecoratedPath)
            and self.path == other.path
            and self.dr == other.dr
        )

    def __hash__(self):
        return hash((self.path, self.dr))

    def area(self):
        return sum(a for i, a in enumerate(self.path.area_word, start=1) if i not in self.dr)

    def dcomp(self):
        """Undecorated rows per diagonal-return segment (zeros kept)."""
        touches = self.path.touch_xs()
        parts = []
        for s in range(len(touches) - 1):
            lo, hi = touches[s], touches[s + 1]
            parts.append(sum(1 for i in range(lo + 1, hi + 1) if i not in self.dr))
        return tuple(parts)

    def touchpoints(self):
        return [(x, x) for x in self.path.touch_xs()]


def path_stats(dec):
    """(area, dcomp, touchpoints) of a decorated path."""
    return dec.area(), dec.dcomp(), dec.touchpoints()


def enumerate_decorated(n, k, alpha=None):
    """All (pi, dr) with |dr| = k, optionally with dcomp = alpha."""
    if alpha is not None:
        alpha = tuple(alpha)
        if sum(alpha) != n - k:
            raise ValueError("need |alpha| = n - k")
    out = []
    for path in enumerate_dyck(n):
        rises = path.double_rises()
        if len(rises) < k:
            continue
        for sub in itertools.combinations(rises, k):
            dec = DecoratedPath(path, sub)
            if alpha is None or dec.dcomp() == alpha:
                out.append(dec)
    return out


# ---------------------------------------------------------------------------
# Labellings
# ---------------------------------------------------------------------------

def enumerate_labels(path, mode, max_label, ell=None):
    """Label vectors for the north steps of a Dyck path.

    Modes: ``PF`` (strictly increasing up each vertical run), ``FWPF``
    (strictly increasing plus the diagonal flag), ``FWPF_weak`` (weakly
    decreasing plus the flag).  The flag bounds the j-th diagonal north
    step's label by j, for j up to ell (defaults to all diagonal rows).
    """
    if mode not in ("PF", "FWPF", "FWPF_weak"):
        raise ValueError(f"unknown label mode {mode}")
    n = path.n
    runs = path.vertical_runs()
    prev_in_run = {}
    for run in runs:
        for a, b in zip(run, run[1:]):
            prev_in_run[b] = a
    flag_bound = {}
    if mode in ("FWPF", "FWPF_weak"):
        diag = path.diagonal_rows()
        bound_count = len(diag) if ell is None else min(ell, len(diag))
        for j in range(bound_count):
            flag_bound[diag[j]] = j + 1

    out = []
    labels = [0] * n

    def rec(i):
        if i == n:
            out.append(tuple(labels))
            return
        row = i + 1
        hi = min(max_label, flag_bound.get(row, max_label))
        lo = 1
        if row in prev_in_run:
            p = labels[prev_in_run[row] - 1]
            if mode in ("PF", "FWPF"):
                lo = p + 1
            else:
                hi = min(hi, p)
        for v in range(lo, hi + 1):
            labels[i] = v
            rec(i + 1)

    rec(0)
    return out


def dinv(path, labels):
    """Classical two-clause diagonal-inversion count of a parking function."""
    a = path.area_word
    w = labels
    count = 0
    for i in range(path.n):
        for j in range(i + 1, path.n):
            if a[i] == a[j] and w[i] < w[j]:
                count += 1
            elif a[i] == a[j] + 1 and w[i] > w[j]:
                count += 1
    return count


def dinv_pairs(path, labels):
    """The attack pairs that actually create inversions for these labels."""
    a = path.area_word
    w = labels
    out = set()
    for i in range(path.n):
        for j in range(i + 1, path.n):
            if (a[i] == a[j] and w[i] < w[j]) or (a[i] == a[j] + 1 and w[i] > w[j]):
                out.add((i + 1, j + 1))
    return frozenset(out)


def dinv_variants(path, labels, mode):
    """dinv flavors over the attack pairs.

    ``strict_lt`` is the classical two-clause statistic.  ``weak_ge`` is its
    weak analog for weakly decreasing labellings: same-diagonal pairs count
    when w_i >= w_j and adjacent-diagonal pairs when w_i <= w_j (as with the
    classical statistic, the comparison flips across the diagonal step).
    ``strict_lt_fwpf`` flips both clauses of weak_ge to strict inequalities.
    """
    if mode == "strict_lt":
        return dinv(path, labels)
    if mode not in ("weak_ge", "strict_lt_fwpf"):
        raise ValueError(f"unknown dinv mode {mode}")
    a = path.area_word
    w = labels
    count = 0
    for i in range(path.n):
        for j in range(i + 1, path.n):
            if a[i] == a[j]:
                if (w[i] >= w[j]) if mode == "weak_ge" else (w[i] < w[j]):
                    count += 1
            elif a[i] == a[j] + 1:
                if (w[i] <= w[j]) if mode == "weak_ge" else (w[i] > w[j]):
                    count += 1
    return count


# ---------------------------------------------------------------------------
# Partial paths and markings
# ---------------------------------------------------------------------------

class PartialPath:
    """A lattice path from (0, ell) to (n, n) weakly above the diagonal."""

    __slots__ = ("ell", "steps", "full")

    def __init__(self, ell, steps):
        steps = tuple(steps)
        self.ell = ell
        self.steps = steps
        self.full = DyckPath(("N",) * ell + steps)

    @staticmethod
    def from_string(ell, s):
        return PartialPath(ell, tuple(s.strip().upper()))

    @property
    def n(self):
        return self.full.n

    def __str__(self):
        return "".join(self.steps)

    def __repr__(self):
        return f"PartialPath(ell={self.ell}, {''.join(self.steps)})"

    def __eq__(self, other):
        return (
            isinstance(other, PartialPath)
            and self.ell == other.ell
            and self.steps == other.steps
        )

    def __hash__(self):
        return hash((self.ell, self.steps))

    def corners(self):
        return self.full.corners()

    def area_pairs(self):
        return self.full.area_pairs()

    def markings(self):
        """All subsets of the outer corners."""
        cs = self.corners()
        return [frozenset(sub) for r in range(len(cs) + 1) for sub in itertools.combinations(cs, r)]


def enumerate_partial(ell, n):
    """All ell-partial paths to (n,n)."""
    out = []
    nn = n - ell

    def rec(prefix, ups, downs):
        if ups == nn and downs == n:
            out.append(PartialPath(ell, tuple(prefix)))
            return
        if ups < nn:
            prefix.append("N")
            rec(prefix, ups + 1, downs)
            prefix.pop()
        if downs < n and downs < ell + ups:
            prefix.append("E")
            rec(prefix, ups, downs + 1)
            prefix.pop()

    if nn < 0:
        return []
    rec([], 0, 0)
    return out


def parse_marking(text):
    """Parse the CLI marking literal '(r,c);(r,c)' into (col,row) pairs."""
    out = set()
    for chunk in text.split(";"):
        chunk = chunk.strip().strip("()")
        if not chunk:
            continue
        r, c = (int(x) for x in chunk.split(","))
        out.add((c, r))
    return frozenset(out)


def marking_to_text(sigma):
    return ";".join(f"({j},{i})" for (i, j) in sorted(sigma, key=lambda p: p[1]))
