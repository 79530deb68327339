"""Exact Schur-functor combinatorics for GL(n) weights.

Weights are tuples of integers, one entry per row of the acting group's
rank; dominant means non-increasing. Decompositions (Pieri,
Littlewood-Richardson, Cauchy) are computed by direct tableau
combinatorics over the integers. A brute-force character-polynomial
oracle (semistandard tableau enumeration plus alternant extraction) is
kept alongside so every rule can be re-derived a second, independent way
in the tests.
"""

import itertools
from collections import namedtuple
from functools import lru_cache

# A Schur power of the rank-2 tautological dual bundle, tensored with a
# constant GL(V) factor, with a homological shift [shift] and an
# equivariant fiber weight cstar. s_weight is always the normalized
# S-dual form (see normalize_rank2); v_weight () means the trivial factor.
SchurTerm = namedtuple("SchurTerm", ["s_weight", "v_weight", "shift", "cstar"])
SchurTerm.__new__.__defaults__ = ((), 0, 0)


def term_to_dict(term, mult=None):
    """JSON-ready dict for a SchurTerm, optionally with a multiplicity."""
    obj = {
        "s_weight": format_weight(term.s_weight),
        "v_weight": format_weight(term.v_weight),
        "shift": term.shift,
        "cstar": term.cstar,
    }
    if mult is not None:
        obj["mult"] = mult
    return obj


class FormalSum:
    """Integer-linear combination of SchurTerms.

    Zero-multiplicity entries are never stored, so equality is plain dict
    equality and the zero sum is the empty one.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for term, mult in terms.items() if isinstance(terms, dict) else terms:
                self.add(term, mult)

    def add(self, term, mult=1):
        if mult == 0:
            return self
        new = self.terms.get(term, 0) + mult
        if new == 0:
            self.terms.pop(term, None)
        else:
            self.terms[term] = new
        return self

    def items(self):
        """Deterministic (term, mult) pairs, sorted by the term fields."""
        return sorted(self.terms.items(), key=lambda tm: tm[0])

    def scale(self, c):
        out = FormalSum()
        if c != 0:
            for term, mult in self.terms.items():
                out.terms[term] = c * mult
        return out

    def __add__(self, other):
        out = FormalSum()
        out.terms = dict(self.terms)
        for term, mult in other.terms.items():
            out.add(term, mult)
        return out

    def __eq__(self, other):
        return isinstance(other, FormalSum) and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def to_json_obj(self):
        return [term_to_dict(t, m) for t, m in self.items()]


def parse_weight(text):
    """Parse "2,1" (optional leading minus per part) into a tuple."""
    text = text.strip()
    if not text:
        return ()
    return tuple(int(p) for p in text.split(","))


def format_weight(w):
    return ",".join(str(x) for x in w)


def is_dominant(w):
    return all(w[i] >= w[i + 1] for i in range(len(w) - 1))


def _check_weight(w, n, name):
    w = tuple(int(x) for x in w)
    if len(w) != n:
        raise ValueError("%s must have length %d, got %r" % (name, n, w))
    return w


def _check_dominant(w, n, name):
    w = _check_weight(w, n, name)
    if not is_dominant(w):
        raise ValueError("%s must be non-increasing, got %r" % (name, w))
    return w


def weyl_dimension(lam, n):
    """Dimension of the GL(n) irreducible with highest weight lam.

    Product formula over positive roots:
    prod_{i<j} (lam_i - lam_j + j - i) / (j - i).
    """
    lam = _check_dominant(lam, n, "lam")
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    assert num % den == 0
    return num // den


def normalize_rank2(m, t, dualized):
    """Normal form of Sym^m S(t) or Sym^m S^(t) as a single S-dual weight.

    Sym^m of the dual bundle twisted by O(t) is the Schur power with
    s_weight (m+t, t); Sym^m of the bundle itself gives (t, t-m). O(1)
    means the determinant of the dual bundle, so a twist by O(t) adds
    (t, t) to the weight. The rank-2 identity S = S^(-1) is the statement
    that both encodings of the same bundle normalize identically.

    Args:
        m: symmetric power, m >= 0.
        t: twist.
        dualized: True for Sym^m S^(t), False for Sym^m S(t).
    """
    if m < 0:
        raise ValueError("symmetric power must be non-negative, got %d" % m)
    if dualized:
        w = (m + t, t)
    else:
        w = (t, t - m)
    assert w[0] >= w[1]
    return SchurTerm(s_weight=w)


def twist_term(term, t):
    """Tensor a SchurTerm by O(t): adds (t, t) to its s_weight."""
    a, b = term.s_weight
    return term._replace(s_weight=(a + t, b + t))


def pieri(lam, j, n):
    """Decompose Schur(lam) tensor wedge^j of the defining rep of GL(n).

    Adds every 0/1 vector with j ones to lam and keeps the dominant
    results (a vertical strip in partition language); non-dominant sums
    are discarded with multiplicity zero, no sign rule enters here.

    Returns:
        dict mapping dominant weight (length n) -> multiplicity.
    """
    lam = _check_dominant(lam, n, "lam")
    if not 0 <= j <= n:
        raise ValueError("wedge index j must satisfy 0 <= j <= %d, got %d" % (n, j))
    out = {}
    for rows in itertools.combinations(range(n), j):
        nu = list(lam)
        for r in rows:
            nu[r] += 1
        nu = tuple(nu)
        if is_dominant(nu):
            out[nu] = out.get(nu, 0) + 1
    return out


def _strip_additions(shape, size, cap_rows):
    """All shapes obtained from `shape` by adding a horizontal strip.

    A strip adds `size` boxes, at most one per column, so the new length
    of row r is bounded by the old length of row r-1. Shapes are capped
    at cap_rows rows.
    """
    results = []

    def rec(r, remaining, new_shape):
        if r == cap_rows:
            if remaining == 0:
                results.append(tuple(new_shape))
            return
        low = shape[r]
        high = shape[r - 1] if r > 0 else shape[r] + remaining
        high = min(high, shape[r] + remaining)
        for new_len in range(low, high + 1):
            new_shape.append(new_len)
            rec(r + 1, remaining - (new_len - shape[r]), new_shape)
            new_shape.pop()

    rec(0, size, [])
    return results


@lru_cache(maxsize=None)
def _lr_partition_expand(lam, mu, n):
    """LR coefficients c^nu_{lam,mu} for partitions lam, mu with <= n rows.

    Enumerates Littlewood-Richardson skew tableaux of content mu on outer
    shapes grown from lam: boxes labelled v form a horizontal strip for
    each v in turn, and a complete filling counts iff its reverse reading
    word (rows top to bottom, each row right to left) is a lattice word.
    Returns dict nu (tuple of length n) -> coefficient.
    """
    out = {}
    start = tuple(lam)

    def rec(v, shape, blocks):
        if v > len(mu) or (v <= len(mu) and all(x == 0 for x in mu[v - 1:])):
            if _lattice_ok(blocks):
                nu = tuple(shape)
                out[nu] = out.get(nu, 0) + 1
            return
        size = mu[v - 1]
        if size == 0:
            rec(v + 1, shape, blocks)
            return
        for new_shape in _strip_additions(shape, size, n):
            new_blocks = []
            for r in range(n):
                added = new_shape[r] - shape[r]
                row = blocks[r] + ((v, added),) if added else blocks[r]
                new_blocks.append(row)
            rec(v + 1, new_shape, tuple(new_blocks))

    rec(1, start, tuple(() for _ in range(n)))
    return out


def _lattice_ok(blocks):
    """Ballot check on the reverse reading word of a block tableau.

    blocks[r] lists (value, count) runs of row r in increasing value
    order. Reading each row right to left visits runs in decreasing value
    order; within a run of value v the count of v may never exceed the
    count of v-1 seen so far.
    """
    counts = {}
    for row in blocks:
        for value, cnt in reversed(row):
            counts[value] = counts.get(value, 0) + cnt
            if value > 1 and counts[value] > counts.get(value - 1, 0):
                return False
    return True


def littlewood_richardson(lam, mu, n):
    """Decompose Schur(lam) tensor Schur(mu) over GL(n).

    Both weights may have negative entries: each is shifted by a power of
    the determinant character to a partition, the partition rule runs,
    and the shift is subtracted from every output. Coefficients are the
    Littlewood-Richardson numbers, so they are non-negative and satisfy
    the dimension identity sum_nu c * dim(nu) = dim(lam) * dim(mu).

    Returns:
        dict mapping dominant weight (length n) -> multiplicity.
    """
    lam = _check_dominant(lam, n, "lam")
    mu = _check_dominant(mu, n, "mu")
    a = max(0, -lam[-1]) if lam else 0
    b = max(0, -mu[-1]) if mu else 0
    lam_p = tuple(x + a for x in lam)
    mu_p = tuple(x + b for x in mu)
    # the enumeration walks strips of the second argument; use the
    # smaller content for speed (the coefficients are symmetric)
    if sum(mu_p) > sum(lam_p):
        lam_p, mu_p = mu_p, lam_p
    raw = _lr_partition_expand(lam_p, mu_p, n)
    shift = a + b
    return {tuple(x - shift for x in nu): c for nu, c in raw.items()}


def clebsch_gordan_rank2(x, y):
    """GL(2) tensor decomposition, the n=2 special case used everywhere.

    Schur(x) tensor Schur(y) = sum over i of Schur(x1+y1-i, x2+y2+i) for
    0 <= i <= min(x1-x2, y1-y2), each with multiplicity one.
    """
    (x1, x2), (y1, y2) = x, y
    out = {}
    for i in range(min(x1 - x2, y1 - y2) + 1):
        out[(x1 + y1 - i, x2 + y2 + i)] = 1
    return out


def partitions_with_parts(k, max_parts):
    """All partitions of k with at most max_parts parts (unpadded)."""
    result = []

    def rec(remaining, max_first, acc):
        if remaining == 0:
            result.append(tuple(acc))
            return
        if len(acc) == max_parts:
            return
        for part in range(min(remaining, max_first), 0, -1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    rec(k, k if k else 0, [])
    return result


def cauchy_sym(k, d, r):
    """Index set of the Cauchy decomposition of Sym^k(V tensor S-dual).

    Sym^k of a product of a d-dimensional and an r-dimensional space is
    the direct sum over partitions lam of k with at most min(r,d) parts
    of Schur(lam) of the first factor tensor Schur(lam) of the second.

    Returns:
        list of partitions lam, padded to length min(r,d), in
        decreasing lexicographic order; always contains (k, 0, ...).
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if r > d:
        raise ValueError("r must be at most d")
    m = min(r, d)
    parts = partitions_with_parts(k, m)
    padded = [p + (0,) * (m - len(p)) for p in parts]
    return sorted(padded, reverse=True)


# ---------------------------------------------------------------------------
# character-polynomial oracle


@lru_cache(maxsize=None)
def _ssyt_character(lam, n):
    """Character of Schur(lam) by semistandard tableau enumeration.

    lam must be a partition (non-negative). Returns dict mapping exponent
    vector (length n) -> coefficient. This is the independent definition
    the tableau rules are tested against.
    """
    rows = [l for l in lam if l > 0]
    out = {}

    def fill_row(r, prev_row, weight):
        if r == len(rows):
            key = tuple(weight)
            out[key] = out.get(key, 0) + 1
            return
        length = rows[r]
        row = [0] * length

        def fill_cell(c, min_entry):
            if c == length:
                for e in row:
                    weight[e - 1] += 1
                fill_row(r + 1, row[:], weight)
                for e in row:
                    weight[e - 1] -= 1
                return
            lo = min_entry
            if prev_row is not None and c < len(prev_row):
                lo = max(lo, prev_row[c] + 1)
            for e in range(lo, n + 1):
                row[c] = e
                fill_cell(c + 1, e)

        fill_cell(0, 1)

    fill_row(0, None, [0] * n)
    return out


def schur_character(lam, n):
    """Laurent character polynomial of the GL(n) irreducible Schur(lam).

    Negative entries are handled by a determinant shift. Returns a dict
    mapping exponent vectors to positive integer coefficients; the total
    of the coefficients is the dimension.
    """
    lam = _check_dominant(lam, n, "lam")
    a = max(0, -lam[-1]) if lam else 0
    base = _ssyt_character(tuple(x + a for x in lam), n)
    if a == 0:
        return dict(base)
    return {tuple(e - a for e in exp): c for exp, c in base.items()}


def char_mul(f, g):
    """Product of two character polynomials (dict convolution)."""
    out = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            key = tuple(a + b for a, b in zip(e1, e2))
            new = out.get(key, 0) + c1 * c2
            if new == 0:
                out.pop(key, None)
            else:
                out[key] = new
    return out


def char_dual(f):
    """Character of the dual representation: invert every variable."""
    return {tuple(-e for e in exp): c for exp, c in f.items()}


def character_multiplicities(f, n):
    """Decompose a symmetric Laurent polynomial into Schur characters.

    Multiplies by the alternant a_rho = sum over permutations of
    sgn(sigma) x^(sigma(rho)) and reads off the coefficients at strictly
    decreasing exponent vectors: the coefficient at nu + rho is the
    multiplicity of Schur(nu). Exact and signless only when f really is a
    non-negative combination; used as the test-side oracle.
    """
    rho = tuple(range(n - 1, -1, -1))
    h = {}
    for perm in itertools.permutations(range(n)):
        sgn = _perm_sign(perm)
        shifted = tuple(rho[p] for p in perm)
        for exp, c in f.items():
            key = tuple(a + b for a, b in zip(exp, shifted))
            new = h.get(key, 0) + sgn * c
            if new == 0:
                h.pop(key, None)
            else:
                h[key] = new
    out = {}
    for exp, c in h.items():
        if all(exp[i] > exp[i + 1] for i in range(n - 1)):
            nu = tuple(e - r for e, r in zip(exp, rho))
            out[nu] = c
    return out


def _perm_sign(perm):
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign
