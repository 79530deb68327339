"""Borel-Weil-Bott cohomology on Gr(r,d) and the Kapranov collection.

The only algorithm here is the dotted Weyl-group action: concatenate the
weight on the dual tautological subbundle with the weight on the dual
quotient into a length-d vector, add rho, and either hit a repeated
entry (no cohomology) or sort and read off a single degree and a single
GL(V) highest weight. The convention (sub-dual entries first, output
reported as a weight on the dual of V) is fixed by the projective-space
table and by the Serre-duality property test, both in the test suite.
"""

import itertools
from collections import namedtuple
from functools import lru_cache

from .schur_calculus import littlewood_richardson, weyl_dimension

# outcome of one Bott evaluation: either zero, or cohomology in a single
# degree carrying one irreducible GL(V) representation, recorded as a
# dominant weight on the dual of V.
BottResult = namedtuple("BottResult", ["zero", "degree", "rep"])


def bott_result_to_dict(res, d=None):
    if res.zero:
        return {"zero": True}
    obj = {"degree": res.degree, "rep": list(res.rep)}
    if d is not None:
        obj["dim"] = weyl_dimension(res.rep, d)
        label = _rep_label(res.rep)
        if label:
            obj["label"] = label
    return obj


def _rep_label(rep):
    """Readable name for trivial and determinant-power weights."""
    vals = set(rep)
    if vals == {0}:
        return "O"
    if len(vals) == 1:
        c = rep[0]
        # rep lives on the dual of V, so all entries -1 means det V
        if c == -1:
            return "det V"
        if c == 1:
            return "det V^-1"
        return "det V^%d" % (-c)
    return None


def bott(r, d, alpha, beta=None):
    """Cohomology of Schur(alpha) S-dual tensor Schur(beta) Q-dual on Gr(r,d).

    Args:
        r, d: Grassmannian of r-planes in a d-dimensional space V; the
            degenerate cases r=0 and r=d are rejected.
        alpha: weight of length r on the dual tautological subbundle.
        beta: weight of length d-r on the dual quotient bundle; defaults
            to zero.

    Returns:
        BottResult. Nonzero results satisfy 0 <= degree <= r(d-r) and
        carry a dominant weight on the dual of V.
    """
    if not 1 <= r <= d - 1:
        raise ValueError("need 1 <= r <= d-1, got r=%d d=%d" % (r, d))
    alpha = tuple(int(x) for x in alpha)
    if len(alpha) != r:
        raise ValueError("alpha must have length %d, got %r" % (r, alpha))
    if beta is None:
        beta = (0,) * (d - r)
    beta = tuple(int(x) for x in beta)
    if len(beta) != d - r:
        raise ValueError("beta must have length %d, got %r" % (d - r, beta))
    return _bott_core(d, alpha + beta)


@lru_cache(maxsize=None)
def _bott_core(d, w):
    rho = tuple(range(d - 1, -1, -1))
    v = tuple(x + p for x, p in zip(w, rho))
    if len(set(v)) < d:
        return BottResult(True, None, None)
    inversions = 0
    for i in range(d):
        for j in range(i + 1, d):
            if v[i] < v[j]:
                inversions += 1
    srt = tuple(sorted(v, reverse=True))
    rep = tuple(s - p for s, p in zip(srt, rho))
    return BottResult(False, inversions, rep)


def dual_v_weight(rep):
    """Rewrite a weight on the dual of V as a weight on V (and back)."""
    return tuple(-x for x in reversed(rep))


def kapranov_collection(r, d):
    """The exceptional collection of Schur powers of the dual subbundle.

    All dominant weights alpha with 0 <= alpha_i <= d-r, in increasing
    lexicographic order. For r=2 there are d(d-1)/2 of them, the rank of
    the K-theory of Gr(2,d).
    """
    if not 1 <= r <= d - 1:
        raise ValueError("need 1 <= r <= d-1, got r=%d d=%d" % (r, d))
    box = range(d - r + 1)
    weights = [
        w
        for w in itertools.product(box, repeat=r)
        if all(w[i] >= w[i + 1] for i in range(r - 1))
    ]
    return sorted(weights)


def hom_bundle_decomposition(alpha, beta):
    """GL(2) decomposition of Hom(Schur(alpha) S-dual, Schur(beta) S-dual).

    The dual of Schur(alpha) on S-dual is Schur((-alpha2, -alpha1)), so
    this is one rank-2 Littlewood-Richardson product. Returns a dict
    mapping s_weight -> multiplicity.
    """
    a1, a2 = alpha
    return littlewood_richardson((-a2, -a1), tuple(beta), 2)


def strong_exceptional_check(r, d):
    """Verify no higher Ext between any ordered pair of collection members.

    Only r=2 is supported. For every ordered pair (alpha, beta) the Hom
    bundle is decomposed over GL(2) and each piece evaluated by bott; any
    positive-degree survivor is recorded as a structured failure. The
    degree-0 dimensions come back as the hom matrix in collection order.
    """
    if r != 2:
        raise ValueError("only the rank-2 collection is supported")
    if d < 2:
        raise ValueError("need d >= 2")
    coll = kapranov_collection(2, d)
    n = len(coll)
    hom = [[0] * n for _ in range(n)]
    failures = []
    for i, alpha in enumerate(coll):
        for j, beta in enumerate(coll):
            for w, mult in sorted(hom_bundle_decomposition(alpha, beta).items()):
                res = bott(2, d, w)
                if res.zero:
                    continue
                dim = mult * weyl_dimension(res.rep, d)
                if res.degree == 0:
                    hom[i][j] += dim
                else:
                    failures.append(
                        {
                            "alpha": list(alpha),
                            "beta": list(beta),
                            "weight": list(w),
                            "degree": res.degree,
                            "dim": dim,
                        }
                    )
    return {
        "pass": not failures,
        "r": 2,
        "d": d,
        "pairs_checked": n * n,
        "collection": [list(w) for w in coll],
        "hom_matrix": hom,
        "failures": failures,
    }
