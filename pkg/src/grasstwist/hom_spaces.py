"""Graded RHom on the total spaces over Gr(2,d) and over PV.

X is the total space of Hom(V,S) over Gr(2,d) and X0 the total space of
Hom(V,l) over PV. RHom between pullbacks is pushed to the base and
expanded fiberwise: the Sym-degree k piece of RHom_X(Schur(a)S-dual,
Schur(a')S-dual) is the cohomology of the Hom bundle tensored with the
Cauchy pieces of Sym^k(V tensor S-dual). Cells are stored per
(cohomological degree, Sym-degree) as multisets of GL(V) weights.

The tilting checks run a degrees-only variant of the same loop (no GL(V)
decomposition), which is what keeps the full d=5 sweep fast; the two
paths are compared for total dimension in the tests.
"""

from .bott_cohomology import bott, dual_v_weight, hom_bundle_decomposition, kapranov_collection
from .schur_calculus import (
    cauchy_sym,
    clebsch_gordan_rank2,
    format_weight,
    littlewood_richardson,
    weyl_dimension,
)


class GradedHom:
    """Table (cohomological degree i, Sym-degree k) -> GL(V) weight multiset."""

    __slots__ = ("space", "d", "k_max", "pair", "entries")

    def __init__(self, space, d, k_max, pair):
        self.space = space
        self.d = d
        self.k_max = k_max
        self.pair = pair
        self.entries = {}

    def add(self, i, k, weight, mult):
        cell = self.entries.setdefault((i, k), {})
        cell[weight] = cell.get(weight, 0) + mult

    def cell(self, i, k):
        return self.entries.get((i, k), {})

    def cell_dim(self, i, k):
        return sum(
            m * weyl_dimension(w, self.d) for w, m in self.cell(i, k).items()
        )

    def max_degree(self):
        return max((i for i, _ in self.entries), default=0)

    def to_json_obj(self):
        cells = []
        for (i, k) in sorted(self.entries, key=lambda ik: (ik[1], ik[0])):
            weights = [
                {"weight": format_weight(w), "mult": m}
                for w, m in sorted(self.entries[(i, k)].items())
            ]
            cells.append(
                {"i": i, "k": k, "dim": self.cell_dim(i, k), "weights": weights}
            )
        return {
            "space": self.space,
            "d": self.d,
            "k_max": self.k_max,
            "pair": self.pair,
            "cells": cells,
        }

    def to_tsv_lines(self):
        lines = ["i\tk\tweight\tmult"]
        for (i, k) in sorted(self.entries, key=lambda ik: (ik[1], ik[0])):
            for w, m in sorted(self.entries[(i, k)].items()):
                lines.append("%d\t%d\t%s\t%d" % (i, k, format_weight(w), m))
        return lines


def _check_collection_weight(alpha, d, name):
    alpha = tuple(int(x) for x in alpha)
    if len(alpha) != 2 or not (0 <= alpha[1] <= alpha[0] <= d - 2):
        raise ValueError(
            "%s outside collection bounds for d=%d: %r" % (name, d, alpha)
        )
    return alpha


def _sym_fiber_terms(alpha, alpha2, k, d):
    """Terms of the Sym-degree k piece of the Hom bundle on Gr(2,d).

    Yields (mu, lam, mult): mu is the S-dual weight to feed to bott, lam
    the Cauchy partition whose Schur power of V rides along. Every mu
    satisfies mu >= (-(d-2), -(d-2)) componentwise; that bound is the
    uniform reason no higher cohomology can appear, so it is rechecked
    here on every term.
    """
    base = hom_bundle_decomposition(alpha, alpha2)
    floor = -(d - 2)
    for lam in cauchy_sym(k, d, 2):
        for w, m in sorted(base.items()):
            for mu, m2 in sorted(clebsch_gordan_rank2(w, lam).items()):
                ok = mu[0] >= floor and mu[1] >= floor
                yield mu, lam, m * m2, ok


def rhom_X_graded(alpha, alpha2, d, k_max):
    """Graded RHom_X between pullbacks of two collection members.

    Args:
        alpha, alpha2: dominant length-2 weights inside the collection
            box 0 <= w <= (d-2, d-2); anything else raises.
        d: dimension of V, at least 3.
        k_max: largest Sym-degree computed.

    Returns:
        GradedHom whose (i,k) cells hold dominant GL(V) weights with
        multiplicities.
    """
    if d < 3:
        raise ValueError("need d >= 3")
    if k_max < 0:
        raise ValueError("k_max must be non-negative")
    alpha = _check_collection_weight(alpha, d, "alpha")
    alpha2 = _check_collection_weight(alpha2, d, "alpha2")
    gh = GradedHom("X", d, k_max, {"alpha": list(alpha), "alpha2": list(alpha2)})
    for k in range(k_max + 1):
        for mu, lam, mult, ok in _sym_fiber_terms(alpha, alpha2, k, d):
            if not ok:
                raise RuntimeError(
                    "weight positivity certificate violated at %r" % (mu,)
                )
            res = bott(2, d, mu)
            if res.zero:
                continue
            lam_d = lam + (0,) * (d - 2)
            for nu, c in littlewood_richardson(
                lam_d, dual_v_weight(res.rep), d
            ).items():
                gh.add(res.degree, k, nu, mult * c)
    return gh


def rhom_X0_graded(a, b, d, k_max):
    """Graded RHom_X0 between the line-bundle generators l^a and l^b duals.

    The Sym-degree k piece is the cohomology of O(b+k-a) on PV tensored
    with Sym^k V; only degree-0 cells can occur since b+k-a > -d on the
    allowed domain.
    """
    a = int(a)
    b = int(b)
    if not (0 <= a <= d - 2 and 0 <= b <= d - 2):
        raise ValueError("need 0 <= a,b <= d-2, got a=%d b=%d d=%d" % (a, b, d))
    if k_max < 0:
        raise ValueError("k_max must be non-negative")
    gh = GradedHom("X0", d, k_max, {"a": a, "b": b})
    sym_k_v = lambda k: (k,) + (0,) * (d - 1)
    for k in range(k_max + 1):
        m = b + k - a
        res = bott(1, d, (m,))
        if res.zero:
            continue
        for nu, c in littlewood_richardson(
            sym_k_v(k), dual_v_weight(res.rep), d
        ).items():
            gh.add(res.degree, k, nu, c)
    return gh


def _rhom_X_degrees_only(alpha, alpha2, d, k_max):
    """Dimensions of the graded RHom_X cells, skipping GL(V) decomposition.

    Returns (dims, certificate_ok) with dims a dict (i,k) -> dimension.
    """
    dims = {}
    certificate_ok = True
    for k in range(k_max + 1):
        for mu, lam, mult, ok in _sym_fiber_terms(alpha, alpha2, k, d):
            certificate_ok = certificate_ok and ok
            res = bott(2, d, mu)
            if res.zero:
                continue
            lam_d = lam + (0,) * (d - 2)
            dim = mult * weyl_dimension(lam_d, d) * weyl_dimension(res.rep, d)
            key = (res.degree, k)
            dims[key] = dims.get(key, 0) + dim
    return dims, certificate_ok


def tilting_check(space, d, k_max):
    """Check vanishing of all higher graded Ext between generator summands.

    space "X" runs over ordered pairs from the rank-2 collection with the
    degrees-only pipeline and also confirms the weight-positivity
    certificate on every intermediate term; space "X0" runs over the
    pairs of line generators. cells_checked counts evaluated (pair, k)
    columns.
    """
    if d < 3:
        raise ValueError("need d >= 3")
    if space not in ("X", "X0"):
        raise ValueError("space must be X or X0, got %r" % (space,))
    failures = []
    cells = 0
    certificate = None
    if space == "X":
        certificate = True
        coll = kapranov_collection(2, d)
        pairs = [(x, y) for x in coll for y in coll]
        for alpha, alpha2 in pairs:
            dims, cert_ok = _rhom_X_degrees_only(alpha, alpha2, d, k_max)
            certificate = certificate and cert_ok
            cells += k_max + 1
            for (i, k), dim in sorted(dims.items()):
                if i > 0 and dim > 0:
                    failures.append(
                        {
                            "pair": [list(alpha), list(alpha2)],
                            "k": k,
                            "degree": i,
                            "dim": dim,
                        }
                    )
    else:
        gens = range(d - 1)
        pairs = [(a, b) for a in gens for b in gens]
        for a, b in pairs:
            cells += k_max + 1
            for k in range(k_max + 1):
                res = bott(1, d, (b + k - a,))
                if not res.zero and res.degree > 0:
                    failures.append(
                        {
                            "pair": [a, b],
                            "k": k,
                            "degree": res.degree,
                            "dim": weyl_dimension(res.rep, d),
                        }
                    )
    report = {
        "pass": not failures,
        "space": space,
        "d": d,
        "k_max": k_max,
        "pairs_checked": len(pairs),
        "cells_checked": cells,
        "failures": failures,
    }
    if certificate is not None:
        report["certificate"] = certificate
    return report


def fullness_check(a, b, d, k_max):
    """Representation-level containment of the X0 Hom cells in the X ones.

    The pair (a,b) of line generators corresponds to the pair
    (Sym^a S-dual, Sym^b S-dual) upstairs, i.e. alpha=(a,0) and
    alpha2=(b,0). For every Sym-degree k the GL(V) weights of the X0
    cell (with multiplicity) must embed into the degree-0 X cell; a
    multiplicity deficit is a structured failure.
    """
    a = int(a)
    b = int(b)
    if not (0 <= a <= d - 2 and 0 <= b <= d - 2):
        raise ValueError("need 0 <= a,b <= d-2, got a=%d b=%d d=%d" % (a, b, d))
    down = rhom_X0_graded(a, b, d, k_max)
    up = rhom_X_graded((a, 0), (b, 0), d, k_max)
    failures = []
    for k in range(k_max + 1):
        target = down.cell(0, k)
        have = up.cell(0, k)
        for w, m in sorted(target.items()):
            if have.get(w, 0) < m:
                failures.append(
                    {
                        "a": a,
                        "b": b,
                        "k": k,
                        "weight": format_weight(w),
                        "need": m,
                        "have": have.get(w, 0),
                    }
                )
    return {
        "pass": not failures,
        "a": a,
        "b": b,
        "d": d,
        "k_max": k_max,
        "cells_checked": k_max + 1,
        "failures": failures,
    }


def fullness_check_all(d, k_max):
    """Run fullness_check over every generator pair 0 <= a,b <= d-2."""
    reports = []
    for a in range(d - 1):
        for b in range(d - 1):
            reports.append(fullness_check(a, b, d, k_max))
    return {
        "pass": all(r["pass"] for r in reports),
        "d": d,
        "k_max": k_max,
        "pairs_checked": len(reports),
        "cells_checked": sum(r["cells_checked"] for r in reports),
        "failures": [f for r in reports for f in r["failures"]],
    }
