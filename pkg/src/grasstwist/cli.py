"""Command line front end.

Every subcommand prints a single JSON envelope on stdout:

    {"status": ..., "payload": ..., "timing": ..., "versions": ...}

status is "computed" for plain calculations and "pass"/"fail" for
commands that check something. Exit code 0 unless a check fails
mathematically (3) or the input is invalid (2). Output is deterministic
(sorted keys) so runs can be compared byte for byte once the timing
block is stripped.
"""

import argparse
import json
import os
import sys
import time

from . import __version__
from .bott_cohomology import (
    bott,
    bott_result_to_dict,
    kapranov_collection,
    strong_exceptional_check,
)
from .hom_spaces import (
    fullness_check,
    fullness_check_all,
    rhom_X0_graded,
    rhom_X_graded,
    tilting_check,
)
from .k_theory import (
    analyze_twist,
    basis_vector,
    euler_pairing_q,
    f_class,
    gram_matrix,
    reduce_to_basis,
    twist_matrix,
)
from .schur_calculus import (
    FormalSum,
    SchurTerm,
    cauchy_sym,
    format_weight,
    littlewood_richardson,
    parse_weight,
    pieri,
    weyl_dimension,
)
from .twist_engine import (
    adjoint_image_basis,
    apply_L,
    apply_R,
    geometry_stats,
    koszul_terms,
    rf_generator,
    spherical_r1,
    x0_label,
    x0_term_to_dict,
)

DEFAULT_KMAX = 12


def _env_kmax():
    raw = os.environ.get("GRASSTWIST_KMAX")
    if raw is None:
        return DEFAULT_KMAX
    return int(raw)


def _weight_dict_payload(result):
    return [
        {"weight": format_weight(w), "mult": m} for w, m in sorted(result.items())
    ]


# ---------------------------------------------------------------------------
# one handler per subcommand; each returns (status, payload, tsv_lines|None)


def _cmd_lr(args):
    lam = parse_weight(args.lam)
    mu = parse_weight(args.mu)
    result = littlewood_richardson(lam, mu, args.n)
    payload = {
        "lam": format_weight(lam),
        "mu": format_weight(mu),
        "n": args.n,
        "result": _weight_dict_payload(result),
    }
    lines = ["weight\tmult"] + [
        "%s\t%d" % (format_weight(w), m) for w, m in sorted(result.items())
    ]
    return "computed", payload, lines


def _cmd_pieri(args):
    lam = parse_weight(args.lam)
    result = pieri(lam, args.j, args.n)
    payload = {
        "lam": format_weight(lam),
        "j": args.j,
        "n": args.n,
        "result": _weight_dict_payload(result),
    }
    lines = ["weight\tmult"] + [
        "%s\t%d" % (format_weight(w), m) for w, m in sorted(result.items())
    ]
    return "computed", payload, lines


def _cmd_cauchy(args):
    parts = cauchy_sym(args.k, args.d, args.r)
    payload = {
        "k": args.k,
        "d": args.d,
        "r": args.r,
        "partitions": [format_weight(p) for p in parts],
        "total_dim": sum(
            weyl_dimension(p, args.r) * weyl_dimension(p + (0,) * (args.d - len(p)), args.d)
            for p in parts
        ),
    }
    return "computed", payload, [format_weight(p) for p in parts]


def _cmd_bott(args):
    alpha = parse_weight(args.alpha)
    beta = parse_weight(args.beta) if args.beta else None
    res = bott(args.r, args.d, alpha, beta)
    payload = bott_result_to_dict(res, args.d)
    if not res.zero:
        # the human label doubles as the rep field when one exists
        payload["weight"] = format_weight(res.rep)
        payload["rep"] = payload.pop("label", format_weight(res.rep))
    return "computed", payload, None


def _cmd_collection(args):
    weights = kapranov_collection(args.r, args.d)
    payload = {
        "r": args.r,
        "d": args.d,
        "size": len(weights),
        "weights": [format_weight(w) for w in weights],
    }
    return "computed", payload, [format_weight(w) for w in weights]


def _cmd_exceptional_check(args):
    report = strong_exceptional_check(2, args.d)
    return ("pass" if report["pass"] else "fail"), report, None


def _cmd_rhom(args):
    if args.space == "X":
        if args.alpha is None or args.alpha2 is None:
            raise ValueError("rhom on X needs --alpha and --alpha2")
        gh = rhom_X_graded(parse_weight(args.alpha), parse_weight(args.alpha2),
                           args.d, args.kmax)
    else:
        if args.a is None or args.b is None:
            raise ValueError("rhom on X0 needs --a and --b")
        gh = rhom_X0_graded(args.a, args.b, args.d, args.kmax)
    return "computed", gh.to_json_obj(), gh.to_tsv_lines()


def _cmd_tilting_check(args):
    if args.all:
        reports = [tilting_check(sp, args.d, args.kmax) for sp in ("X", "X0")]
        ok = all(r["pass"] for r in reports)
        return ("pass" if ok else "fail"), {"reports": reports}, None
    report = tilting_check(args.space, args.d, args.kmax)
    return ("pass" if report["pass"] else "fail"), report, None


def _cmd_fullness_check(args):
    if args.all:
        report = fullness_check_all(args.d, args.kmax)
    else:
        if args.a is None or args.b is None:
            raise ValueError("fullness-check needs --a and --b, or --all")
        report = fullness_check(args.a, args.b, args.d, args.kmax)
    return ("pass" if report["pass"] else "fail"), report, None


def _cmd_geometry(args):
    stats = geometry_stats(args.d)
    checks = stats["checks"]
    ok = (
        checks["s_consistent"]
        and checks["codim_Im_i_in_tot_S"] == checks["codim_Im_i_expected"]
        and all(v == 0 for v in checks["c1_X"].values())
        and all(v == 0 for v in checks["c1_X0"].values())
    )
    return ("pass" if ok else "fail"), stats, None


def _cmd_koszul(args):
    return "computed", koszul_terms(args.k, args.d).to_json_obj(), None


def _cmd_adjoint(args):
    if args.basis:
        images = adjoint_image_basis(args.d)
        payload = {
            "d": args.d,
            "count": len(images),
            "images": [x0_label(t) for t in images],
        }
        return "computed", payload, [x0_label(t) for t in images]
    if args.alpha is None:
        raise ValueError("adjoint needs --alpha, or --basis")
    alpha = parse_weight(args.alpha)
    op = apply_L if args.op == "L" else apply_R
    images = op(alpha, args.d)
    payload = {
        "d": args.d,
        "op": args.op,
        "alpha": format_weight(alpha),
        "images": [x0_term_to_dict(t) for t in images],
        "zero": not images,
    }
    return "computed", payload, None


def _cmd_rf(args):
    report = rf_generator(args.k, args.d)
    ok = report["middle_vanishing"] and report["det_cancellation"]
    return ("pass" if ok else "fail"), report, None


def _cmd_spherical_r1(args):
    report = spherical_r1(args.d)
    return ("pass" if report["middle_vanishing"] else "fail"), report, None


def _cmd_gram(args):
    gm = gram_matrix(args.d)
    ok = gm["unitriangular"] and gm["det"] in (1, -1)
    lines = ["\t".join(str(x) for x in row) for row in gm["matrix"]]
    return ("pass" if ok else "fail"), gm, lines


def _cmd_kclass(args):
    basis = kapranov_collection(2, args.d)
    if args.fk is not None:
        coords = f_class(args.fk, args.d)
        source = "f_class(%d)" % args.fk
    else:
        if args.s_weight is None:
            raise ValueError("kclass needs --s-weight, or --fk")
        term = SchurTerm(
            s_weight=parse_weight(args.s_weight),
            v_weight=parse_weight(args.v_weight) if args.v_weight else (),
        )
        fs = FormalSum()
        fs.add(term, args.mult)
        coords = reduce_to_basis(fs, args.d)
        source = "reduce"
    payload = {
        "d": args.d,
        "source": source,
        "basis": [format_weight(w) for w in basis],
        "coords": list(coords),
    }
    return "computed", payload, ["\t".join(str(c) for c in coords)]


def _cmd_twist_k(args):
    tm = twist_matrix(args.d)
    analysis = analyze_twist(tm, args.d)
    payload = {
        "d": args.d,
        "s": tm["s"],
        "basis": [format_weight(tuple(w)) for w in tm["basis"]],
        "matrix": tm["matrix"],
        "analysis": analysis,
    }
    lines = ["\t".join(str(x) for x in row) for row in tm["matrix"]]
    return "computed", payload, lines


def _parse_pairing_arg(text, d):
    """Pairing operands: 'e:a1,a2' collection class, 'f:k' Koszul image class."""
    kind, _, rest = text.partition(":")
    if kind == "e":
        return list(basis_vector(parse_weight(rest), d))
    if kind == "f":
        return koszul_terms(int(rest), d).total_formal_sum()
    raise ValueError("expected 'e:a1,a2' or 'f:k', got %r" % text)


def _cmd_pairing(args):
    x = _parse_pairing_arg(args.x, args.d)
    y = _parse_pairing_arg(args.y, args.d)
    chi = euler_pairing_q(x, y, args.d, args.kmax)
    payload = {
        "d": args.d,
        "x": args.x,
        "y": args.y,
        "k_max": args.kmax,
        "chi": chi,
    }
    return "computed", payload, ["\t".join(str(c) for c in chi)]


# ---------------------------------------------------------------------------


def _add_common(p, kmax=False):
    p.add_argument("--format", choices=("json", "tsv", "pretty"), default="json")
    if kmax:
        p.add_argument("--kmax", type=int, default=None,
                       help="top Sym degree (default 12, or GRASSTWIST_KMAX)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="grasstwist",
        description="Exact Schur calculus and twist checks for Gr(2,d)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lr", help="Littlewood-Richardson product")
    p.add_argument("--lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_lr)
    _add_common(p)

    p = sub.add_parser("pieri", help="product with a wedge power")
    p.add_argument("--lam", required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_pieri)
    _add_common(p)

    p = sub.add_parser("cauchy", help="Sym^k of a tensor product, by partitions")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, default=2)
    p.set_defaults(func=_cmd_cauchy)
    _add_common(p)

    p = sub.add_parser("bott", help="cohomology of one equivariant bundle")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", default=None)
    p.set_defaults(func=_cmd_bott)
    _add_common(p)

    p = sub.add_parser("collection", help="exceptional collection weights")
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=_cmd_collection)
    _add_common(p)

    p = sub.add_parser("exceptional-check", help="strong exceptionality of the collection")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=_cmd_exceptional_check)
    _add_common(p)

    p = sub.add_parser("rhom", help="graded Hom cells on a total space")
    p.add_argument("--space", choices=("X", "X0"), required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--alpha", default=None)
    p.add_argument("--alpha2", default=None)
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--b", type=int, default=None)
    p.set_defaults(func=_cmd_rhom)
    _add_common(p, kmax=True)

    p = sub.add_parser("tilting-check", help="no higher Ext among collection pullbacks")
    p.add_argument("--space", choices=("X", "X0"), default="X")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--all", action="store_true", help="check both spaces")
    p.set_defaults(func=_cmd_tilting_check)
    _add_common(p, kmax=True)

    p = sub.add_parser("fullness-check", help="pushforward cells land in the pulled-back collection")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--b", type=int, default=None)
    p.add_argument("--all", action="store_true", help="all generator pairs")
    p.set_defaults(func=_cmd_fullness_check)
    _add_common(p, kmax=True)

    p = sub.add_parser("geometry", help="dimension and Calabi-Yau bookkeeping")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=_cmd_geometry)
    _add_common(p)

    p = sub.add_parser("koszul", help="Koszul terms of the twist kernel")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=_cmd_koszul)
    _add_common(p)

    p = sub.add_parser("adjoint", help="adjoint images of collection classes")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--op", choices=("L", "R"), default="L")
    p.add_argument("--alpha", default=None)
    p.add_argument("--basis", action="store_true",
                   help="list distinct images over the whole collection")
    p.set_defaults(func=_cmd_adjoint)
    _add_common(p)

    p = sub.add_parser("rf", help="composite of restriction and twist kernel on a line power")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_rf)
    _add_common(p)

    p = sub.add_parser("spherical-r1", help="rank-one endomorphism cohomology")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=_cmd_spherical_r1)
    _add_common(p)

    p = sub.add_parser("gram", help="Euler pairing Gram matrix of the collection")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=_cmd_gram)
    _add_common(p)

    p = sub.add_parser("kclass", help="coordinates of a class in the collection basis")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--s-weight", dest="s_weight", default=None)
    p.add_argument("--v-weight", dest="v_weight", default=None)
    p.add_argument("--mult", type=int, default=1)
    p.add_argument("--fk", type=int, default=None,
                   help="class of the twist kernel on the k-th line power")
    p.set_defaults(func=_cmd_kclass)
    _add_common(p)

    p = sub.add_parser("twist-k", help="twist matrix on K-theory with analysis")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=_cmd_twist_k)
    _add_common(p)

    p = sub.add_parser("pairing", help="graded Euler pairing of two classes")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.set_defaults(func=_cmd_pairing)
    _add_common(p, kmax=True)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "kmax", None) is None and hasattr(args, "kmax"):
        args.kmax = _env_kmax()

    start = time.perf_counter()
    try:
        status, payload, tsv_lines = args.func(args)
    except ValueError as exc:
        print("invalid input: %s" % exc, file=sys.stderr)
        return 2
    except (RuntimeError, AssertionError) as exc:
        print("internal consistency failure: %s" % exc, file=sys.stderr)
        return 3
    elapsed = time.perf_counter() - start

    if args.format == "tsv":
        if tsv_lines is None:
            print("tsv output not available for this command", file=sys.stderr)
            return 2
        for line in tsv_lines:
            print(line)
    elif args.format == "pretty":
        print("status: %s" % status)
        print(json.dumps(payload, indent=2, sort_keys=True))
        print("elapsed: %.3fs" % elapsed)
    else:
        envelope = {
            "status": status,
            "payload": payload,
            "timing": {"seconds": round(elapsed, 6)},
            "versions": {
                "package": __version__,
                "k_max": getattr(args, "kmax", _env_kmax()),
            },
        }
        print(json.dumps(envelope, indent=2, sort_keys=True))

    return 3 if status == "fail" else 0


if __name__ == "__main__":
    sys.exit(main())
