"""Regenerate the golden CLI outputs under tests/golden/.

Each golden is the JSON envelope of one CLI invocation with the timing
block removed, dumped with sorted keys so comparisons are byte-wise.
Run from the repository root:

    python3 tools/gen_goldens.py
"""

import io
import json
import os
import sys
from contextlib import redirect_stdout

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from grasstwist.cli import main  # noqa: E402

GOLDEN_COMMANDS = {
    "lr_21_10_n2": ["lr", "--lam", "2,1", "--mu", "1,0", "--n", "2"],
    "pieri_20_j1_n2": ["pieri", "--lam", "2,0", "--j", "1", "--n", "2"],
    "cauchy_k2_d4": ["cauchy", "--k", "2", "--d", "4"],
    "bott_r1_d4_m-4": ["bott", "--r", "1", "--d", "4", "--alpha", "-4"],
    "bott_r2_d4_tangent": ["bott", "--r", "2", "--d", "4", "--alpha", "1,0",
                           "--beta", "0,-1"],
    "collection_d4": ["collection", "--d", "4"],
    "exceptional_d4": ["exceptional-check", "--d", "4"],
    "geometry_d3": ["geometry", "--d", "3"],
    "geometry_d4": ["geometry", "--d", "4"],
    "geometry_d5": ["geometry", "--d", "5"],
    "koszul_k1_d4": ["koszul", "--k", "1", "--d", "4"],
    "adjoint_L_10_d4": ["adjoint", "--d", "4", "--op", "L", "--alpha", "1,0"],
    "adjoint_basis_d4": ["adjoint", "--d", "4", "--basis"],
    "rf_d3_k0": ["rf", "--d", "3", "--k", "0"],
    "rf_d4_k1": ["rf", "--d", "4", "--k", "1"],
    "rf_d5_k2": ["rf", "--d", "5", "--k", "2"],
    "spherical_d4": ["spherical-r1", "--d", "4"],
    "gram_d3": ["gram", "--d", "3"],
    "gram_d4": ["gram", "--d", "4"],
    "gram_d5": ["gram", "--d", "5"],
    "kclass_fk1_d4": ["kclass", "--d", "4", "--fk", "1"],
    "kclass_32_d4": ["kclass", "--d", "4", "--s-weight", "3,2"],
    "twist_k_d3": ["twist-k", "--d", "3"],
    "twist_k_d4": ["twist-k", "--d", "4"],
    "twist_k_d5": ["twist-k", "--d", "5"],
    "pairing_d4_o_f0": ["pairing", "--d", "4", "--x", "e:0,0", "--y", "f:0",
                        "--kmax", "4"],
    "rhom_x0_d4_a0_b1": ["rhom", "--space", "X0", "--d", "4", "--a", "0",
                         "--b", "1", "--kmax", "4"],
    "tilting_x_d3": ["tilting-check", "--space", "X", "--d", "3"],
    "fullness_d4_all": ["fullness-check", "--d", "4", "--all", "--kmax", "10"],
}


def run_envelope(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(argv)
    if code != 0:
        raise SystemExit("command %r exited with %d" % (argv, code))
    envelope = json.loads(buf.getvalue())
    envelope.pop("timing", None)
    return envelope


def main_gen():
    out_dir = os.path.join(os.path.dirname(__file__), "..", "tests", "golden")
    os.makedirs(out_dir, exist_ok=True)
    for name, argv in sorted(GOLDEN_COMMANDS.items()):
        envelope = run_envelope(argv)
        path = os.path.join(out_dir, name + ".json")
        with open(path, "w") as fh:
            json.dump(envelope, fh, indent=2, sort_keys=True)
            fh.write("\n")
        print("wrote", os.path.relpath(path))


if __name__ == "__main__":
    main_gen()
