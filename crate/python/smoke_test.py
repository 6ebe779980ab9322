"""Smoke test for the conformable_py extension module.

Build the extension first:
    cargo build -p conformable-py --release
then run from the repository root:
    python3 python/smoke_test.py
"""

import glob
import math
import os
import shutil
import sys


def locate_extension():
    import sysconfig

    suffix = sysconfig.get_config_var("EXT_SUFFIX")
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    for profile in ("release", "debug"):
        for lib in glob.glob(os.path.join(root, "target", profile, "libconformable_py.so")):
            dest = os.path.join(os.path.dirname(lib), "conformable_py" + suffix)
            if not os.path.exists(dest) or os.path.getmtime(lib) > os.path.getmtime(dest):
                shutil.copyfile(lib, dest)
            return os.path.dirname(dest)
    raise SystemExit("extension not built; run: cargo build -p conformable-py --release")


sys.path.insert(0, locate_extension())
import conformable_py as cp  # noqa: E402


def close(a, b, tol, what):
    assert abs(a - b) < tol, f"{what}: {a} vs {b}"


# natural-variable round trip
for alpha in (0.25, 0.5, 1.0):
    for x in (0.2, 0.7, 1.3):
        close(cp.from_natural(cp.to_natural(x, alpha), alpha), x, 1e-12, "round trip")

# classical limit of the eigenbasis
b = cp.JBasis(1.0, 3)
close(b.eval(1, 0.5), math.sqrt(2.0), 1e-10, "J1(0.5) at alpha=1")
close(b.eigenvalue(2), 4.0 * math.pi**2, 1e-9, "E2 at alpha=1")
close(b.zero_position(3, 1), 1.0 / 3.0, 1e-10, "zero 1/3")

# fractional basis sanity
b5 = cp.JBasis(0.5, 4)
assert b5.alpha == 0.5 and b5.max_n == 4
assert b5.eval(1, 0.0) == 0.0 and b5.eval(1, 1.0) == 0.0
stats = b5.moment_stats(1)
assert 0.0 < stats["mean"] < 1.0 and stats["std_dev"] > 0.0

# transform catalog closed form vs quadrature
assert "exp_decay" in cp.catalog_names()
closed, quad = cp.laplace_entry("exp_decay", 0.5, 0.5, 1.0)
close(closed, quad, 1e-6 * abs(quad), "exp_decay laplace")

# susy box: constant V1, ladder shift, classical W at alpha=1
box = cp.SusyBox(0.75)
close(box.v1(0.3), box.v1(0.7), 1e-9, "V1 constant")
close(box.ladder2(0), box.ladder1(1), 1e-12, "ladder shift")
w1 = cp.SusyBox(1.0)
close(w1.w(0.5), 0.0, 1e-10, "W(1/2) at alpha=1")

# perturbation scans
rows = cp.wall_asymmetry([0.5, 1.0])
assert rows[0][3] > 0.0, "left wall should dominate at alpha=1/2"
assert abs(rows[1][3]) < 1e-8, "alpha=1 is symmetric"
ranking = cp.phantom_ranking(0.5)
assert ranking[0][0] == "x^(alpha/2)", ranking

print("smoke test passed")
