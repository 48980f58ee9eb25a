# Slab coefficients as configuration, and what the seeds decide.
#
# The built-in slab coefficients stop at degree 5.  Degrees beyond that
# need a JSON config file; this script writes one, loads it, and also
# shows that the associativity system itself cannot detect a wrong seed:
# the equations are linear, so wrong seeds give a wrong but internally
# consistent table.  Only the seed values tie the table to geometry.

import json
import tempfile
from fractions import Fraction
from pathlib import Path

from cubicgw import (
    compute_up_to,
    default_slab_table,
    load_slab_file,
    seed_top,
    solve_degree,
)

print("Built-in coefficients cover degrees 1..5:")
slab = default_slab_table()
for d in range(1, 6):
    print(f"  n({d}) = {slab.coefficient(d)}")

try:
    slab.coefficient(6)
except Exception as err:
    print("  n(6):", err)

print()
print("A config file extends (or overrides) the defaults:")
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "slab.json"
    path.write_text(json.dumps({"slab": {"6": "25346"}}))
    extended = load_slab_file(path)
    print(f"  after loading {{'slab': {{'6': '25346'}}}}: n(6) = {extended.coefficient(6)}")
    print(f"  seed_top(6) = {seed_top(6, extended)}")

print()
print("Seed sensitivity at degree 2:")
table1 = compute_up_to(1)
for seeds in [(Fraction(25), Fraction(1)), (Fraction(0), Fraction(0))]:
    report = solve_degree(2, table1, seeds)
    n24 = report.solution[next(u for u in report.solution if u.key == "N(2,4)")]
    print(
        f"  seeds {tuple(map(str, seeds))}: consistent={report.consistent}, "
        f"N(2,4) = {n24}"
    )
print("Both runs are consistent; only the first matches the true counts.")

print()
print("With the true seeds the whole degree-by-degree pipeline gives:")
table = compute_up_to(3)
print("  N(8,1) =", table.two_point_value(8, 1))
print("  N(1,8) =", table.two_point_value(1, 8))
print("  ratio  =", table.two_point_value(8, 1) / table.two_point_value(1, 8), "= (3*3-1)^2")
