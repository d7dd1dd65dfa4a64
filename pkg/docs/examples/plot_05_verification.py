"""
Brute-force verification
========================

Every combinatorial identity used by the library can be re-checked from
scratch at small rank.
"""

from twistfiber.oracle import run_checks

reports = run_checks(max_rank=3)
for r in reports:
    status = "ok" if r.ok else f"{len(r.violations)} violations"
    print(f"{r.check:<20} {r.system:<3} {r.twist}  {r.cases:>6} cases  {status}")

# the dichotomy check reports overlapping cases as information
for r in reports:
    if r.check == "dichotomy" and r.extra["overlaps"]:
        print(r.system, r.twist, "overlaps:", r.extra["overlaps"], r.extra["first_overlap"])
