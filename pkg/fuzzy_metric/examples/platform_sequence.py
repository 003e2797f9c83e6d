"""Level-wise convergence fails only at a platform level of the limit."""

import sys
from pathlib import Path
sys.path.insert(0, str(Path(__file__).resolve().parent.parent.parent))

from fuzzy_metric import level_decomposition_test, make_family

family = make_family("platform")
diag = level_decomposition_test(family, levels=[i / 10 for i in range(1, 10)], n_max=40)

print(diag.label)
print("H_end:", diag.verdict("h_end"))
for alpha, values in sorted(diag.levels.items()):
    print(f"  level {alpha:.1f}: last distance {values[-1]:g}")
print("non-vanishing levels:", diag.flags["non_vanishing"])
print("of which in P0(u):   ", diag.flags["in_p0"])
