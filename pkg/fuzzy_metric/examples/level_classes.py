"""Discontinuity, platform and failure levels of a band fuzzy set."""

import sys
from pathlib import Path
sys.path.insert(0, str(Path(__file__).resolve().parent.parent.parent))

from fuzzy_metric import BandFuzzySet, IntervalUnion, classify_levels

# membership 1 on (0, 1) and 0.6 on [1, 3]
u = BandFuzzySet([(IntervalUnion.open(0, 1), 1.0), (IntervalUnion.closed(1, 3), 0.6)])

report = classify_levels(u)
for name, levels in report.as_dict().items():
    print(f"{name:>2}: {levels!r}")
print("P ⊆ D ⊆ F:", report.chain_holds())
