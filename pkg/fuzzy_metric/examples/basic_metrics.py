"""Four metrics between two step fuzzy sets on the real line."""

import sys
from pathlib import Path
sys.path.insert(0, str(Path(__file__).resolve().parent.parent.parent))

from fuzzy_metric import IntervalUnion, RealLine, StepFuzzySet, metric_report

line = RealLine()

# a trapezoid-like set: [0, 3] at level 0.5, [1, 2] at level 1
u = StepFuzzySet(line, [0.5, 1.0], [IntervalUnion.closed(0, 3), IntervalUnion.closed(1, 2)])
v = StepFuzzySet.singleton(line, 1.5)

report = metric_report(u, v, ps=(1.0, 2.0))
print(f"d_inf  = {report.d_inf:.4f}")
print(f"H_send = {report.h_send:.4f}")
print(f"H_end  = {report.h_end:.4f}")
print(f"H_0    = {report.h_zero:.4f}")
for p, value in sorted(report.d_p.items()):
    print(f"d_{p:g}    = {value:.4f}")
print("inequality chain:", "ok" if report.ok else report.violations)
