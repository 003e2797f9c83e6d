"""ε-net certificates and the ε-approximation constructions."""

import sys
from pathlib import Path
sys.path.insert(0, str(Path(__file__).resolve().parent.parent.parent))

from fuzzy_metric import IntervalUnion, RealLine, StepFuzzySet, make_family, sup_metric
from fuzzy_metric.compactness import (
    flatten_below,
    greedy_eps_net,
    project_to_grid,
    total_boundedness_report,
    truncate_above,
)

line = RealLine()
cert = greedy_eps_net(line, IntervalUnion.closed(0, 1), 0.3)
print(cert, cert.centers, "verified:", cert.verified)

# the snc members have unbounded cuts below their platform level
snc = make_family("snc", resolution=100)
report = total_boundedness_report(snc.members(5), levels=[0.25], eps=0.1)
print(report.label, "totally bounded:", report.totally_bounded, "failures:", report.failures())

v = StepFuzzySet(line, [0.5, 1.0], [IntervalUnion.closed(0, 1), IntervalUnion.closed(0.4, 0.6)])
w = project_to_grid(v, [0, 0.25, 0.5, 0.75, 1], eps=0.2)
print("projection d_inf =", sup_metric(v, w))
print("flattened:", flatten_below(v, 0.2))
print("truncated:", truncate_above(v, 0.2))
