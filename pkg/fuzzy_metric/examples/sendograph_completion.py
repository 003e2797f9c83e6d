"""A Cauchy sequence of sendograph images whose limit is not an image."""

import sys
from pathlib import Path
sys.path.insert(0, str(Path(__file__).resolve().parent.parent.parent))

from fuzzy_metric import arrow_forward, is_arrow_image, make_family, send_metric, sup_metric

family = make_family("nce")
w = family.limit

for n in (1, 2, 5, 10, 50):
    u = family.member(n)
    print(f"n={n:>3}  H_send(->u_n, w) = {send_metric(arrow_forward(u), w):.4f}")

print("d_inf(u_1, u_2) =", sup_metric(family.member(1), family.member(2)))
print("w is an arrow image:", is_arrow_image(w))
