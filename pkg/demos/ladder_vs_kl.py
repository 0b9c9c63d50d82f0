"""Compare ladder induction with the KL columns for every n-regular label of size 6."""

import time

from fockkl.fock import gplus_vector
from fockkl.llt import ladder_vector, llt_gplus_oracle
from fockkl.partitions import conjugate, is_n_regular, partitions

for n in (2, 3):
    t = time.perf_counter()
    agree = 0
    labels = [mu for mu in partitions(6) if is_n_regular(mu, n)]
    for mu in labels:
        mc = conjugate(mu)
        agree += llt_gplus_oracle(mu, n) == gplus_vector(mc, n, max(2, mc.length))
    print(f"n={n}: {agree}/{len(labels)} columns agree ({time.perf_counter() - t:.2f}s)")

print("\nraw ladder vector of (5) at n = 2, before reduction:")
print(" ", ladder_vector((5,), 2))
print("canonical basis vector:")
print(" ", llt_gplus_oracle((5,), 2))
