# Wedderburn profiles of a few small algebras, computed two ways where possible.
import numpy as np

from specshrink import (
    QuasiOrder,
    condensation,
    direct_sum_algebra,
    sma_algebra,
    truncated_polynomial_algebra,
    wedderburn_profile,
)
from specshrink.sma import random_quasi_order

# upper triangular 3x3: three 1x1 blocks and a 3-dimensional radical
rho = QuasiOrder.from_pairs(3, [(i, j) for i in range(3) for j in range(i, 3)])
A = sma_algebra(rho)
prof = wedderburn_profile(A)
print("upper triangular 3x3:", prof.to_json())

# C[x]/(x^4) is local: one component of size 1, everything else radical
print("C[x]/(x^4):", wedderburn_profile(truncated_polynomial_algebra(4)).to_json())

# a semisimple algebra has no radical
print("M_1 + M_2 + M_2:", wedderburn_profile(direct_sum_algebra([1, 2, 2])).to_json())

# For structural matrix algebras the profile can also be read off the quasi-order.
# The trace form and the graph condensation are independent, so agreement is a real check.
rng = np.random.default_rng(7)
for n in (3, 4, 5):
    rho = random_quasi_order(n, rng)
    via_trace = sorted(wedderburn_profile(sma_algebra(rho)).ks)
    via_graph = sorted(condensation(rho).block_sizes)
    print(f"n={n}: trace form {via_trace}  condensation {via_graph}")
