# Build block-repetition maps from C + M_2 into M_3 and test them on random elements.
import numpy as np

from specshrink import (
    build_block_map,
    check_preserving,
    check_shrinking,
    evaluate_map,
    prepare_source,
    sma_algebra,
    truncated_polynomial_algebra,
)
from specshrink.sma import block_diagonal_quasi_order, to_matrix

rho = block_diagonal_quasi_order([1, 2])
A = sma_algebra(rho)
src = prepare_source(A)

covering = build_block_map(src, [3], [(1, 1)])     # a (+) X  ->  diag(a, X)
collapsing = build_block_map(src, [3], [(3, 0)])   # a (+) X  ->  diag(a, a, a)

a = A.element(np.array([2.0, 1.0, 0.5, -1.0, 3.0]), exact=False)
print(to_matrix(rho, a).real)
print(evaluate_map(covering, a).real)
print(evaluate_map(collapsing, a).real)

for name, spec in [("covering", covering), ("collapsing", collapsing)]:
    s = check_shrinking(A, spec, 300)
    p = check_preserving(A, spec, 300)
    print(f"{name}: shrinking {s.verdict} (max defect {s.max_defect:.1e}), preserving {p.verdict}")

# general algebras go through the quotient by the radical
B = truncated_polynomial_algebra(3)
spec = build_block_map(prepare_source(B), [2], [(2,)])
b = B.element(np.array([1.5 + 1j, 4.0, -2.0]), exact=False)
print("C[x]/(x^3) element 1.5+i + 4t - 2t^2 maps to\n", evaluate_map(spec, b))
