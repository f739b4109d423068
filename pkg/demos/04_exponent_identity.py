# The eigenvalue multiplicities of phi(S diag(lam) S^-1) reproduce the family counts.
import numpy as np

from specshrink import build_block_map, exponent_profile, prepare_source, sma_algebra
from specshrink.sma import condensation, quasi_order_with_blocks

rng = np.random.default_rng(3)
rho = quasi_order_with_blocks([2, 1, 1], rng, density=1.0)
A = sma_algebra(rho)
print("classes:", condensation(rho).classes())

family = [(1, 2, 0), (0, 1, 3)]
src = prepare_source(A)
targets = [sum(k * x for k, x in zip(src.ks, f)) for f in family]
spec = build_block_map(src, targets, family)
ep = exponent_profile(rho, spec, trials=20, A=A)
# exponents are indexed by the original points of the quasi-order
for j, ell in enumerate(ep.exponents):
    print(f"target block {j} (size {targets[j]}): exponents {ell}")
print("trial invariant:", ep.trial_invariant, " class constant:", ep.class_constant, " matches:", ep.matches_family)
