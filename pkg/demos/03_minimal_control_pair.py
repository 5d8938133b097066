# Two generators suffice for universal control in any dimension: a diagonal
# drift with sqrt-prime phases plus one nearest-neighbor coupling chain.
# The chain makes the coupling graph a path through every level, and the
# drift's spectrum is independent by construction.

import numpy as np

from uqc import Algebra, check_universality, lie_closure, minimal_pair

for d in range(2, 7):
    pair = minimal_pair(Algebra("su", d))
    verdict = check_universality(pair)
    report = lie_closure(pair)
    print(
        f"su({d}): {verdict.status.value:9s}  closure {report.dimension:3d}"
        f" / {report.target_dimension:3d}"
    )

# the chain coefficients are free as long as every one is nonzero
pair = minimal_pair(Algebra("su", 4), coefficients=[2.0, -1.0, 0.5])
print("\ncustom chain su(4):", check_universality(pair).status.value)
print(np.round(pair.generators[1].matrix.real, 2))

# an imaginary-symmetric chain couples the same levels, for hardware whose
# couplings are Hermitian-symmetric
pair = minimal_pair(Algebra("su", 4), style="sym")
print("\nsymmetric-style chain su(4):", check_universality(pair).status.value)
print(np.round(pair.generators[1].matrix.imag, 2))
