# How small do exponentiation steps have to be?  Group elements reachable
# by small steps stay inside the connected identity component; anything in
# a disconnected permutation component sits at operator distance >= sqrt(2)
# from the identity.  For a skew-Hermitian X with eigenphases lambda_k,
# ||exp(eps X) - I|| = 2 max_k |sin(eps lambda_k / 2)|, which stays below
# sqrt(2) exactly for eps < pi / (2 ||X||).

import numpy as np

from uqc import (
    Algebra,
    Generator,
    GeneratorSet,
    epsilon_bound,
    epsilon_bound_per_generator,
    matrix_exp,
    operator_norm,
)

drift = Generator(np.diag(1j * np.sqrt([2.0, 3.0, 5.0])), "drift")
rot = np.zeros((3, 3), dtype=complex)
rot[0, 1], rot[1, 0] = 1.0, -1.0
system = GeneratorSet(Algebra("u", 3), (drift, Generator(rot, "rot12")))

eps_max = epsilon_bound(system)
print(f"set-level bound: eps_max = {eps_max:.6f}  (= pi / (2*sqrt(5)))")
for gen, b in zip(system.generators, epsilon_bound_per_generator(system)):
    print(f"  {gen.label}: ||X|| = {operator_norm(gen.matrix):.4f}, eps_max = {b:.4f}")

print("\ndistance to identity vs step size (drift):")
for frac in (0.25, 0.5, 0.9, 0.99, 1.0, 1.2):
    U = matrix_exp(drift.matrix, frac * eps_max)
    dist = operator_norm(U - np.eye(3))
    if dist < np.sqrt(2.0) - 1e-9:
        marker = "< sqrt(2)"
    elif dist < np.sqrt(2.0) + 1e-9:
        marker = "= sqrt(2), the boundary"
    else:
        marker = "> sqrt(2)"
    print(f"  eps = {frac:4.2f} * eps_max -> {dist:.6f}  {marker}")
# the bound is sharp: the distance hits sqrt(2) exactly at eps_max and
# keeps growing beyond it
