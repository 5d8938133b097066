# Two coupled qubits with always-on ZZ coupling and local X drives.  With
# only one local drive the system splits into two dynamically disconnected
# pairs of basis states; adding the second drive restores full
# controllability up to global phase (su(4), dimension 15).

import numpy as np

from uqc import (
    Algebra,
    Generator,
    GeneratorSet,
    build_coupling_graph,
    check_general_direction,
    check_universality,
    lie_closure,
    phases_of,
)

X = np.array([[0.0, 1.0], [1.0, 0.0]])
Z = np.array([[1.0, 0.0], [0.0, -1.0]])
I2 = np.eye(2)

w1, w2, J = np.sqrt(2.0), np.sqrt(3.0), np.sqrt(5.0)
H_drift = w1 * np.kron(Z, I2) + w2 * np.kron(I2, Z) + J * np.kron(Z, Z)

drift = Generator(-1j * H_drift.astype(complex), "drift")
drive1 = Generator(-1j * np.kron(X, I2).astype(complex), "X on qubit 1")
drive2 = Generator(-1j * np.kron(I2, X).astype(complex), "X on qubit 2")

algebra = Algebra("su", 4)

# the drift is diagonal in the product basis |00>, |01>, |10>, |11>; check
# that its spectrum is (heuristically) rationally independent
print("drift phases:", np.round(phases_of(drift), 4))
print("independence:", check_general_direction(phases_of(drift), algebra).status.value)

reduced = GeneratorSet(algebra, (drift, drive1))
graph = build_coupling_graph(reduced)
print("\nwith one drive, edges:", sorted(graph.edges))
verdict = check_universality(reduced)
print("verdict:", verdict.status.value, "components:", verdict.components)
# -> |00>,|10> and |01>,|11> never mix: flipping qubit 1 alone cannot
#    connect the two parities of qubit 2

full = GeneratorSet(algebra, (drift, drive1, drive2))
verdict = check_universality(full)
print("\nwith both drives:", verdict.status.value)

report = lie_closure(full)
print(f"closure dimension {report.dimension} = 4^2 - 1: fully controllable")
