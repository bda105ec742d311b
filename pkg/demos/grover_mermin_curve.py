"""
Entanglement along a Grover search
==================================

Fit a Mermin operator once at the half-way state phi_ent, then watch its
expectation value rise and fall as Grover iterations proceed.
"""

import numpy as np

from qmermin.grover import GroverProblem, grover_run, phi_ent
from qmermin.mermin import MerminFamilies, constant_family_objective, mermin_expectation, quantum_bound
from qmermin.walk import WalkConfig, ones, optimize_restarts

n = 8

# phi_ent mixes the target |0...0> with the uniform state in equal parts
target = phi_ent(n, 0)
print("overlap with |0...0>:", round(abs(target[0]), 4))

# six parameters: one observable triple a and one a', shared by every qubit
best = optimize_restarts(constant_family_objective(target), WalkConfig(start=ones(6), seed=1), restarts=5)
fam = MerminFamilies.from_constant_params(n, best.argmax)
print("value at phi_ent:", round(best.value, 4), " quantum bound:", round(quantum_bound(n), 4))

# the same operator, evaluated after every iteration
trace = grover_run(GroverProblem(n, {0}))
values = [mermin_expectation(fam, s) for s in trace.end_loop_states]
for k, v in enumerate(values):
    print(f"k={k:2d}  {v:7.4f}  " + "#" * max(0, int(round(10 * v))))

k_max = int(np.argmax(values))
print(f"peak {values[k_max]:.4f} at k={k_max}, k_opt={trace.k_opt}")
