"""
Local unitaries move the observables, not the value
===================================================

Rotating each qubit by g_j changes <M_n> unless the observables are rotated
along with it; after conjugating every triple the value is unchanged.
"""

from functools import reduce

import numpy as np

from qmermin.mermin import MerminFamilies, mermin_expectation
from qmermin.statevec import random_state, random_unitary

rng = np.random.default_rng(3)
n = 5
state = random_state(n, rng)
fam = MerminFamilies(rng.normal(size=(n, 3)), rng.normal(size=(n, 3)))
gates = [random_unitary(2, rng) for _ in range(n)]
moved = reduce(np.kron, gates) @ state

print("<M> on phi          ", mermin_expectation(fam, state))
print("<M> on G phi        ", mermin_expectation(fam, moved))
# a_j -> g_j a_j g_j^dagger, i.e. conjugation by g_j^dagger
print("<M''> on G phi      ", mermin_expectation(fam.conjugated([g.conj().T for g in gates]), moved))
