"""Why a single classical law can never violate the bounds.

Walks through the three inequality forms on a few hand-picked laws, then
fuzzes the whole simplex to show the margins stay non-negative.
"""

import numpy as np

from belltest import (
    JointDistribution3,
    bell_covariance_check,
    random_joint,
    symmetrize,
    wigner_conditional_check,
    wigner_joint_check,
)
from belltest.search import _conditional_triple


def show(name, joint):
    bell = bell_covariance_check(joint)
    joint_form = wigner_joint_check(joint)
    cond = wigner_conditional_check(_conditional_triple(symmetrize(joint)))
    print(f"{name:32s} covariance {bell.margin:+.4f}   "
          f"joint {joint_form.margin:+.4f}   conditional(sym) {cond.margin:+.4f}")


print("margins per law (negative would mean violation)\n")
show("perfectly correlated", JointDistribution3.from_atoms({(1, 1, 1): 0.5, (-1, -1, -1): 0.5}))
show("uniform / independent", JointDistribution3.uniform())
show("point mass on (+,+,-)", JointDistribution3.point_mass((1, 1, -1)))

rng = np.random.default_rng(0)
n = 20_000
worst = min(
    min(
        bell_covariance_check(j := random_joint(rng)).margin,
        wigner_joint_check(j).margin,
        wigner_conditional_check(_conditional_triple(symmetrize(j))).margin,
    )
    for _ in range(n)
)
print(f"\nworst margin over {n} random laws: {worst:+.2e}  (never below zero)")
