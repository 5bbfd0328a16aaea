"""
Exact invariants of small extremal graphs
=========================================

Chromatic number, odd girth, the two essentiality numbers and the
triviality radius for a few classic triangle-free graphs.
"""

import math

from sysbounds.families import gen_cycle, gen_general_mycielski, gen_groetzsch, gen_mycielski, gen_petersen
from sysbounds.graph import girth, odd_girth
from sysbounds.invariants import (
    chromatic_number,
    essentiality,
    forest_essentiality,
    max_ball_size,
    triviality_radius,
)

graphs = {
    "C5": gen_cycle(5),
    "Petersen": gen_petersen(),
    "Groetzsch": gen_groetzsch(),
    "Mycielskian of Groetzsch": gen_mycielski(gen_groetzsch()),
    "3-level Mycielskian of C7": gen_general_mycielski(gen_cycle(7), 3),
}

for name, g in graphs.items():
    chi = chromatic_number(g)
    og = odd_girth(g)
    k = (og - 1) // 2
    ess = essentiality(g)
    print(f"{name}: n={g.n} chi={chi} girth={girth(g)} odd girth={og}")
    # essentiality counts parts inducing bipartite graphs; it tracks chi exactly
    print(f"  essentiality {ess.n} (ceil(chi/2) - 1 = {math.ceil(chi / 2) - 1})")
    print(f"  forest essentiality {forest_essentiality(g).n}")
    # every ball of radius k - 1 is bipartite, and no larger radius works
    print(f"  triviality radius {triviality_radius(g)} (k - 1 = {k - 1})")
    print(f"  largest radius-{k - 1} ball: {max_ball_size(g, k - 1)[0]} vertices")
