"""
Exact optima and the sandwich
=============================

For tiny cubes branch and bound finds the true maximum; everything else has to
fit around it: constructions below, upper bounds above.
"""

from trifree import Params, SearchLimits, max_triangle_free_exact, sandwich_report

for n in (3, 4, 5):
    res = max_triangle_free_exact(Params(n, 2))
    print(f"n={n} r=2: maximum {res.best_size} (optimal={res.optimal}, {res.nodes} nodes)")
    print("   witness:", " ".join(res.witness.strings()))

print()
for n, r in [(4, 2), (5, 2), (6, 4), (9, 2)]:
    rep = sandwich_report(Params(n, r), SearchLimits(max_nodes=50_000))
    tag = "optimal" if rep.oracle.optimal else "incumbent"
    print(f"n={n} r={r}: constructions {rep.constructions}, oracle {rep.oracle.best_size} ({tag}), "
          f"upper {rep.uppers}, consistent={rep.ok}")
