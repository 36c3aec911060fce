"""
Three explicit triangle-free sets
=================================

* antipodal blocks: an independent set (no edge at all) from a prime block length
* fixed bits: weight r/2 vertices with a one in coordinate 1 or 2
* alteration: random sample with triangles broken up afterwards
"""

from trifree import (
    Params, SamplingPlan, alteration_construction, antipodal_construction,
    check_independent, check_triangle_free, fixed_bit_construction,
    format_vertex_set, select_antipodal_prime,
)
from trifree.constructions import antipodal_component

# one antipodal component: blocks 01 and 10, three blocks long
print(format_vertex_set(antipodal_component("01", "10", 3)))

n, r = 9, 2
p = select_antipodal_prime(n, r)
anti = antipodal_construction(n, p, r)
print(f"antipodal n={n} r={r} p={p}: {len(anti)} vertices, "
      f"independent={check_independent(anti, Params(n, r)) is None}")

for n, r in [(6, 4), (9, 4), (12, 6)]:
    params = Params(n, r)
    fb = fixed_bit_construction(params)
    print(f"fixed-bit n={n} r={r}: {len(fb)} vertices, "
          f"triangle-free={check_triangle_free(fb, params) is None}")

params = Params(10, 4)
vs, trace = alteration_construction(params, SamplingPlan(seed=2024))
print(f"alteration n=10 r=4: sampled {trace.sampled_count}, {trace.triangles_found} triangles, "
      f"removed {len(trace.removed)}, kept {trace.final_size}")
