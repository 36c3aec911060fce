"""
Lower and upper bounds side by side
===================================

All closed forms for a handful of instances, plus the per-level profile that
the level-sum upper bound adds up.
"""

from trifree import Params, bound_report, upper_bound_level_sum

print(f"{'n':>3} {'r':>2} {'fixed':>8} {'antipodal':>9} {'L_prob':>12} {'L_asym':>12} "
      f"{'U_r2':>10} {'U_level':>10}")
for n, r in [(6, 2), (9, 2), (12, 2), (12, 4), (16, 4), (20, 6), (30, 10), (40, 20)]:
    rep = bound_report(Params(n, r))
    anti = rep.antipodal[1] if rep.antipodal else "-"
    print(f"{n:>3} {r:>2} {rep.fixed_bit:>8} {anti!s:>9} {rep.lower_probabilistic:>12.2f} "
          f"{rep.lower_asymptotic:>12.4g} {rep.upper_r2 or '-':>10} {rep.upper_level_sum or '-':>10}")

total, profile = upper_bound_level_sum(Params(8, 4))
print("\nlevel profile for n=8 r=4:")
for k, (value, rule) in enumerate(zip(profile.per_level, profile.rules)):
    print(f"  level {k}: <= {value:3d}  ({rule})")
print("  total", total)
