"""
Norm growth versus gauge positivity
===================================

The family generated by k-times-scaled unit vectors separates two notions
of "small at every scale".  As the dimension N grows, the set's Euclidean
norm sup explodes like N^2 -- the sets are eventually enormous -- yet the
gauge of every fixed direction stays strictly positive (1/k for the k-th
indicator), so shrinking copies of the set still pinch down to the origin
alone.  Boundedness fails in the limit; gauge positivity never does.
"""

from noarb import build_counterexample, counterexample_report, minkowski

print(f"{'N':>4} {'sup |x|^2':>10} {'sup-norm':>9} {'min gauge':>10} {'pinches to 0':>13}")
for n in (1, 2, 3, 5, 10, 25, 100):
    report = counterexample_report(n)
    print(f"{n:>4} {str(report.sup_squared_l2):>10} {str(report.sup_norm_linf):>9} "
          f"{str(report.min_indicator_gauge):>10} {str(report.zero_set_trivial):>13}")

# the k-th indicator costs exactly 1/k to dominate: e_k = (1/k) * (k e_k)
B = build_counterexample(6)
print("\nindicator gauges at N = 6:")
for k, e in enumerate(B.space.indicators(), start=1):
    print(f"  gauge(e_{k}) = {minkowski(B, e)}")
