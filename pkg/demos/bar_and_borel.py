# Group homology from the truncated bar resolution, then the Borel-versus-
# quotient comparison for actions with and without fixed points.

from orbifunctor.fincat import FinGroup
from orbifunctor.catmod import constant_module, COVARIANT
from orbifunctor.chainplex import (
    tensor_complex_over_cat,
    cat_complex_concentrated,
    homology,
)
from orbifunctor.cellspaces import (
    bar_resolution_truncated,
    borel_and_quotient,
    borel_valid_through,
    point_space,
    free_orbit_points,
)
from orbifunctor.exact_abelian import FpAbGroup, format_group
from orbifunctor.verify import borel_vs_quotient_check

Z = FpAbGroup.free(1)


def group_homology_table(group, name, through):
    # Tensor the bar resolution down against constant Z coefficients.  The
    # truncation has to exceed the degrees we want to read off.  Generator
    # counts grow like |G|^n, so keep the depth modest for larger groups.
    bar = bar_resolution_truncated(group, through + 1)
    coeff = cat_complex_concentrated(constant_module(bar.base, Z, COVARIANT), 0)
    c = tensor_complex_over_cat(bar, coeff)
    row = [format_group(homology(c, p)) for p in range(through + 1)]
    print(f"H_*({name}; Z) through degree {through}: {row}")


group_homology_table(FinGroup.cyclic(2), "Z/2", 5)
group_homology_table(FinGroup.cyclic(3), "Z/3", 2)
group_homology_table(FinGroup.symmetric(3), "S_3", 1)

# Borel construction on a fixed point: the homotopy quotient of a point is
# the classifying space, so its projection to the honest quotient (again a
# point) has kernel equal to positive-degree group homology.
g = FinGroup.cyclic(2)
pt = point_space(g)
K = 6
bq = borel_and_quotient(pt, K)
print("\nBorel model on a point, reliable through degree", borel_valid_through(pt, K))

report = borel_vs_quotient_check(g, pt, K)
for p in sorted(report.per_degree):
    ker, coker, ann, ok = report.per_degree[p]
    print(f"  degree {p}: kernel {format_group(ker)}, cokernel {format_group(coker)}, "
          f"annihilator {ann}, within bound: {ok}")
print("verdict:", "PASS" if report.passed else "FAIL")

# On a free action the projection is an equivalence, so kernel and cokernel
# vanish in every reliable degree.
free = free_orbit_points(g)
free_report = borel_vs_quotient_check(g, free, K)
print("\nfree orbit: all kernels and cokernels trivial:", free_report.passed)
