# Three engineered defects and the witnesses the checkers produce for them.
# Each starts from the clean reflection-circle instance, breaks exactly one
# hypothesis, and shows that the failure is localized rather than a generic
# "something went wrong".

from orbifunctor.exact_abelian import format_group
from orbifunctor.verify import (
    instance_z2_reflection,
    check_hypotheses,
    sub_factorization_check,
    with_padded_degree,
    with_inflated_floor,
    twisted_coefficient_system,
)

clean = instance_z2_reflection()
assert check_hypotheses(clean).passed

# Defect 1: a stray free cell one degree above the advertised top dimension.
padded = with_padded_degree(clean)
hyp = check_hypotheses(padded)
print("padded degree:", "caught" if not hyp.a.passed else "MISSED")
print("  offending degrees:", sorted(hyp.a.witnesses))

# Defect 2: the vanishing floor for coefficient homology is claimed one
# degree too high, so honest degree-0 homology becomes a violation.
inflated = with_inflated_floor(clean)
hyp = check_hypotheses(inflated)
print("inflated floor:", "caught" if not hyp.b.passed else "MISSED")
for i, j, q, group in hyp.b.witnesses[:3]:
    print(f"  index {i}, orbit object {set(j)}, degree {q}: {format_group(group)}")

# Defect 3: a sign twist on the free orbit that cannot factor through the
# subgroup category, because both self-maps of the orbit land on the same
# morphism there.
group, family, twisted = twisted_coefficient_system(clean.index_cat)
rep = sub_factorization_check(group, family, twisted)
print("twisted system:", "caught" if not rep.passed else "MISSED")
print(f"  {rep.classes_checked} projected classes checked, "
      f"{len(rep.violations)} disagreement(s)")
i, ref, other, q = rep.violations[0]
print(f"  first witness: index {i}, degree {q}, morphisms {ref} vs {other}")
