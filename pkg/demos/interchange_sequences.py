"""
Interchange criterion on graded sequence races
==============================================

Two nondecreasing degree sequences feed a graded coefficient profile; the
criterion decides from the tail behavior alone whether the induced comparison
of products is forced to be surjective, forced not to be, or undecidable
without more of the tails.  A finite window check backs up each verdict with
an honest kernel and cokernel computation.
"""

from orbifunctor.exact_abelian import FpAbGroup, format_group
from orbifunctor.verify import GradedSeqSpec, interchange_criterion

UNBOUNDED = "strictly-increasing-unbounded"


def show(name, spec):
    rep = interchange_criterion(spec)
    label = {True: "surjective", False: "not surjective", None: "undecided"}
    print(f"{name}: {label[rep.surjective_symbolic]}")
    print(f"  reason: {rep.reason}")
    print(f"  window {rep.window}: injective={rep.injective} iso={rep.window_iso}")
    print(f"  source {format_group(rep.source)}, target {format_group(rep.target)}")


# The first sequence (the one subtracted in the degree shift) runs away
# while the second stays bounded, so every shift eventually drops below the
# profile floor and the map is forced onto the target.
show("divergent upper, bounded lower", GradedSeqSpec(
    (0, 1), UNBOUNDED, (0, 2), ("bounded-by", 5),
    {0: FpAbGroup.free(1), 3: FpAbGroup.cyclic(2)}, 0, 1))

# A constant upper sequence against a divergent lower one keeps hitting the
# same nonzero profile degree infinitely often.
show("constant upper, divergent lower", GradedSeqSpec(
    (2, 2), ("bounded-by", 2), (0, 1, 3), UNBOUNDED,
    {2: FpAbGroup.cyclic(4)}, 0, 1))

# Both tails diverge: the outcome depends on their relative speeds, which the
# tags do not record, so the symbolic side must refuse to decide.
show("both divergent", GradedSeqSpec(
    (0,), UNBOUNDED, (0,), UNBOUNDED,
    {5: FpAbGroup.cyclic(3)}, 2, 0))

# A bounded-by tag is an upper limit, not a value.  Here every admissible
# continuation of the upper sequence still shifts the lower one onto the
# support, so the verdict is decided even though the tail value is not.
show("bounded tail, all continuations hit", GradedSeqSpec(
    (1, 1), ("bounded-by", 2), (3,), ("bounded-by", 3),
    {1: FpAbGroup.cyclic(2), 2: FpAbGroup.cyclic(2)}, 0, 0))
