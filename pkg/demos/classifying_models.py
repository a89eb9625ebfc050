"""Truncated classifying models over the chain and grid index categories.

Both families are finite in every truncation: the point of the workbench is
that contractibility can only be certified through a window that shrinks as
the truncation parameter does, and the reports say exactly how far they
checked.
"""

from orbifunctor.cellspaces import classifying_model, contractibility_check, cellular_chain_complex
from orbifunctor.chainplex import homology
from orbifunctor.exact_abelian import format_group

for kind, K in (("N", 6), ("RF", 4)):
    model = classifying_model(kind, K)
    counts = {n: len(model.cells.get(n, ())) for n in range(model.dimension + 1)}
    print(f"model {kind} at truncation {K}:")
    print(f"  dimension {model.dimension}, cells per degree {counts}")
    print(f"  certified valid through degree {model.truncation_valid}")
    rep = contractibility_check(model, model.truncation_valid)
    print(f"  contractibility through {rep.checked_through}: "
          f"{'PASS' if rep.passed else 'FAIL'}")
    for obj, verdict in sorted(rep.verdicts.items())[:4]:
        print(f"    object {obj}: {verdict}")
    if len(rep.verdicts) > 4:
        print(f"    ... {len(rep.verdicts) - 4} more objects")
    print()

# Past the valid window the checker refuses outright instead of reporting a
# misleading pass or fail on degrees the truncation never promised.
model = classifying_model("RF", 4)
try:
    contractibility_check(model, model.truncation_valid + 1)
except ValueError as err:
    print("RF pushed past its window:", err)

# The cellular chains of a model evaluate to an honest based complex at each
# index object; homology at the smallest object shows the truncation edge.
c = cellular_chain_complex(classifying_model("N", 3))
obj = c.base.objects[0]
ev = c.evaluate_at(obj)
print(f"\nN model K=3, chains at object {obj}:",
      [format_group(homology(ev, p)) for p in range(4)])
