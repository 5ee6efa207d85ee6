# Beat points can be removed without changing the homotopy type; stripping
# them all leaves the core, the smallest space of the same homotopy type.

from finito import (
    FinitePoset,
    beat_points,
    core,
    is_contractible,
    is_homotopy_equivalent,
    sphere_model,
)

# Any space with a maximum deformation-retracts to a point.
cone = FinitePoset.from_cover_pairs(4, [(3, 1), (1, 0), (2, 0)], labels="abcd")
trace = core(cone)
for rep in trace.removed:
    print(f"remove {cone.label(rep.element)}"
          f" ({rep.kind} beat point, witness {cone.label(rep.witness)})")
print("core size:", trace.final.n)
print("contractible:", is_contractible(cone))
print()

# The 4-point circle model has no beat points at all: it is already minimal.
circle = sphere_model(1)
print("circle model beat points:", beat_points(circle))
print("circle contractible:", is_contractible(circle))

# Homotopy equivalence reduces to comparing cores.
chain = FinitePoset.chain(5)
print("5-chain ~ point:", is_homotopy_equivalent(chain, FinitePoset.antichain(1)))
print("circle ~ chain:", is_homotopy_equivalent(circle, chain))

# Gluing a beat point onto the circle model does not change its type.
decorated = FinitePoset.from_cover_pairs(
    5, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 4)]
)
print("decorated circle ~ circle:", is_homotopy_equivalent(decorated, circle))
