"""Initial matchings of equivariant ideals and the move-closure question.

Every polynomial in one of the twisted algebras has a leading monomial,
and the matching of that monomial's off-diagonal support is its initial
matching.  Collecting these over an ideal gives its initial set.  For
most ideals the initial set is an up-set for the growth-and-swap order
(so closure under moves is a cheap certificate of correct leading-term
bookkeeping) — but not for all of them; the quadratic-block ideal on
eight labels below is the standard counterexample, and no way of
breaking ties between matchings repairs it.
"""

from tca_lab.algebra import (EquivariantIdeal, VariableSystem, initial_set,
                             verify_move_closure)
from tca_lab.ideal_io import parse_ideal_text
from tca_lab.matchings import fmt_matching, fmt_move

DET2 = """
flavor: symmetric
rank: 4
1 * x[1,1] * x[2,2] - 1 * x[1,2] * x[1,2]
"""

system, gens = parse_ideal_text(DET2)
ideal = EquivariantIdeal.from_generators(system, gens, label="corner-det")
print("generator:", "1 * x[1,1] * x[2,2] - 1 * x[1,2] * x[1,2]")
print("initial matchings up to degree 2:")
for g in initial_set(ideal, 2, 4):
    print("  ", fmt_matching(g))

res = verify_move_closure(ideal, 3, 4)
print(f"move closure up to degree 3: initial set {res.initial_size}, "
      f"moves checked {res.moves_checked}, violations {len(res.violations)}")
assert res.closed

# The one that cannot be fixed.  Generate the ideal from the isotypic
# block of the doubled row (2) on eight labels and watch a single swap
# escape the initial set.
big = VariableSystem("symmetric", 8)
block = EquivariantIdeal.isotypic(big, (2,), label="quadratic-block")
res = verify_move_closure(block, 4, 8)
print(f"\nquadratic block on 8 labels, degree <= 4: "
      f"initial set {res.initial_size}, violations {len(res.violations)}")
for g, mv, img in res.violations:
    print(f"  {fmt_matching(g)} --{fmt_move(mv)}--> {fmt_matching(img)} "
          "left the initial set")
print("this single violation survives every choice of total order; "
      "the README works out why")
