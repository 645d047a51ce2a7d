"""Walk one recolouring end to end and watch the budgets hold.

Builds a small member graph, draws two random proper colourings over a
palette one larger than the chromatic number, and connects them step by
step.  Along the way: the canonical colouring both halves aim for, the
verified sequence, and the per-vertex recolouring counts against their
2n and 4n^2 ceilings.
"""

from oatgraph import (
    Palette,
    canonical_colouring,
    chi_omega,
    find_path,
    random_colouring,
    random_oat,
    replay,
    to_canonical,
    verify_sequence,
)

tree = random_oat(8, 3)
g = replay(tree)
chi, omega = chi_omega(tree)
print(f"graph: n={g.n}, m={g.edge_count}, chi = omega = {chi}")

# One spare colour beyond the chromatic number is all the walk needs.
S = Palette.default(chi + 1)
alpha = random_colouring(g, S, seed=1)
beta = random_colouring(g, S, seed=2)
print(f"palette {S.colours}")
print(f"alpha   {alpha.assignment}")
print(f"beta    {beta.assignment}")

gamma = canonical_colouring(tree, S.prefix(chi))
print(f"canonep {gamma.assignment}   (the shared waypoint, first {chi} colours only)")

print()
print("== each half walks to the canonical colouring ==")
for label, start in (("alpha", alpha), ("beta", beta)):
    half = to_canonical(tree, start, S, S.prefix(chi))
    counts = half.recolour_counts()
    busiest = max(counts.values(), default=0)
    print(f"{label}: {len(half)} steps, busiest vertex moved {busiest} times "
          f"(ceiling {2 * g.n})")
    assert half.final().assignment == gamma.assignment

print()
print("== the joined path, after junction cancellation ==")
seq = find_path(tree, alpha, beta, S)
report = verify_sequence(g, seq)
print(f"{len(seq)} steps, valid: {report.valid}, ceiling {4 * g.n * g.n}")
for i, (v, c) in enumerate(seq.steps):
    print(f"  step {i:2d}: vertex {v} -> colour {c}")
assert seq.final().assignment == beta.assignment
print("lands exactly on beta.")
