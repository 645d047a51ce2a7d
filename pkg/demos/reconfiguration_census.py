"""Census of small recolouring graphs: size, connectivity, diameter, frozen states.

Enumerates every proper colouring of a few small graphs, links colourings
that differ at one vertex, and tabulates what the resulting state space
looks like.  Ends with the diameter trend on paths and the frozen
colourings of a triangle with no room to move.
"""

from oatgraph import (
    Colouring,
    Palette,
    SizeBudgetError,
    build_reconfig,
    classic,
    is_frozen,
    reconfig_stats,
)

print(f"{'graph':12s} {'k':>2s} {'states':>7s} {'connected':>9s} {'diameter':>8s} {'frozen':>6s}")
rows = [("path", 2, 3), ("path", 4, 3), ("cycle", 4, 3), ("cycle", 5, 3),
        ("complete", 3, 3), ("complete", 3, 4), ("cycle", 4, 2)]
for family, param, k in rows:
    g = classic(family, param)
    stats = reconfig_stats(build_reconfig(g, Palette.default(k)))
    diameter = stats.diameter if stats.diameter is not None else "-"
    print(f"{family}({param}){'':{7 - len(str(param)) - len(family) + 5}s} {k:2d} "
          f"{stats.nodes:7d} {str(stats.connected):>9s} {str(diameter):>8s} "
          f"{stats.frozen_count:6d}")

# Paths stay connected with three colours, but the worst-case walk between
# two colourings stretches as the path grows.
print()
print("diameter of the 3-colouring space of P_n:")
for n in range(2, 7):
    stats = reconfig_stats(build_reconfig(classic("path", n), Palette.default(3)))
    print(f"  n={n}: {stats.diameter}")

# With chi colours on a clique every state is stuck: each colour appears
# exactly once and no vertex has anywhere to go.
print()
k3 = classic("complete", 3)
space = build_reconfig(k3, Palette.default(3))
frozen = [a for a in space.nodes if is_frozen(k3, Colouring(a, space.palette))]
print(f"K3 with 3 colours: {len(frozen)} states, all frozen: "
      f"{len(frozen) == space.node_count}")
for a in frozen:
    print(f"  {a}")

# The state space is exponential, so the builder refuses hopeless requests
# instead of thrashing.
print()
try:
    build_reconfig(classic("path", 40), Palette.default(4))
except SizeBudgetError as exc:
    print(f"refused: {exc}")
