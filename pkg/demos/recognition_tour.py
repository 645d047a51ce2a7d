"""Tour of the recogniser: certificates for members, evidence for non-members.

Runs the bundled fixtures and a few classic families through recognize(),
replays every certificate back into a graph, and prints the stuck subgraph
for the graphs that fall outside the class.
"""

from oatgraph import chi_omega, classic, fixture, recognize, replay, FIXTURE_NAMES


def describe(name, g):
    out = recognize(g)
    if out.is_oat:
        chi, omega = chi_omega(out.tree)
        same = replay(out.tree) == g
        print(f"{name:24s} n={g.n:3d} m={g.edge_count:3d}  member, chi = omega = {chi}, "
              f"certificate replays: {same}")
    else:
        print(f"{name:24s} n={g.n:3d} m={g.edge_count:3d}  NOT a member; "
              f"stuck on vertices {sorted(out.stuck_vertices)}")
    return out


print("== bundled fixtures ==")
for name in FIXTURE_NAMES:
    fx = fixture(name)
    out = describe(name, fx.graph)
    assert out.is_oat == fx.expected_oat

print()
print("== classic families ==")
for family, param in [("path", 7), ("cycle", 4), ("cycle", 5), ("cycle", 6),
                      ("complete", 5), ("complete_bipartite_minus_matching", 4)]:
    describe(f"{family}({param})", classic(family, param))

# Odd holes are the textbook obstruction: C5 is irreducible outright, and a
# C6 gets stuck after stripping what little structure it has.
print()
print("== inside a rejection ==")
out = recognize(classic("cycle", 6))
verts = out.stuck_vertices
edges = sorted((verts[u], verts[v]) for u, v in out.stuck.edges())
print(f"C6 stuck subgraph: vertices {sorted(verts)}, edges {edges}")
print("no vertex is removable: the subgraph is connected, co-connected,")
print("and has neither a comparable pair nor a clique attachment.")
