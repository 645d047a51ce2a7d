"""Greedy deconstruction: decide membership and emit a build-tree certificate.

The recogniser peels a graph apart by trying, in a fixed order, the inverse
of each construction operation: split connected components, split complement
components, delete a comparable vertex, detach a pendant clique.  Success
yields a build tree over the original labels; failure yields the irreducible
induced subgraph it got stuck on.

The common-neighbour matrix A@A drives the comparable-pair scan.  Recomputing
it from scratch at every level would cost an extra factor n, so each
deconstruction move patches it in O(n^2) instead; the four patch rules are
encoded in a2_after_step.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._util import recursion_room
from .buildtree import BuildTree, CliqueAttach, Comparable, Join, Leaf, Union
from .errors import StepConsistencyError
from .graph import (
    AdjSquare,
    Graph,
    adjacency_square,
    clique_attachment,
    complement_components,
    connected_components,
    find_comparable_pair,
)


@dataclass(frozen=True)
class DeconstructionStep:
    """One deconstruction move, in the current graph's labelling.

    keep/removed partition the current vertex set.  For a comparable move,
    neighbours is the removed vertex's neighbourhood; for a clique move,
    anchor is the vertex the clique was attached to.
    """

    op: str
    keep: tuple[int, ...]
    removed: tuple[int, ...]
    anchor: int | None = None
    neighbours: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "keep", tuple(self.keep))
        object.__setattr__(self, "removed", tuple(self.removed))
        object.__setattr__(self, "neighbours", tuple(self.neighbours))
        if self.op not in ("union", "join", "comparable", "clique"):
            raise StepConsistencyError(f"unknown step op {self.op!r}")
        if not self.keep:
            raise StepConsistencyError("step must keep at least one vertex")
        if any(b <= a for a, b in zip(self.keep, self.keep[1:])):
            raise StepConsistencyError(f"kept vertices must be strictly ascending: {self.keep}")
        if not self.removed:
            raise StepConsistencyError("step must remove at least one vertex")
        if len(set(self.removed)) != len(self.removed):
            raise StepConsistencyError(f"removed vertices have duplicates: {self.removed}")
        if set(self.keep) & set(self.removed):
            raise StepConsistencyError("kept and removed vertices overlap")
        if self.op == "comparable":
            if len(self.removed) != 1:
                raise StepConsistencyError("comparable step removes exactly one vertex")
            if len(set(self.neighbours)) != len(self.neighbours):
                raise StepConsistencyError("comparable neighbours have duplicates")
            if not set(self.neighbours) <= set(self.keep):
                raise StepConsistencyError("comparable neighbours must all be kept")
        else:
            if self.neighbours:
                raise StepConsistencyError(f"{self.op} step takes no neighbour list")
        if self.op == "clique":
            if self.anchor is None:
                raise StepConsistencyError("clique step needs an anchor")
            if self.anchor not in self.keep:
                raise StepConsistencyError(f"clique anchor {self.anchor} must be kept")
        elif self.anchor is not None:
            raise StepConsistencyError(f"{self.op} step takes no anchor")


def a2_after_step(a2: AdjSquare, step: DeconstructionStep) -> AdjSquare:
    """Patch the common-neighbour matrix across one deconstruction move.

    Union: removed vertices see nothing in the kept part, plain submatrix.
    Join: every removed vertex was adjacent to every kept one, so every
    entry loses exactly |removed| common neighbours.
    Comparable: only pairs inside the removed vertex's neighbourhood lose
    it as a common neighbour (diagonal included: those degrees drop by 1).
    Clique: each clique vertex touched only the clique and the anchor, so
    only the anchor's degree entry drops, by |Q|.
    """
    n = a2.n
    if set(step.keep) | set(step.removed) != set(range(n)):
        raise StepConsistencyError(
            f"step does not partition 0..{n - 1}: keep={step.keep} removed={step.removed}"
        )
    keep = np.asarray(step.keep, dtype=np.intp)
    sub = a2.matrix[np.ix_(keep, keep)].copy()
    if step.op == "join":
        sub -= len(step.removed)
    elif step.op == "comparable":
        pos = np.searchsorted(keep, np.asarray(step.neighbours, dtype=np.intp))
        sub[np.ix_(pos, pos)] -= 1
    elif step.op == "clique":
        z = int(np.searchsorted(keep, step.anchor))
        sub[z, z] -= len(step.removed)
    sub.setflags(write=False)
    return AdjSquare(sub)


@dataclass(frozen=True)
class RecognitionOutcome:
    """Either a build-tree certificate or the subgraph no operation applied to."""

    tree: BuildTree | None
    stuck: Graph | None
    stuck_vertices: tuple[int, ...] | None
    a2_checks: int = 0

    @property
    def is_oat(self) -> bool:
        return self.tree is not None


class _Stuck(Exception):
    def __init__(self, sub: Graph, labels: tuple[int, ...]):
        self.sub = sub
        self.labels = labels


def recognize(g: Graph, *, verify_a2: bool = False) -> RecognitionOutcome:
    """Decide membership; the positive answer carries a replayable tree.

    verify_a2 recomputes the common-neighbour matrix from scratch after
    every incremental patch and fails loudly on any drift; the outcome's
    a2_checks counts how many comparisons ran.
    """
    checks = [0] if verify_a2 else None
    try:
        with recursion_room(4 * g.n + 2000):
            tree = _deconstruct(g, tuple(range(g.n)), adjacency_square(g), checks)
    except _Stuck as s:
        return RecognitionOutcome(
            tree=None,
            stuck=s.sub,
            stuck_vertices=s.labels,
            a2_checks=0 if checks is None else checks[0],
        )
    return RecognitionOutcome(
        tree=tree, stuck=None, stuck_vertices=None, a2_checks=0 if checks is None else checks[0]
    )


def _maybe_check(sub: Graph, sub_a2: AdjSquare, checks: list[int] | None):
    if checks is None:
        return
    fresh = adjacency_square(sub)
    if not np.array_equal(fresh.matrix, sub_a2.matrix):
        raise StepConsistencyError("incrementally patched A@A drifted from the recomputed matrix")
    checks[0] += 1


def _descend(
    cur: Graph,
    labels: tuple[int, ...],
    a2: AdjSquare,
    step: DeconstructionStep,
    checks: list[int] | None,
) -> BuildTree:
    sub_a2 = a2_after_step(a2, step)
    sub = cur.induced(step.keep)
    _maybe_check(sub, sub_a2, checks)
    return _deconstruct(sub, tuple(labels[x] for x in step.keep), sub_a2, checks)


def _fold(
    binary,
    opname: str,
    cur: Graph,
    labels: tuple[int, ...],
    a2: AdjSquare,
    parts: tuple[tuple[int, ...], ...],
    checks: list[int] | None,
) -> BuildTree:
    # Parts arrive ordered by smallest vertex; fold left-associatively.
    all_verts = set(range(cur.n))
    trees = []
    for part in parts:
        removed = tuple(sorted(all_verts - set(part)))
        step = DeconstructionStep(opname, part, removed)
        trees.append(_descend(cur, labels, a2, step, checks))
    out = trees[0]
    for t in trees[1:]:
        out = binary(out, t)
    return out


def _deconstruct(
    cur: Graph, labels: tuple[int, ...], a2: AdjSquare, checks: list[int] | None
) -> BuildTree:
    n = cur.n
    if n == 1:
        return Leaf(labels[0])
    parts = connected_components(cur)
    if len(parts) > 1:
        return _fold(Union, "union", cur, labels, a2, parts, checks)
    co_parts = complement_components(cur)
    if len(co_parts) > 1:
        return _fold(Join, "join", cur, labels, a2, co_parts, checks)
    pair = find_comparable_pair(cur, a2)
    if pair is not None:
        u, v = pair
        nbrs = cur.neighbours(u)
        keep = tuple(x for x in range(n) if x != u)
        step = DeconstructionStep("comparable", keep, (u,), neighbours=nbrs)
        child = _descend(cur, labels, a2, step, checks)
        return Comparable(child, labels[u], labels[v], tuple(labels[x] for x in nbrs))
    found = clique_attachment(cur)
    if found is not None:
        z, q = found
        qset = set(q)
        keep = tuple(x for x in range(n) if x not in qset)
        step = DeconstructionStep("clique", keep, q, anchor=z)
        child = _descend(cur, labels, a2, step, checks)
        return CliqueAttach(child, labels[z], tuple(labels[x] for x in q))
    raise _Stuck(cur, labels)
