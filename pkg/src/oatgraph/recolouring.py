"""Constructive recolouring over a build tree.

Three layers. rename moves between two colourings with the same colour
classes, touching each vertex at most twice. to_canonical walks a build tree
and drives any proper colouring to the canonical one, touching each vertex
at most 2n times. find_path concatenates a forward transformation with a
reversed one to connect two arbitrary proper colourings.

Every single-vertex step flows through one emit closure, which carries two
kinds of hooks while the tree walk is inside the relevant node.  A mirror
keeps a comparable vertex locked to its anchor: whenever the anchor moves,
the twin immediately follows.  A guard shields an attached clique: when the
anchor is about to take colour c, the one clique vertex holding c is evicted
to a colour free on its closed neighbourhood first.  Routing everything
through emit is what keeps nested hooks correct when inner renames touch an
outer hook's anchor.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, NamedTuple, Sequence

from ._util import recursion_room
from .buildtree import (
    BuildTree,
    CliqueAttach,
    Comparable,
    Join,
    Leaf,
    Union,
    canonical_assignment,
    chi_omega,
    chi_omega_map,
    replay,
)
from .colouring import Colouring, Palette, colouring_from_json, colouring_to_json
from .errors import ColouringError, PaletteError, PaletteTooSmallError, PartitionError
from .graph import Graph


class Step(NamedTuple):
    v: int
    c: int


@dataclass(frozen=True)
class RecolouringSequence:
    """A start colouring plus single-vertex recolouring steps."""

    initial: Colouring
    steps: tuple[Step, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(Step(int(v), int(c)) for v, c in self.steps))

    def __len__(self) -> int:
        return len(self.steps)

    def final(self) -> Colouring:
        cur = list(self.initial.assignment)
        for v, c in self.steps:
            cur[v] = c
        return Colouring(tuple(cur), self.initial.palette)

    def recolour_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for v, _ in self.steps:
            counts[v] = counts.get(v, 0) + 1
        return counts


@dataclass(frozen=True)
class SequenceReport:
    valid: bool
    length: int
    max_recolourings: int
    first_invalid_step: int | None = None
    reason: str | None = None


def _rename_plan(
    classes: Sequence[Sequence[int]],
    current: Sequence[int],
    target: Sequence[int],
    palette: Palette,
    emit: Callable[[int, int], None],
):
    """Move class i from colour current[i] to target[i], ≤ 2 moves per vertex.

    Requires pairwise-distinct current colours, pairwise-distinct targets,
    both inside palette, and |palette| > len(classes); the headroom colour
    breaks cycles of mutually blocked classes.  Class j blocks class i when
    it holds i's target, and since holders and wanters are unique per colour
    the blocking relation is a disjoint set of paths and cycles.
    """
    k = len(classes)
    current = list(current)
    holder = {current[i]: i for i in range(k)}
    pending = {i for i in range(k) if current[i] != target[i]}
    wants = {target[i]: i for i in pending}

    def move(i: int, c: int) -> int:
        for v in classes[i]:
            emit(v, c)
        freed = current[i]
        del holder[freed]
        holder[c] = i
        current[i] = c
        pending.discard(i)
        return freed

    # Unblocked classes first: moving one frees its old colour, which may
    # unblock the class wanting exactly that colour, and so on down the path.
    for start in sorted(pending):
        i: int | None = start
        while i is not None and i in pending and target[i] not in holder:
            freed = move(i, target[i])
            i = wants.get(freed)
    # Only cycles remain.  Park the smallest class of a cycle on the smallest
    # colour absent from the whole current colouring, walk the rest of the
    # cycle, then land the parked class on its now-free target.
    while pending:
        i0 = min(pending)
        spare = min(c for c in palette if c not in holder)
        freed = move(i0, spare)
        j = wants.get(freed)
        while j is not None and j != i0 and j in pending:
            freed = move(j, target[j])
            j = wants.get(freed)
        move(i0, target[i0])


def rename(alpha: Colouring, beta: Colouring, S: Palette) -> RecolouringSequence:
    """Transform alpha into beta when they induce the same colour classes."""
    if alpha.n != beta.n:
        raise PartitionError(f"colourings cover {alpha.n} and {beta.n} vertices")
    part_a = alpha.colour_classes()
    part_b = beta.colour_classes()
    if set(part_a.values()) != set(part_b.values()):
        raise PartitionError("colourings do not share their colour classes")
    for col in set(alpha.assignment) | set(beta.assignment):
        if col not in S:
            raise PaletteError(f"colour {col} outside working palette {S.colours}")
    classes = sorted(part_a.values())
    if len(S) <= len(classes):
        raise PaletteTooSmallError(
            f"renaming {len(classes)} classes needs more than {len(S)} colours"
        )
    state = list(alpha.assignment)
    steps: list[Step] = []

    def emit(v: int, c: int):
        if state[v] != c:
            state[v] = c
            steps.append(Step(v, c))

    _rename_plan(
        classes,
        [alpha[members[0]] for members in classes],
        [beta[members[0]] for members in classes],
        S,
        emit,
    )
    return RecolouringSequence(Colouring(alpha.assignment, S), tuple(steps))


def to_canonical(
    t: BuildTree, alpha: Colouring, S: Palette, C: Palette | Sequence[int]
) -> RecolouringSequence:
    """Drive alpha to the canonical colouring over C, ≤ 2n moves per vertex.

    The walk mirrors the tree.  Union sides are independent.  Join sides are
    first confined to disjoint sub-palettes (the side already using more than
    its share of colours goes first, freeing one up for the other), made
    canonical locally, then one rename lands the prescribed palette split.
    A comparable vertex snaps to its anchor and mirrors it afterwards.  An
    attached clique is guarded while the rest is processed, then renamed onto
    the colours the canonical rule assigns it.
    """
    g = replay(t)
    if alpha.n != g.n:
        raise ColouringError(f"colouring covers {alpha.n} vertices, graph has {g.n}")
    if not alpha.is_proper(g):
        raise ColouringError("starting colouring is not proper")
    for col in set(alpha.assignment):
        if col not in S:
            raise PaletteError(f"colour {col} outside working palette {S.colours}")
    chi, _ = chi_omega(t)
    if len(S) < chi + 1:
        raise PaletteTooSmallError(f"need at least {chi + 1} working colours, got {len(S)}")
    cpal = C if isinstance(C, Palette) else Palette(tuple(C))
    if len(cpal) != chi:
        raise PaletteError(f"target palette needs exactly {chi} colours, got {len(cpal)}")
    stray = [c for c in cpal if c not in S]
    if stray:
        raise PaletteError(f"target colours {stray} outside working palette {S.colours}")

    chiom = chi_omega_map(t)
    state = list(alpha.assignment)
    steps: list[Step] = []
    mirrors: list[tuple[int, int]] = []
    guards: list[tuple[int, tuple[int, ...], Palette]] = []

    def emit(v: int, c: int):
        if state[v] == c:
            return
        # Innermost guard first: evict the clique vertex that clashes with
        # the colour its anchor is about to take.  Only neighbours inside
        # the guard's own scope constrain the evasion colour; clashes with
        # enclosing scopes resolve through their own guards and mirrors.
        for z, q_verts, avail in reversed(guards):
            if v != z:
                continue
            clash = [q for q in q_verts if state[q] == c]
            if clash:
                q = min(clash)
                blocked = {state[x] for x in q_verts if x != q} | {state[z], c}
                emit(q, min(x for x in avail if x not in blocked))
        state[v] = c
        steps.append(Step(v, c))
        # Outermost mirror first: a twin follows its anchor, cascading.
        for anchor, twin in mirrors:
            if anchor == v:
                emit(twin, c)

    def join_case(node: Join, s_node: Palette, c_node: tuple[int, ...]):
        chi_l = chiom[id(node.left)][0]
        chi_r = chiom[id(node.right)][0]
        used_l = {state[v] for v in node.left.verts}
        used_r = {state[v] for v in node.right.verts}
        sides = [(node.left, chi_l), (node.right, chi_r)]
        if len(used_l) == chi_l and len(used_r) > chi_r:
            sides.reverse()
        for idx, (side, chi_side) in enumerate(sides):
            used = sorted({state[v] for v in side.verts})
            s_side = set(used)
            if idx == 1 or len(used) == chi_side:
                # a colour no vertex of the whole join currently holds
                s_side.add(min(x for x in s_node if x not in {state[v] for v in node.verts}))
            walk(side, Palette(tuple(sorted(s_side))), tuple(used[:chi_side]))
        # Both sides are canonical over side-local palettes, so the subtree
        # already has the canonical colour classes; one rename fixes names.
        targets = canonical_assignment(node, c_node)
        by_colour: dict[int, list[int]] = {}
        for v in sorted(node.verts):
            by_colour.setdefault(targets[v], []).append(v)
        classes = sorted(by_colour.values())
        _rename_plan(
            classes,
            [state[members[0]] for members in classes],
            [targets[members[0]] for members in classes],
            s_node,
            emit,
        )

    def walk(node: BuildTree, s_node: Palette, c_node: tuple[int, ...]):
        if isinstance(node, Leaf):
            emit(node.v, c_node[0])
        elif isinstance(node, Union):
            walk(node.left, s_node, c_node[: chiom[id(node.left)][0]])
            walk(node.right, s_node, c_node[: chiom[id(node.right)][0]])
        elif isinstance(node, Join):
            join_case(node, s_node, c_node)
        elif isinstance(node, Comparable):
            if state[node.u] != state[node.v]:
                emit(node.u, state[node.v])
            mirrors.append((node.v, node.u))
            walk(node.child, s_node, c_node)
            mirrors.pop()
        else:
            guards.append((node.z, node.Q, s_node))
            walk(node.child, s_node, c_node[: chiom[id(node.child)][0]])
            guards.pop()
            cstar = state[node.z]
            fill = [c for c in c_node if c != cstar][: len(node.Q)]
            order = sorted(range(len(node.Q)), key=lambda i: node.Q[i])
            _rename_plan(
                [(node.Q[i],) for i in order],
                [state[node.Q[i]] for i in order],
                [fill[i] for i in order],
                s_node.without(cstar),
                emit,
            )

    with recursion_room(4 * g.n + 2000):
        walk(t, S, tuple(cpal.colours))
    return RecolouringSequence(Colouring(alpha.assignment, S), tuple(steps))


def _pre_colours(seq: RecolouringSequence) -> list[int]:
    """The colour each step's vertex held just before that step."""
    cur = list(seq.initial.assignment)
    pres = []
    for v, c in seq.steps:
        pres.append(cur[v])
        cur[v] = c
    return pres


def find_path(
    t: BuildTree, alpha: Colouring, beta: Colouring, S: Palette
) -> RecolouringSequence:
    """A proper-step sequence from alpha to beta of length ≤ 4n².

    Route both endpoints to the canonical colouring over the first chi
    colours of S, then traverse the second sequence backwards, each reversed
    step restoring the colour its vertex held before the original step.
    Mutually undoing steps at the junction are peeled off.
    """
    chi, _ = chi_omega(t)
    if len(S) < chi + 1:
        raise PaletteTooSmallError(f"need at least {chi + 1} working colours, got {len(S)}")
    c_root = S.prefix(chi)
    fwd = to_canonical(t, alpha, S, c_root)
    bwd = to_canonical(t, beta, S, c_root)
    fsteps = list(fwd.steps)
    fpre = _pre_colours(fwd)
    back = [Step(s.v, p) for s, p in zip(bwd.steps, _pre_colours(bwd))]
    back.reverse()
    cut = 0
    while fsteps and cut < len(back):
        nxt = back[cut]
        if fsteps[-1].v != nxt.v or fpre[len(fsteps) - 1] != nxt.c:
            break
        fsteps.pop()
        cut += 1
    return RecolouringSequence(Colouring(alpha.assignment, S), tuple(fsteps + back[cut:]))


def verify_sequence(g: Graph, seq: RecolouringSequence) -> SequenceReport:
    """Replay a sequence against a graph, checking every step.

    Valid means: the initial colouring is proper, every step changes exactly
    one vertex to a different palette colour, and properness holds after
    every step.  The report carries the first offending step index (None if
    the initial colouring itself is at fault).
    """
    counts: dict[int, int] = {}

    def report(valid: bool, idx: int | None = None, reason: str | None = None) -> SequenceReport:
        worst = max(counts.values(), default=0)
        return SequenceReport(valid, len(seq.steps), worst, idx, reason)

    if seq.initial.n != g.n:
        return report(False, None, f"initial covers {seq.initial.n} vertices, graph has {g.n}")
    if not seq.initial.is_proper(g):
        return report(False, None, "initial colouring is not proper")
    pal = seq.initial.palette
    cur = list(seq.initial.assignment)
    for idx, (v, c) in enumerate(seq.steps):
        if not 0 <= v < g.n:
            return report(False, idx, f"vertex {v} out of range")
        if c not in pal:
            return report(False, idx, f"colour {c} outside palette {pal.colours}")
        if cur[v] == c:
            return report(False, idx, f"step does not change vertex {v}")
        cur[v] = c
        counts[v] = counts.get(v, 0) + 1
        if any(cur[w] == c for w in g.neighbours(v)):
            return report(False, idx, f"recolouring vertex {v} to {c} breaks properness")
    return report(True)


def sequence_to_json(seq: RecolouringSequence) -> dict[str, Any]:
    return {
        "initial": colouring_to_json(seq.initial),
        "steps": [{"v": s.v, "c": s.c} for s in seq.steps],
    }


def sequence_from_json(obj: Any) -> RecolouringSequence:
    if not isinstance(obj, dict):
        raise ColouringError(f"sequence JSON must be an object, got {type(obj).__name__}")
    extra = set(obj) - {"initial", "steps"}
    if extra:
        raise ColouringError(f"unexpected sequence keys: {sorted(extra)}")
    if "initial" not in obj or "steps" not in obj:
        raise ColouringError("sequence JSON needs 'initial' and 'steps'")
    initial = colouring_from_json(obj["initial"])
    raw = obj["steps"]
    if not isinstance(raw, list):
        raise ColouringError("sequence steps must be a list")
    steps = []
    for i, item in enumerate(raw):
        if not isinstance(item, dict) or set(item) != {"v", "c"}:
            raise ColouringError(f"step {i} must be an object with keys 'v' and 'c'")
        v, c = item["v"], item["c"]
        if not isinstance(v, int) or not isinstance(c, int):
            raise ColouringError(f"step {i} fields must be integers")
        steps.append(Step(v, c))
    return RecolouringSequence(initial, tuple(steps))
