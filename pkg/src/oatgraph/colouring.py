"""Palettes and vertex colourings.

A palette is an ordered tuple of distinct colour labels; order matters
because several algorithms hand out "the first k colours" of a palette.
A colouring assigns one palette colour to every vertex 0..n-1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

import numpy as np

from .errors import ColouringError, PaletteError

if TYPE_CHECKING:
    from .graph import Graph


@dataclass(frozen=True)
class Palette:
    """An ordered set of colour labels."""

    colours: tuple[int, ...]
    _set: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        colours = tuple(int(c) for c in self.colours)
        if not colours:
            raise PaletteError("palette must be non-empty")
        if len(set(colours)) != len(colours):
            raise PaletteError(f"palette has duplicate colours: {colours}")
        object.__setattr__(self, "colours", colours)
        object.__setattr__(self, "_set", frozenset(colours))

    @classmethod
    def default(cls, k: int) -> Palette:
        """The palette 1, 2, ..., k."""
        if k < 1:
            raise PaletteError(f"palette size must be positive, got {k}")
        return cls(tuple(range(1, k + 1)))

    def prefix(self, k: int) -> Palette:
        """The first k colours, in order."""
        if not 1 <= k <= len(self.colours):
            raise PaletteError(f"cannot take prefix of length {k} from {self.colours}")
        return Palette(self.colours[:k])

    def without(self, c: int) -> Palette:
        """This palette with colour c removed, order preserved."""
        if c not in self._set:
            raise PaletteError(f"colour {c} not in palette {self.colours}")
        return Palette(tuple(x for x in self.colours if x != c))

    def __len__(self) -> int:
        return len(self.colours)

    def __iter__(self):
        return iter(self.colours)

    def __contains__(self, c: object) -> bool:
        return c in self._set

    def __getitem__(self, i: int) -> int:
        return self.colours[i]


@dataclass(frozen=True)
class Colouring:
    """An assignment of one palette colour to each vertex 0..n-1."""

    assignment: tuple[int, ...]
    palette: Palette

    def __post_init__(self):
        assignment = tuple(int(c) for c in self.assignment)
        if not assignment:
            raise ColouringError("colouring must cover at least one vertex")
        bad = [v for v, c in enumerate(assignment) if c not in self.palette]
        if bad:
            v = bad[0]
            raise ColouringError(
                f"vertex {v} has colour {assignment[v]} outside palette {self.palette.colours}"
            )
        object.__setattr__(self, "assignment", assignment)

    @property
    def n(self) -> int:
        return len(self.assignment)

    def used_colours(self) -> tuple[int, ...]:
        """Distinct colours actually present, in palette order."""
        present = set(self.assignment)
        return tuple(c for c in self.palette if c in present)

    def colour_classes(self) -> dict[int, tuple[int, ...]]:
        """Map each used colour to its vertices, ascending."""
        classes: dict[int, list[int]] = {}
        for v, c in enumerate(self.assignment):
            classes.setdefault(c, []).append(v)
        return {c: tuple(vs) for c, vs in classes.items()}

    def recolour(self, v: int, c: int) -> Colouring:
        """A copy with vertex v recoloured to c."""
        if not 0 <= v < self.n:
            raise ColouringError(f"vertex {v} out of range for {self.n} vertices")
        new = list(self.assignment)
        new[v] = c
        return Colouring(tuple(new), self.palette)

    def is_proper(self, g: Graph) -> bool:
        """True when no edge of g joins two vertices of the same colour."""
        if g.n != self.n:
            raise ColouringError(f"colouring covers {self.n} vertices, graph has {g.n}")
        arr = np.asarray(self.assignment)
        same = arr[:, None] == arr[None, :]
        return not bool((same & g.adj).any())

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]


def colouring_to_json(colouring: Colouring) -> dict[str, Any]:
    return {
        "palette": list(colouring.palette.colours),
        "assignment": list(colouring.assignment),
    }


def colouring_from_json(obj: Any) -> Colouring:
    if not isinstance(obj, dict):
        raise ColouringError(f"colouring JSON must be an object, got {type(obj).__name__}")
    extra = set(obj) - {"palette", "assignment"}
    if extra:
        raise ColouringError(f"unexpected colouring keys: {sorted(extra)}")
    try:
        palette = obj["palette"]
        assignment = obj["assignment"]
    except KeyError as e:
        raise ColouringError(f"colouring JSON missing key {e.args[0]!r}") from None
    def ints_only(value: Any) -> bool:
        # bool is an int subclass; JSON true/false are not colours
        return isinstance(value, list) and all(
            isinstance(c, int) and not isinstance(c, bool) for c in value
        )

    if not ints_only(palette):
        raise ColouringError("palette must be a list of integers")
    if not ints_only(assignment):
        raise ColouringError("assignment must be a list of integers")
    return Colouring(tuple(assignment), Palette(tuple(palette)))
