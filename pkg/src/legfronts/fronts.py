"""Combinatorial front diagrams of Legendrian links, plat style.

A front is encoded as a left-to-right sequence of events, one per generic
x-slice.  With n strands entering a slice (numbered 1..n from the top),
the legal events are:

* ``L k`` (1 <= k <= n+1): a left cusp opens two new strands at heights
  k and k+1; strands previously at height >= k move down by two.
* ``R k`` (1 <= k <= n-1): a right cusp closes the strands at heights
  k and k+1; strands below move up by two.
* ``X k`` (1 <= k <= n-1): the strands at heights k and k+1 cross.

The total event order realizes genericity: no two events share an
x-coordinate.  A strand arc runs from a left cusp to a right cusp,
passing through crossings; components are obtained by joining the two
arcs that meet at each cusp.

Conventions fixed here and relied on by the rest of the package:

* Each component is oriented so that its earliest-born bottommost arc
  travels rightward (components may be reversed individually).  For the
  plain unknot front this orients the lower strand rightward.
* At a crossing the strand of lesser slope is in front, i.e. the over
  strand enters at height k and leaves at height k+1.  A crossing is
  positive exactly when its two strands agree in x-direction, which is
  the sign of det(over direction, under direction).
* The Maslov potential is Z_{2r}-valued (plain integers when r = 0),
  jumps by one at each cusp with the upper strand higher, and is even on
  rightward strands.  Each component's reference arc is anchored at
  potential 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

EVENT_KINDS = ("L", "R", "X")


class FrontFormatError(ValueError):
    """Raised when front text cannot be parsed; carries the 1-based line."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


class InvalidFrontError(ValueError):
    """Raised when an operation is applied to a front that fails validation."""


class NormalFormError(ValueError):
    """Raised when a connected-sum operand is not in splice normal form."""


@dataclass(frozen=True)
class FrontEvent:
    kind: str  # "L", "R" or "X"
    height: int  # 1-based from the top strand

    def __post_init__(self):
        if self.kind not in EVENT_KINDS:
            raise ValueError(f"unknown event kind {self.kind!r}")
        if not isinstance(self.height, int) or self.height < 1:
            raise ValueError(f"event height must be a positive integer, got {self.height!r}")

    def __str__(self) -> str:
        return f"{self.kind}{self.height}"


@dataclass(frozen=True)
class FrontDiagram:
    events: tuple[FrontEvent, ...]
    name: str = field(default="front", compare=False)
    # source line per event when parsed from text; informational only
    lines: tuple[int, ...] | None = field(default=None, compare=False)

    @property
    def num_crossings(self) -> int:
        return sum(1 for ev in self.events if ev.kind == "X")

    @property
    def num_left_cusps(self) -> int:
        return sum(1 for ev in self.events if ev.kind == "L")

    @property
    def num_right_cusps(self) -> int:
        return sum(1 for ev in self.events if ev.kind == "R")

    def __str__(self) -> str:
        return " ".join(str(ev) for ev in self.events)


def front(tokens: str, name: str = "front") -> FrontDiagram:
    """Build a front from compact tokens, e.g. ``front("L1 L3 X2 X2 X2 R1 R1")``."""
    events = []
    for tok in tokens.split():
        kind, num = tok[0], tok[1:]
        if kind not in EVENT_KINDS or not num.isdigit() or int(num) < 1:
            raise ValueError(f"bad event token {tok!r}")
        events.append(FrontEvent(kind, int(num)))
    return FrontDiagram(tuple(events), name=name)


def parse_front(text: str, name: str = "front") -> FrontDiagram:
    """Parse the front text format: one ``L|R|X <height>`` per line, # comments."""
    events = []
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise FrontFormatError(lineno, f"expected 'L|R|X <height>', got {stripped!r}")
        kind, height = parts
        if kind not in EVENT_KINDS:
            raise FrontFormatError(lineno, f"unknown event kind {kind!r}")
        try:
            k = int(height)
        except ValueError:
            raise FrontFormatError(lineno, f"height {height!r} is not an integer") from None
        if k < 1:
            raise FrontFormatError(lineno, f"height must be >= 1, got {k}")
        events.append(FrontEvent(kind, k))
        lines.append(lineno)
    return FrontDiagram(tuple(events), name=name, lines=tuple(lines))


def render_front(diagram: FrontDiagram) -> str:
    """Inverse of parse_front up to comments and whitespace."""
    return "".join(f"{ev.kind} {ev.height}\n" for ev in diagram.events)


@dataclass(frozen=True)
class Violation:
    event_index: int | None  # 1-based; None for end-of-diagram violations
    message: str


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...]


def validate(diagram: FrontDiagram) -> ValidationReport:
    """Check event heights against live strand counts; never raises."""
    violations = []
    n = 0
    for i, ev in enumerate(diagram.events, start=1):
        if ev.kind == "L":
            if not 1 <= ev.height <= n + 1:
                violations.append(Violation(i, f"left cusp height {ev.height} out of range 1..{n + 1}"))
            n += 2
        elif ev.kind == "R":
            if not 1 <= ev.height <= n - 1:
                violations.append(Violation(i, f"right cusp height {ev.height} out of range 1..{n - 1}"))
            n -= 2
            if n < 0:
                violations.append(Violation(i, "strand count went negative"))
                n = 0
        else:
            if not 1 <= ev.height <= n - 1:
                violations.append(Violation(i, f"crossing height {ev.height} out of range 1..{n - 1}"))
    if n != 0:
        violations.append(Violation(None, f"{n} strands left open at the end of the diagram"))
    return ValidationReport(ok=not violations, violations=tuple(violations))


# ---------------------------------------------------------------------------
# Sweep geometry: arcs, cusps and crossing sites


@dataclass(frozen=True)
class Cusp:
    event_index: int  # 0-based into diagram.events
    kind: str  # "L" or "R"
    upper_arc: int
    lower_arc: int


@dataclass(frozen=True)
class CrossingSite:
    crossing_id: int  # 1-based in x-order
    event_index: int
    over_arc: int  # enters at height k, the strand in front
    under_arc: int  # enters at height k + 1


@dataclass(frozen=True)
class FrontGeometry:
    num_arcs: int
    arc_birth: tuple[tuple[int, int], ...]  # (event index, birth height) per arc
    cusps: tuple[Cusp, ...]
    crossings: tuple[CrossingSite, ...]


def sweep_geometry(diagram: FrontDiagram) -> FrontGeometry:
    report = validate(diagram)
    if not report.ok:
        first = report.violations[0]
        raise InvalidFrontError(f"invalid front {diagram.name!r}: {first.message}")
    stack: list[int] = []  # arc id per current height, top first
    births: list[tuple[int, int]] = []
    cusps: list[Cusp] = []
    crossings: list[CrossingSite] = []
    for i, ev in enumerate(diagram.events):
        k = ev.height
        if ev.kind == "L":
            upper = len(births)
            births.append((i, k))
            lower = len(births)
            births.append((i, k + 1))
            stack[k - 1:k - 1] = [upper, lower]
            cusps.append(Cusp(i, "L", upper, lower))
        elif ev.kind == "R":
            upper, lower = stack[k - 1], stack[k]
            del stack[k - 1:k + 1]
            cusps.append(Cusp(i, "R", upper, lower))
        else:
            over, under = stack[k - 1], stack[k]
            crossings.append(CrossingSite(len(crossings) + 1, i, over, under))
            stack[k - 1], stack[k] = under, over
    return FrontGeometry(len(births), tuple(births), tuple(cusps), tuple(crossings))


# ---------------------------------------------------------------------------
# Components, orientations and classical invariants


@dataclass(frozen=True)
class ComponentMap:
    num_components: int
    arc_component: tuple[int, ...]
    arc_rightward: tuple[bool, ...]
    cusp_down: tuple[bool, ...]  # aligned with FrontGeometry.cusps
    reversed_components: frozenset[int]


def components(diagram: FrontDiagram, reverse=()) -> ComponentMap:
    """Partition arcs into components and orient them.

    Arcs joined at a cusp belong to the same component and get opposite
    x-directions.  Each component's reference arc, the bottommost among
    those born at its earliest event, is oriented rightward; components
    listed in ``reverse`` are flipped wholesale.
    """
    geom = sweep_geometry(diagram)
    adjacency: list[list[int]] = [[] for _ in range(geom.num_arcs)]
    for cusp in geom.cusps:
        adjacency[cusp.upper_arc].append(cusp.lower_arc)
        adjacency[cusp.lower_arc].append(cusp.upper_arc)

    comp = [-1] * geom.num_arcs
    rightward = [True] * geom.num_arcs
    n_comp = 0
    for seed in range(geom.num_arcs):
        if comp[seed] >= 0:
            continue
        members = [seed]
        comp[seed] = n_comp
        todo = [seed]
        while todo:
            a = todo.pop()
            for b in adjacency[a]:
                if comp[b] < 0:
                    comp[b] = n_comp
                    members.append(b)
                    todo.append(b)
        # earliest event first, then bottommost (largest birth height)
        rep = min(members, key=lambda a: (geom.arc_birth[a][0], -geom.arc_birth[a][1]))
        rightward[rep] = True
        seen = {rep}
        todo = [rep]
        while todo:
            a = todo.pop()
            for b in adjacency[a]:
                if b not in seen:
                    rightward[b] = not rightward[a]
                    seen.add(b)
                    todo.append(b)
                elif rightward[b] == rightward[a]:
                    raise RuntimeError("inconsistent orientation around a component")
        n_comp += 1

    reverse = frozenset(reverse)
    unknown = reverse - set(range(n_comp))
    if unknown:
        raise ValueError(f"no such component(s): {sorted(unknown)}")
    if reverse:
        rightward = [
            (not r) if comp[a] in reverse else r for a, r in enumerate(rightward)
        ]

    # a cusp is a down cusp when the traversal passes downward through it,
    # i.e. when its upper arc is directed toward the cusp point
    cusp_down = tuple(
        (not rightward[c.upper_arc]) if c.kind == "L" else rightward[c.upper_arc]
        for c in geom.cusps
    )
    return ComponentMap(n_comp, tuple(comp), tuple(rightward), cusp_down, reverse)


@dataclass(frozen=True)
class ClassicalInvariants:
    tb: int
    rot_per_component: tuple[int, ...]
    r: int  # gcd of |rotations|; 0 when all rotations vanish
    writhe: int
    num_right_cusps: int
    crossing_signs: tuple[int, ...]  # aligned with crossing ids 1..c


def crossing_sign(over_rightward: bool, under_rightward: bool) -> int:
    """det(over direction, under direction) for a front crossing.

    The over strand runs down-right, the under strand up-right; the
    determinant is positive exactly when the x-directions agree.
    """
    return 1 if over_rightward == under_rightward else -1


def classical_invariants(diagram: FrontDiagram, reverse=()) -> ClassicalInvariants:
    geom = sweep_geometry(diagram)
    cmap = components(diagram, reverse)
    signs = tuple(
        crossing_sign(cmap.arc_rightward[x.over_arc], cmap.arc_rightward[x.under_arc])
        for x in geom.crossings
    )
    writhe = sum(signs)
    num_right = sum(1 for c in geom.cusps if c.kind == "R")
    down_up = [0] * cmap.num_components
    for cusp, down in zip(geom.cusps, cmap.cusp_down):
        down_up[cmap.arc_component[cusp.upper_arc]] += 1 if down else -1
    rotations = tuple(du // 2 for du in down_up)
    r = 0
    for rot in rotations:
        r = math.gcd(r, abs(rot))
    return ClassicalInvariants(
        tb=writhe - num_right,
        rot_per_component=rotations,
        r=r,
        writhe=writhe,
        num_right_cusps=num_right,
        crossing_signs=signs,
    )


# ---------------------------------------------------------------------------
# Maslov potential and crossing indices


@dataclass(frozen=True)
class MaslovAssignment:
    modulus: int  # 2r; 0 means integer-valued
    potential: tuple[int, ...]  # per arc, reduced mod modulus when nonzero


def maslov_potential(diagram: FrontDiagram, reverse=()) -> MaslovAssignment:
    """Assign a Maslov potential to every arc.

    Propagates the cusp jumps from each component's reference arc
    (anchored at 0) and verifies the result is consistent mod 2r and even
    on rightward arcs; failures indicate a traversal bug, not bad input.
    """
    geom = sweep_geometry(diagram)
    cmap = components(diagram, reverse)
    inv = classical_invariants(diagram, reverse)
    modulus = 2 * inv.r

    edges: list[list[tuple[int, int]]] = [[] for _ in range(geom.num_arcs)]
    for cusp in geom.cusps:
        edges[cusp.lower_arc].append((cusp.upper_arc, +1))
        edges[cusp.upper_arc].append((cusp.lower_arc, -1))

    potential = [None] * geom.num_arcs
    for seed in range(geom.num_arcs):
        if potential[seed] is not None:
            continue
        members = [a for a in range(geom.num_arcs) if cmap.arc_component[a] == cmap.arc_component[seed]]
        rep = min(members, key=lambda a: (geom.arc_birth[a][0], -geom.arc_birth[a][1]))
        # the anchor must respect the even-right rule, and a reversed
        # component may have a leftward reference arc
        potential[rep] = 0 if cmap.arc_rightward[rep] else 1
        todo = [rep]
        while todo:
            a = todo.pop()
            for b, jump in edges[a]:
                if potential[b] is None:
                    potential[b] = potential[a] + jump
                    todo.append(b)
    if modulus:
        potential = [mu % modulus for mu in potential]

    def reduce(x: int) -> int:
        return x % modulus if modulus else x

    for cusp in geom.cusps:
        if reduce(potential[cusp.upper_arc] - potential[cusp.lower_arc] - 1) != 0:
            raise RuntimeError("Maslov potential propagation is inconsistent at a cusp")
    for a in range(geom.num_arcs):
        if cmap.arc_rightward[a] and potential[a] % 2 != 0:
            raise RuntimeError("rightward arc received an odd Maslov potential")
    return MaslovAssignment(modulus, tuple(potential))


def crossing_indices(diagram: FrontDiagram, reverse=()) -> dict[int, int]:
    """Maslov index of every crossing: potential of the upper-left strand
    minus the lower-left one, mod 2r."""
    geom = sweep_geometry(diagram)
    maslov = maslov_potential(diagram, reverse)
    out = {}
    for x in geom.crossings:
        index = maslov.potential[x.over_arc] - maslov.potential[x.under_arc]
        out[x.crossing_id] = index % maslov.modulus if maslov.modulus else index
    return out


def crossing_index(diagram: FrontDiagram, crossing_id: int, reverse=()) -> int:
    indices = crossing_indices(diagram, reverse)
    if crossing_id not in indices:
        raise ValueError(f"front {diagram.name!r} has no crossing {crossing_id}")
    return indices[crossing_id]


# ---------------------------------------------------------------------------
# Connected sum


def connected_sum(f1: FrontDiagram, f2: FrontDiagram) -> FrontDiagram:
    """Splice two fronts in normal form: f1 must end with the right cusp
    closing its last two strands, and f2 must open with a left cusp.

    The closing cusp of f1 and the opening cusp of f2 are removed and the
    two freed strands of f1 continue into f2's events unchanged.
    """
    for f in (f1, f2):
        report = validate(f)
        if not report.ok:
            raise InvalidFrontError(f"invalid front {f.name!r}: {report.violations[0].message}")
    if not f1.events or f1.events[-1].kind != "R":
        raise NormalFormError(f"{f1.name!r} does not end with a right cusp")
    n = 0
    for ev in f1.events[:-1]:
        n += 2 if ev.kind == "L" else -2 if ev.kind == "R" else 0
    if n != 2:
        raise NormalFormError(
            f"{f1.name!r} has {n} live strands before its final event, need exactly 2"
        )
    if not f2.events or f2.events[0] != FrontEvent("L", 1):
        raise NormalFormError(f"{f2.name!r} does not start with a height-1 left cusp")
    return FrontDiagram(
        f1.events[:-1] + f2.events[1:],
        name=f"{f1.name}#{f2.name}",
    )
