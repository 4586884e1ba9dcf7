"""Shared test helpers."""

import random

from legfronts.fronts import FrontDiagram, FrontEvent


def random_front(rng: random.Random, max_events: int = 16, max_strands: int = 8) -> FrontDiagram:
    """A valid-by-construction random front; may be a knot or a link."""
    events = []
    n = 0
    while True:
        if n == 0:
            if events and (len(events) >= max_events or rng.random() < 0.35):
                break
            events.append(FrontEvent("L", 1))
            n = 2
            continue
        if len(events) >= max_events:
            kind = "R"
        elif n >= max_strands:
            kind = rng.choice(["R", "R", "X", "X", "X"])
        else:
            kind = rng.choice(["L", "R", "X", "X"])
        if kind == "L":
            k = rng.randint(1, n + 1)
            n += 2
        elif kind == "R":
            k = rng.randint(1, n - 1)
            n -= 2
        else:
            k = rng.randint(1, n - 1)
        events.append(FrontEvent(kind, k))
    return FrontDiagram(tuple(events), name="random")


def random_fronts(seed: int, count: int, max_crossings: int | None = None, knots_only: bool = False):
    """A deterministic batch of random fronts, optionally capped and filtered."""
    from legfronts import components

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        f = random_front(rng)
        if max_crossings is not None and f.num_crossings > max_crossings:
            continue
        if knots_only and components(f).num_components != 1:
            continue
        out.append(f)
    return out


def nested_unlink(n: int) -> FrontDiagram:
    """The n-component unlink as n nested saucers."""
    events = [FrontEvent("L", i) for i in range(1, n + 1)]
    events += [FrontEvent("R", i) for i in range(n, 0, -1)]
    return FrontDiagram(tuple(events), name=f"unlink{n}")
