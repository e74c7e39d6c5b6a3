"""Generators for the extremal point sets (circles, the thin modular
grid whose areas are never units, lines) and generic test sets."""

from __future__ import annotations

from .census import PointSet, full_plane_points
from .linalg import Mat2
from .rings import ModPrimePower, RingSpec, mod_prime_power


def circle(spec: RingSpec, r) -> PointSet:
    """{x : x1^2 + x2^2 = r}, by exhaustive scan of the plane."""
    pts = [
        (a, b)
        for a in spec.elements()
        for b in spec.elements()
        if spec.add(spec.mul(a, a), spec.mul(b, b)) == r
    ]
    return PointSet(spec, pts)


def union_circles(spec: RingSpec, radii) -> PointSet:
    radii = list(radii)
    if len(set(radii)) != len(radii):
        raise ValueError("radii must be distinct")
    pts = []
    for r in radii:
        pts.extend(circle(spec, r).points)
    return PointSet(spec, pts)


def rotation_group(spec: RingSpec) -> list[Mat2]:
    """All matrices [[a, -b], [b, a]] with a^2 + b^2 = 1.  Each has
    determinant 1 and maps every circle onto itself."""
    out = []
    for a in spec.elements():
        for b in spec.elements():
            if spec.add(spec.mul(a, a), spec.mul(b, b)) == spec.one:
                out.append((a, spec.neg(b), b, a))
    return out


def mod_sharpness_set(p: int, ell: int) -> PointSet:
    """The thin grid {(t + pn, t + pm)} in (Z/p^l Z)^2: p^{2l-1} points
    whose pairwise areas are all divisible by p, so every configuration
    drawn from it is bad."""
    spec = mod_prime_power(p, ell)
    q = p ** ell
    step = p ** (ell - 1)
    pts = [
        ((t + p * n) % q, (t + p * m) % q)
        for t in range(p)
        for n in range(step)
        for m in range(step)
    ]
    return PointSet(spec, pts)


def line_through_origin(spec: RingSpec, direction) -> PointSet:
    if direction == (spec.zero, spec.zero):
        raise ValueError("direction must be nonzero")
    pts = [
        (spec.mul(t, direction[0]), spec.mul(t, direction[1])) for t in spec.elements()
    ]
    return PointSet(spec, pts)


def full_plane(spec: RingSpec) -> PointSet:
    return PointSet(spec, list(full_plane_points(spec)))


_MCG_MULTIPLIER = 0xF1357AEA2E62A9C5
_MASK64 = (1 << 64) - 1


class McgStream:
    """64-bit multiplicative congruential generator used for seeded test
    sets, pinned so other implementations can reproduce them exactly:
    state starts at (2*seed + 1) mod 2^64 (forced odd), each step is
    state <- (state * 0xf1357aea2e62a9c5) mod 2^64, and below(m) returns
    (state * m) >> 64 after stepping."""

    def __init__(self, seed: int):
        self.state = (2 * seed + 1) & _MASK64

    def next64(self) -> int:
        self.state = (self.state * _MCG_MULTIPLIER) & _MASK64
        return self.state

    def below(self, m: int) -> int:
        return (self.next64() * m) >> 64


def random_subset(spec: RingSpec, size: int, seed: int) -> PointSet:
    """Seed-deterministic uniform subset without replacement, chosen by
    a partial Fisher-Yates shuffle over the canonically ordered plane."""
    plane = list(full_plane_points(spec))
    if size > len(plane):
        raise ValueError(f"requested {size} points but the plane has {len(plane)}")
    rng = McgStream(seed)
    for i in range(size):
        j = i + rng.below(len(plane) - i)
        plane[i], plane[j] = plane[j], plane[i]
    return PointSet(spec, plane[:size])


def construction_from_json(spec: RingSpec, obj: dict) -> PointSet:
    kind = obj.get("kind")
    if kind == "circle":
        return circle(spec, spec.element_from_json(obj["r"]))
    if kind == "union-circles":
        return union_circles(spec, [spec.element_from_json(r) for r in obj["radii"]])
    if kind == "mod-sharpness":
        if not isinstance(spec, ModPrimePower):
            raise ValueError("mod-sharpness requires a mod-prime-power ring")
        return mod_sharpness_set(spec.p, spec.ell)
    if kind == "line-through-origin":
        d = obj["direction"]
        direction = (spec.element_from_json(d[0]), spec.element_from_json(d[1]))
        return line_through_origin(spec, direction)
    if kind == "random-subset":
        return random_subset(spec, int(obj["size"]), int(obj["seed"]))
    if kind == "full-plane":
        return full_plane(spec)
    raise ValueError(f"unknown construction kind: {kind!r}")
