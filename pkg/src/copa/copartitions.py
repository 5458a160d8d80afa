"""The copartition triple and its structural operations.

An (a, b, m)-copartition is a triple (ground, rectangle, sky): ground parts
are congruent to a (mod m) and at least a, sky parts are congruent to b
(mod m) and at least b, and the rectangle is never stored because it is
determined: one part of size m * len(ground) for every sky part.  The size
is |ground| + m * len(ground) * len(sky) + |sky|.

Degenerate parameters relax one side and constrain the other: a = 0 lets
the ground carry explicit zero parts but requires a nonempty sky, b = 0
mirrors that, and a = b = 0 requires both components nonempty.  Zero parts
are explicit, so a ground of (2,) and one of (2, 0) are different values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence, Union

from .errors import (
    EmptyGroundError,
    EmptySkyError,
    InvalidPartitionError,
    MinimumPartError,
    ResidueError,
    SplitError,
    ZeroPartError,
)

ParamsLike = Union["CopartitionParams", tuple[int, int, int]]


@dataclass(frozen=True)
class CopartitionParams:
    """The triple (a, b, m): ground class, sky class, modulus."""

    a: int
    b: int
    m: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"modulus must be positive, got {self.m}")
        if self.a < 0 or self.b < 0:
            raise ValueError(f"classes must be non-negative, got ({self.a}, {self.b})")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.m)

    def swapped(self) -> "CopartitionParams":
        return CopartitionParams(self.b, self.a, self.m)


def coerce_params(params: ParamsLike) -> CopartitionParams:
    if isinstance(params, CopartitionParams):
        return params
    a, b, m = params
    return CopartitionParams(int(a), int(b), int(m))


def _check_component(parts: tuple[int, ...], cls: int, m: int, label: str) -> None:
    prev = None
    for p in parts:
        if prev is not None and p > prev:
            raise InvalidPartitionError(f"{label} parts not non-increasing: {list(parts)}")
        prev = p
        if p == 0:
            if cls != 0:
                raise ZeroPartError(f"zero {label} part with class {cls}")
            continue
        if p % m != cls % m:
            raise ResidueError(f"{label} part {p} not congruent to {cls} (mod {m})")
        if p < cls:
            raise MinimumPartError(f"{label} part {p} below {cls}")


@dataclass(frozen=True, slots=True)
class Copartition:
    params: CopartitionParams
    ground: tuple[int, ...]
    sky: tuple[int, ...]

    def __post_init__(self) -> None:
        p = self.params
        _check_component(self.ground, p.a, p.m, "ground")
        _check_component(self.sky, p.b, p.m, "sky")
        if p.a == 0 and not self.sky:
            raise EmptySkyError("a = 0 requires a nonempty sky")
        if p.b == 0 and not self.ground:
            raise EmptyGroundError("b = 0 requires a nonempty ground")

    @property
    def a(self) -> int:
        return self.params.a

    @property
    def b(self) -> int:
        return self.params.b

    @property
    def m(self) -> int:
        return self.params.m

    @property
    def size(self) -> int:
        w = len(self.ground)
        s = len(self.sky)
        return sum(self.ground) + self.params.m * w * s + sum(self.sky)

    @property
    def crank(self) -> int:
        return len(self.ground) - len(self.sky)

    def rectangle(self) -> tuple[int, ...]:
        """Derived rectangle parts: one per sky part, each m * len(ground)."""
        return (self.params.m * len(self.ground),) * len(self.sky)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return (
            f"Copartition(({self.a},{self.b},{self.m}), "
            f"ground={list(self.ground)}, sky={list(self.sky)})"
        )


def make_copartition(
    params: ParamsLike, ground: Sequence[int], sky: Sequence[int]
) -> Copartition:
    """Validating constructor; the rectangle is derived, never supplied."""
    return Copartition(coerce_params(params), tuple(ground), tuple(sky))


def enlarged_sky(c: Copartition) -> tuple[int, ...]:
    """Sky parts fused with their rectangle rows: sky_i + m * len(ground)."""
    bump = c.params.m * len(c.ground)
    return tuple(s + bump for s in c.sky)


def split_enlarged_sky(
    fused: Sequence[int], ground_count: int, params: ParamsLike
) -> tuple[int, ...]:
    """Undo the fusion: subtract m * ground_count from each fused part."""
    p = coerce_params(params)
    bump = p.m * ground_count
    out = []
    for f in fused:
        s = f - bump
        if s < p.b:
            raise SplitError(
                f"fused part {f} too small for ground count {ground_count}"
            )
        out.append(s)
    sky = tuple(out)
    _check_component(sky, p.b, p.m, "sky")
    return sky


def conjugate_copartition(c: Copartition) -> Copartition:
    """Swap ground and sky, landing in the (b, a, m) family.

    Only defined for a >= 1 and b >= 1; the degenerate regimes hang their
    zero-part and nonemptiness conditions on which side is which.
    """
    if c.a == 0 or c.b == 0:
        raise ValueError("conjugation needs a >= 1 and b >= 1")
    return Copartition(c.params.swapped(), c.sky, c.ground)


def scale_copartition(c: Copartition, s: int) -> Copartition:
    """Multiply parameters and every part by s."""
    if s < 1:
        raise ValueError(f"scale factor must be positive, got {s}")
    p = c.params
    return Copartition(
        CopartitionParams(p.a * s, p.b * s, p.m * s),
        tuple(g * s for g in c.ground),
        tuple(k * s for k in c.sky),
    )


def unscale_copartition(c: Copartition, s: int) -> Copartition:
    """Inverse of scale_copartition; every parameter and part must divide."""
    if s < 1:
        raise ValueError(f"scale factor must be positive, got {s}")
    p = c.params
    values = (p.a, p.b, p.m) + c.ground + c.sky
    for v in values:
        if v % s:
            raise ValueError(f"{v} not divisible by {s}")
    return Copartition(
        CopartitionParams(p.a // s, p.b // s, p.m // s),
        tuple(g // s for g in c.ground),
        tuple(k // s for k in c.sky),
    )


def crank(c: Copartition) -> int:
    """Ground count minus sky count."""
    return c.crank


def to_json_dict(c: Copartition) -> dict:
    return {
        "a": c.a,
        "b": c.b,
        "m": c.m,
        "ground": list(c.ground),
        "sky": list(c.sky),
    }


def to_json(c: Copartition) -> str:
    return json.dumps(to_json_dict(c), separators=(",", ":"))


def from_json_dict(obj: dict) -> Copartition:
    try:
        params = CopartitionParams(int(obj["a"]), int(obj["b"]), int(obj["m"]))
        ground = tuple(int(g) for g in obj["ground"])
        sky = tuple(int(s) for s in obj["sky"])
    except (KeyError, TypeError) as exc:
        raise InvalidPartitionError(f"malformed copartition object: {obj!r}") from exc
    return Copartition(params, ground, sky)


def from_json(text: str) -> Copartition:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidPartitionError(f"bad JSON: {text!r}") from exc
    if not isinstance(obj, dict):
        raise InvalidPartitionError("copartition JSON must be an object")
    return from_json_dict(obj)
