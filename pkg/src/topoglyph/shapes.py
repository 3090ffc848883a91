"""The frozen shape-id table.

Every topographic feature maps to a small integer used in serialized graphs
and matching vectors.  This table is a public contract; changing it breaks
stored feature sets, so additions must bump SHAPE_ID_TABLE_VERSION.

    1  convexity, North, point apex      5  convexity, East, point apex
    2  convexity, North, flat apex       6  convexity, East, flat apex
    3  convexity, South, point apex      7  convexity, West, point apex
    4  convexity, South, flat apex       8  convexity, West, flat apex
    9  closed region                    10  straight line
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

SHAPE_ID_TABLE_VERSION = 1


class Direction(Enum):
    NORTH = "N"
    SOUTH = "S"
    EAST = "E"
    WEST = "W"


class ApexKind(Enum):
    POINT = "point"
    FLAT = "flat"


class FeatureKind(Enum):
    CLOSED_REGION = "closed_region"
    CONVEXITY = "convexity"
    STRAIGHT_LINE = "straight_line"


@dataclass(frozen=True)
class ConvexShapeClass:
    id: int
    direction: Direction
    apex: ApexKind


CONVEX_CLASSES: tuple[ConvexShapeClass, ...] = tuple(
    ConvexShapeClass(1 + 2 * di + ai, d, a)
    for di, d in enumerate(Direction)
    for ai, a in enumerate(ApexKind)
)

_CLASS_BY_KEY = {(c.direction, c.apex): c for c in CONVEX_CLASSES}

CLOSED_REGION_ID = 9
STRAIGHT_LINE_ID = 10
VALID_SHAPE_IDS = frozenset(range(1, 11))

MNEMONIC_BY_ID = {
    **{c.id: f"{c.direction.value}-{c.apex.value}" for c in CONVEX_CLASSES},
    CLOSED_REGION_ID: "closed",
    STRAIGHT_LINE_ID: "line",
}


def convex_class(direction: Direction, apex: ApexKind) -> ConvexShapeClass:
    return _CLASS_BY_KEY[(direction, apex)]
