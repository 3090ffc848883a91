"""Pixel grids and the grid primitives every later stage relies on.

Coordinate convention used throughout the package: ``(row, col)`` with row 0
at the top and col 0 at the left, so "North" means toward row 0.  Foreground
(``True``) is the dark stroke, background is the light paper.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import ConstantImageError, EmptyImageError

Pixel = tuple[int, int]


class BinaryRaster:
    """Immutable 2D binary pixel grid.

    Out-of-range access is an error, never background: callers that want
    edge semantics must handle them explicitly.
    """

    __slots__ = ("_px",)

    def __init__(self, pixels: np.ndarray):
        arr = np.asarray(pixels, dtype=bool)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError(f"raster must be 2D and nonempty, got shape {arr.shape}")
        arr = arr.copy()
        arr.setflags(write=False)
        self._px = arr

    @classmethod
    def blank(cls, width: int, height: int) -> "BinaryRaster":
        return cls(np.zeros((height, width), dtype=bool))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "BinaryRaster":
        return cls(np.array(rows, dtype=bool))

    @classmethod
    def from_pixels(cls, width: int, height: int, pixels: Iterable[Pixel]) -> "BinaryRaster":
        arr = np.zeros((height, width), dtype=bool)
        for r, c in pixels:
            if not (0 <= r < height and 0 <= c < width):
                raise IndexError(f"pixel ({r}, {c}) outside {height}x{width} raster")
            arr[r, c] = True
        return cls(arr)

    @property
    def width(self) -> int:
        return self._px.shape[1]

    @property
    def height(self) -> int:
        return self._px.shape[0]

    def get(self, row: int, col: int) -> bool:
        if not (0 <= row < self.height and 0 <= col < self.width):
            raise IndexError(f"pixel ({row}, {col}) outside {self.height}x{self.width} raster")
        return bool(self._px[row, col])

    def to_array(self) -> np.ndarray:
        """Read-only view of the underlying bool array."""
        return self._px

    def foreground(self) -> list[Pixel]:
        """All foreground pixels in row-major order."""
        rows, cols = np.nonzero(self._px)
        return list(zip(rows.tolist(), cols.tolist()))

    def count(self) -> int:
        return int(self._px.sum())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryRaster):
            return NotImplemented
        return self._px.shape == other._px.shape and bool((self._px == other._px).all())

    def __hash__(self) -> int:
        return hash((self._px.shape, self._px.tobytes()))

    def __repr__(self) -> str:
        return f"BinaryRaster({self.width}x{self.height}, {self.count()} fg)"


class GrayRaster:
    """Immutable 2D grid of intensities in [0, 255]."""

    __slots__ = ("_px",)

    def __init__(self, pixels: np.ndarray):
        arr = np.asarray(pixels)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError(f"raster must be 2D and nonempty, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() > 255):
            raise ValueError("intensities must lie in [0, 255]")
        arr = arr.astype(np.uint8)
        arr.setflags(write=False)
        self._px = arr

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "GrayRaster":
        return cls(np.array(rows))

    @property
    def width(self) -> int:
        return self._px.shape[1]

    @property
    def height(self) -> int:
        return self._px.shape[0]

    def get(self, row: int, col: int) -> int:
        if not (0 <= row < self.height and 0 <= col < self.width):
            raise IndexError(f"pixel ({row}, {col}) outside {self.height}x{self.width} raster")
        return int(self._px[row, col])

    def to_array(self) -> np.ndarray:
        return self._px

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GrayRaster):
            return NotImplemented
        return self._px.shape == other._px.shape and bool((self._px == other._px).all())

    def __hash__(self) -> int:
        return hash((self._px.shape, self._px.tobytes()))

    def __repr__(self) -> str:
        return f"GrayRaster({self.width}x{self.height})"


@dataclass(frozen=True)
class Bounds:
    """Tight foreground bounding box: column span [h_start, h_end], row span
    [v_start, v_end], all inclusive."""

    h_start: int
    h_end: int
    v_start: int
    v_end: int

    def __post_init__(self):
        if self.h_start > self.h_end or self.v_start > self.v_end:
            raise ValueError(f"degenerate bounds {self}")
        if min(self.h_start, self.v_start) < 0:
            raise ValueError(f"negative bounds {self}")


def otsu_threshold(img: GrayRaster) -> int:
    """Threshold T maximizing between-class variance; foreground is v < T.

    Computed over the 256-bin histogram; variance ties are broken toward the
    lowest candidate so the result is deterministic.  Raises
    ConstantImageError when every pixel has the same intensity, since no
    threshold separates two classes there.
    """
    hist = np.bincount(img.to_array().ravel(), minlength=256).astype(np.float64)
    total = hist.sum()
    if np.count_nonzero(hist) < 2:
        raise ConstantImageError("all pixels share one intensity; cannot binarize")

    # Class 0 is every intensity <= t; sweep all 256 candidate cuts.
    w0 = np.cumsum(hist) / total
    w1 = 1.0 - w0
    cum_mean = np.cumsum(hist * np.arange(256)) / total
    grand_mean = cum_mean[-1]
    valid = (w0 > 0) & (w1 > 0)
    between = np.zeros(256)
    between[valid] = (grand_mean * w0[valid] - cum_mean[valid]) ** 2 / (w0[valid] * w1[valid])
    t = int(np.argmax(between))  # argmax takes the first (lowest) maximizer
    return t + 1


def otsu_binarize(img: GrayRaster) -> BinaryRaster:
    """Binarize dark strokes on light paper: foreground = intensity < T."""
    t = otsu_threshold(img)
    return BinaryRaster(img.to_array() < t)


def compute_bounds(img: BinaryRaster) -> Bounds:
    """Tight bounding box of the foreground; EmptyImageError if there is none."""
    arr = img.to_array()
    rows = np.flatnonzero(arr.any(axis=1))
    if rows.size == 0:
        raise EmptyImageError("image has no foreground pixel")
    cols = np.flatnonzero(arr.any(axis=0))
    return Bounds(
        h_start=int(cols[0]),
        h_end=int(cols[-1]),
        v_start=int(rows[0]),
        v_end=int(rows[-1]),
    )


_OFFSETS_4 = ((-1, 0), (0, -1), (0, 1), (1, 0))
_OFFSETS_8 = ((-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1))


def connected_components(img: BinaryRaster, connectivity: int = 8) -> list[set[Pixel]]:
    """Partition foreground pixels into maximal connected sets.

    Components are ordered by their smallest (row, col) member so output is
    deterministic.  An empty image yields an empty list.
    """
    if connectivity not in (4, 8):
        raise ValueError(f"connectivity must be 4 or 8, got {connectivity}")
    offsets = _OFFSETS_4 if connectivity == 4 else _OFFSETS_8
    arr = img.to_array()
    h, w = arr.shape
    seen = np.zeros_like(arr, dtype=bool)
    components: list[set[Pixel]] = []
    for r0, c0 in zip(*np.nonzero(arr)):
        if seen[r0, c0]:
            continue
        comp: set[Pixel] = set()
        queue = deque([(int(r0), int(c0))])
        seen[r0, c0] = True
        while queue:
            r, c = queue.popleft()
            comp.add((r, c))
            for dr, dc in offsets:
                nr, nc = r + dr, c + dc
                if 0 <= nr < h and 0 <= nc < w and arr[nr, nc] and not seen[nr, nc]:
                    seen[nr, nc] = True
                    queue.append((nr, nc))
        components.append(comp)
    # np.nonzero scans row-major, so discovery order already sorts components
    # by their smallest member.
    return components
