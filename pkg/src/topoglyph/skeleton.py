"""Thinning to single-pixel-wide skeletons, plus junction/endpoint labeling.

The thinner peels boundary pixels in four directional sub-passes per
iteration (North, South, East, West borders).  A pixel is only ever removed
when its 3x3 neighborhood says the removal is topology-safe, so foreground
8-component count and hole count are preserved exactly, containment is
trivial (pixels are only removed), and running the thinner on its own output
changes nothing.

All neighborhood predicates are precomputed over the 256 possible 3x3
configurations: the 8 neighbors of a pixel are encoded as one byte in the
cyclic order N, NE, E, SE, S, SW, W, NW.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptyImageError
from .raster import BinaryRaster, Pixel, connected_components

# Neighbor offsets in cyclic order; bit i of a mask is offset _COORDS[i].
_COORDS = ((-1, 0), (-1, 1), (0, 1), (1, 1), (1, 0), (1, -1), (0, -1), (-1, -1))
_ORTHOGONAL_BITS = (0, 2, 4, 6)


def _fg_component_count(mask: int) -> int:
    # Components of foreground neighbor cells under their true 8-adjacency
    # (e.g. the N and E cells touch diagonally).
    bits = [i for i in range(8) if mask >> i & 1]
    if not bits:
        return 0
    parent = {b: b for b in bits}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in bits:
        for j in bits:
            if i < j:
                (ri, ci), (rj, cj) = _COORDS[i], _COORDS[j]
                if max(abs(ri - rj), abs(ci - cj)) == 1:
                    parent[find(i)] = find(j)
    return len({find(b) for b in bits})


def _branch_count(mask: int) -> int:
    # Maximal cyclic runs of foreground neighbors; two strokes leaving at a
    # right angle stay distinct even though their cells touch diagonally.
    if mask == 0:
        return 0
    if mask == 0xFF:
        return 1
    runs = 0
    for i in range(8):
        if mask >> i & 1 and not mask >> ((i - 1) % 8) & 1:
            runs += 1
    return runs


def _background_ok(mask: int) -> bool:
    # Exactly one cyclic background run that includes a 4-neighbor of the
    # center; deleting the center then keeps background 4-topology intact.
    bg_runs_with_orthogonal = 0
    for i in range(8):
        if not mask >> i & 1 and mask >> ((i - 1) % 8) & 1:
            run = []
            j = i
            while not mask >> j & 1 and len(run) < 8:
                run.append(j)
                j = (j + 1) % 8
            if any(b in _ORTHOGONAL_BITS for b in run):
                bg_runs_with_orthogonal += 1
    if mask == 0:
        return False
    return bg_runs_with_orthogonal == 1


NEIGHBOR_COUNT = tuple(bin(m).count("1") for m in range(256))
BRANCH_COUNT = tuple(_branch_count(m) for m in range(256))
# Simple point for (foreground 8-, background 4-) connectivity: one
# foreground component in the punctured neighborhood and one usable
# background component.  Deleting a simple point never merges, splits,
# creates, or fills anything.
SIMPLE = tuple(
    _fg_component_count(m) == 1 and _background_ok(m) for m in range(256)
)

_SIMPLE_ARR = np.array(SIMPLE, dtype=bool)
_NCOUNT_ARR = np.array(NEIGHBOR_COUNT, dtype=np.uint8)
_BRANCH_ARR = np.array(BRANCH_COUNT, dtype=np.uint8)


@dataclass(frozen=True)
class Skeleton:
    """Width-1 stroke raster with labeled junctions and endpoints.

    ``junctions`` are merged junction clusters (one coordinate per cluster);
    ``junction_pixels`` is the raw set of pixels belonging to junction
    regions, which segment decomposition and invariant checks need.
    """

    raster: BinaryRaster
    junctions: tuple[Pixel, ...]
    endpoints: tuple[Pixel, ...]
    junction_pixels: frozenset[Pixel]


def _padded(img: BinaryRaster) -> np.ndarray:
    arr = np.zeros((img.height + 2, img.width + 2), dtype=bool)
    arr[1:-1, 1:-1] = img.to_array()
    return arr


def _mask_at(arr: np.ndarray, r: int, c: int) -> int:
    m = 0
    for i, (dr, dc) in enumerate(_COORDS):
        if arr[r + dr, c + dc]:
            m |= 1 << i
    return m


def _deletable(arr: np.ndarray, r: int, c: int) -> bool:
    m = _mask_at(arr, r, c)
    return NEIGHBOR_COUNT[m] >= 2 and SIMPLE[m]


def _mask_grid(arr: np.ndarray) -> np.ndarray:
    """Neighbor byte for every interior cell of a padded bool array."""
    h, w = arr.shape
    masks = np.zeros((h - 2, w - 2), dtype=np.uint8)
    for i, (dr, dc) in enumerate(_COORDS):
        masks |= arr[1 + dr : h - 1 + dr, 1 + dc : w - 1 + dc].astype(np.uint8) << i
    return masks


_PASS_DIRECTIONS = ((-1, 0), (1, 0), (0, 1), (0, -1))  # N, S, E, W borders


def _thin_array(arr: np.ndarray) -> None:
    """Peel `arr` (padded, writable) in place to its thinning fixpoint."""
    h, w = arr.shape
    while True:
        changed = False
        for dr, dc in _PASS_DIRECTIONS:
            # Candidates fixed at sub-pass start; each deletion is re-checked
            # against the live array so topology stays safe regardless of
            # what earlier deletions in the same pass did.
            masks = _mask_grid(arr)
            interior = arr[1:-1, 1:-1]
            direction_bg = ~arr[1 + dr : h - 1 + dr, 1 + dc : w - 1 + dc]
            candidates = (
                interior & direction_bg & _SIMPLE_ARR[masks] & (_NCOUNT_ARR[masks] >= 2)
            )
            for r, c in np.argwhere(candidates):
                rr, cc = int(r) + 1, int(c) + 1
                if arr[rr, cc] and _deletable(arr, rr, cc):
                    arr[rr, cc] = False
                    changed = True
        if not changed:
            return


def junction_pixel_set(img: BinaryRaster) -> frozenset[Pixel]:
    """Pixels belonging to junction regions of a width-1 skeleton.

    A pixel qualifies when three or more stroke branches meet at it, or when
    it carries three or more neighbors while touching such a pixel (the
    fringe of a junction cluster).
    """
    arr = _padded(img)
    fg = arr[1:-1, 1:-1]
    masks = _mask_grid(arr)
    core = fg & (_BRANCH_ARR[masks] >= 3)
    near_core = np.zeros_like(core)
    padded_core = np.zeros_like(arr)
    padded_core[1:-1, 1:-1] = core
    h, w = arr.shape
    for dr, dc in _COORDS:
        near_core |= padded_core[1 + dr : h - 1 + dr, 1 + dc : w - 1 + dc]
    halo = fg & ~core & (_NCOUNT_ARR[masks] >= 3) & near_core
    rows, cols = np.nonzero(core | halo)
    return frozenset(zip(rows.tolist(), cols.tolist()))


def _merge_junction_clusters(pixels: frozenset[Pixel]) -> tuple[Pixel, ...]:
    # 4-connected clusters of junction pixels collapse to one point each,
    # placed at the rounded cluster centroid.
    remaining = set(pixels)
    merged = []
    while remaining:
        seed = min(remaining)
        stack = [seed]
        cluster = {seed}
        remaining.discard(seed)
        while stack:
            r, c = stack.pop()
            for nr, nc in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                if (nr, nc) in remaining:
                    remaining.discard((nr, nc))
                    cluster.add((nr, nc))
                    stack.append((nr, nc))
        rows = sum(p[0] for p in cluster) / len(cluster)
        cols = sum(p[1] for p in cluster) / len(cluster)
        merged.append((int(rows + 0.5), int(cols + 0.5)))
    return tuple(sorted(merged))


def classify_pixels(img: BinaryRaster) -> tuple[tuple[Pixel, ...], tuple[Pixel, ...]]:
    """Label junctions (merged clusters) and endpoints of a width-1 raster.

    Endpoints are pixels with exactly one foreground 8-neighbor.
    """
    arr = _padded(img)
    fg = arr[1:-1, 1:-1]
    masks = _mask_grid(arr)
    rows, cols = np.nonzero(fg & (_NCOUNT_ARR[masks] == 1))
    junctions = _merge_junction_clusters(junction_pixel_set(img))
    return junctions, tuple(zip(rows.tolist(), cols.tolist()))


def thin(img: BinaryRaster) -> Skeleton:
    """Reduce strokes to a single-pixel-wide skeleton.

    The output stays inside the input foreground, keeps its 8-component and
    hole counts, and is a fixpoint: thinning a skeleton returns it unchanged.
    """
    if img.count() == 0:
        raise EmptyImageError("cannot thin an image with no foreground")
    arr = _padded(img)
    _thin_array(arr)
    raster = BinaryRaster(arr[1:-1, 1:-1])
    junctions, endpoints = classify_pixels(raster)
    return Skeleton(
        raster=raster,
        junctions=junctions,
        endpoints=endpoints,
        junction_pixels=junction_pixel_set(raster),
    )


def neighbor_count_at(img: BinaryRaster, pixel: Pixel) -> int:
    """Number of foreground 8-neighbors of `pixel`."""
    arr = _padded(img)
    return NEIGHBOR_COUNT[_mask_at(arr, pixel[0] + 1, pixel[1] + 1)]


def component_count(img: BinaryRaster, connectivity: int = 8) -> int:
    return len(connected_components(img, connectivity))
