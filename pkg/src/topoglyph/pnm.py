"""Plain-text portable bitmap (P1) and graymap (P2) reading and writing.

P1 value 1 is foreground.  "#" comments are allowed anywhere after the magic
number; tokens are whitespace-separated.  Binary variants (P4/P5) are not
supported; they are rejected with a clear message.
"""

from __future__ import annotations

import numpy as np

from .errors import PnmFormatError
from .raster import BinaryRaster, GrayRaster


def _tokens(text: str):
    for line in text.splitlines():
        body = line.split("#", 1)[0]
        yield from body.split()


def _read_header(path: str) -> tuple[str, list[str]]:
    try:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    except UnicodeDecodeError as exc:
        raise PnmFormatError(f"{path}: not a plain-text PNM file ({exc})") from exc
    toks = list(_tokens(text))
    if not toks:
        raise PnmFormatError(f"{path}: empty file")
    magic = toks[0]
    if magic in ("P4", "P5"):
        raise PnmFormatError(f"{path}: binary format {magic} unsupported; use plain P1/P2")
    if magic not in ("P1", "P2"):
        raise PnmFormatError(f"{path}: unknown magic number {magic!r}")
    return magic, toks[1:]


def _take_int(toks: list[str], idx: int, what: str, path: str) -> int:
    if idx >= len(toks):
        raise PnmFormatError(f"{path}: truncated, missing {what}")
    try:
        return int(toks[idx])
    except ValueError as exc:
        raise PnmFormatError(f"{path}: bad {what} {toks[idx]!r}") from exc


def read_pnm(path: str) -> BinaryRaster | GrayRaster:
    """Read a P1 file as a BinaryRaster or a P2 file as a GrayRaster."""
    magic, toks = _read_header(path)
    width = _take_int(toks, 0, "width", path)
    height = _take_int(toks, 1, "height", path)
    if width < 1 or height < 1:
        raise PnmFormatError(f"{path}: bad dimensions {width}x{height}")
    if magic == "P1":
        data_start = 2
        maxval = 1
    else:
        maxval = _take_int(toks, 2, "maxval", path)
        if not (1 <= maxval <= 255):
            raise PnmFormatError(f"{path}: maxval {maxval} outside supported range 1..255")
        data_start = 3
    values = toks[data_start:]
    if len(values) != width * height:
        raise PnmFormatError(
            f"{path}: expected {width * height} pixel values, found {len(values)}"
        )
    try:
        arr = np.array([int(v) for v in values]).reshape(height, width)
    except ValueError as exc:
        raise PnmFormatError(f"{path}: non-numeric pixel data") from exc
    if arr.min() < 0 or arr.max() > maxval:
        raise PnmFormatError(f"{path}: pixel value outside 0..{maxval}")
    if magic == "P1":
        return BinaryRaster(arr == 1)
    return GrayRaster(arr)


def write_p1(img: BinaryRaster, path: str) -> None:
    arr = img.to_array().astype(np.uint8)
    lines = ["P1", f"{img.width} {img.height}"]
    lines += [" ".join(str(v) for v in row) for row in arr.tolist()]
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def write_p2(img: GrayRaster, path: str) -> None:
    arr = img.to_array()
    lines = ["P2", f"{img.width} {img.height}", "255"]
    lines += [" ".join(str(v) for v in row) for row in arr.tolist()]
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")
