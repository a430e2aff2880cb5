"""Reader/writer for the STF1 tensor file format.

Layout: 4-byte magic ``STF1``, one dtype byte (1 = float32 little-endian),
one ndim byte, ``ndim`` unsigned 32-bit little-endian dimensions, then the
row-major payload.
"""

from __future__ import annotations

import io
import struct
from os import PathLike
from typing import BinaryIO, Union

import numpy as np

from .errors import DataError

MAGIC = b"STF1"
DTYPE_FLOAT32 = 1

_CODES = {DTYPE_FLOAT32: np.dtype("<f4")}


def write_stf(target: Union[str, PathLike, BinaryIO], array: np.ndarray) -> None:
    """Write ``array`` as an STF1 float32 tensor to a path or binary stream."""
    arr = np.ascontiguousarray(array, dtype="<f4")
    if arr.ndim > 255:
        raise DataError(f"too many dimensions for STF1: {arr.ndim}")
    header = MAGIC + struct.pack("<BB", DTYPE_FLOAT32, arr.ndim)
    header += struct.pack(f"<{arr.ndim}I", *arr.shape)
    if hasattr(target, "write"):
        target.write(header)
        target.write(arr.tobytes())
    else:
        with open(target, "wb") as fh:
            fh.write(header)
            fh.write(arr.tobytes())


def read_stf(source: Union[str, PathLike, BinaryIO]) -> np.ndarray:
    """Read an STF1 tensor from a path or binary stream."""
    if hasattr(source, "read"):
        return _read_stream(source)
    with open(source, "rb") as fh:
        return _read_stream(fh)


def to_bytes(array: np.ndarray) -> bytes:
    buf = io.BytesIO()
    write_stf(buf, array)
    return buf.getvalue()


def _read_stream(fh: BinaryIO) -> np.ndarray:
    magic = fh.read(4)
    if magic != MAGIC:
        raise DataError(f"bad STF1 magic: {magic!r}")
    head = fh.read(2)
    if len(head) != 2:
        raise DataError("truncated STF1 header")
    code, ndim = struct.unpack("<BB", head)
    if code not in _CODES:
        raise DataError(f"unsupported STF1 dtype code: {code}")
    dims_raw = fh.read(4 * ndim)
    if len(dims_raw) != 4 * ndim:
        raise DataError("truncated STF1 dimension list")
    shape = struct.unpack(f"<{ndim}I", dims_raw)
    dtype = _CODES[code]
    count = int(np.prod(shape, dtype=np.int64)) if ndim else 1
    payload = fh.read(count * dtype.itemsize)
    if len(payload) != count * dtype.itemsize:
        raise DataError("truncated STF1 payload")
    return np.frombuffer(payload, dtype=dtype).reshape(shape).copy()
