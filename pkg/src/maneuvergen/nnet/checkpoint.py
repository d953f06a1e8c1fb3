"""Versioned binary weight checkpoints.

Layout: magic MGNW, u16 format version, 8-byte spec-hash prefix, u64
parameter count, float64 little-endian values, trailing CRC32 of all
preceding bytes.
"""

import os
import struct
import zlib

import numpy as np

from ..errors import CorruptCheckpoint, SpecMismatch
from .composite import build_layout
from .layout import NetworkWeights
from .spec import NetworkSpec

MAGIC = b"MGNW"
VERSION = 1


def save(weights: NetworkWeights, path):
    """Write a checkpoint atomically (write-then-rename)."""
    body = bytearray()
    body += MAGIC
    body += struct.pack("<H", VERSION)
    body += bytes.fromhex(weights.spec_hash)[:8]
    body += struct.pack("<Q", len(weights))
    body += weights.values.astype("<f8").tobytes()
    crc = zlib.crc32(bytes(body)) & 0xFFFFFFFF
    body += struct.pack("<I", crc)
    tmp = f"{path}.tmp"
    with open(tmp, "wb") as fh:
        fh.write(bytes(body))
        fh.flush()
        os.fsync(fh.fileno())
    os.replace(tmp, path)


def load(path, spec: NetworkSpec) -> NetworkWeights:
    """Read and validate a checkpoint against the given spec."""
    with open(path, "rb") as fh:
        blob = fh.read()
    header = 4 + 2 + 8 + 8
    if len(blob) < header + 4:
        raise CorruptCheckpoint(f"{path}: truncated header")
    if blob[:4] != MAGIC:
        raise CorruptCheckpoint(f"{path}: bad magic bytes")
    (version,) = struct.unpack("<H", blob[4:6])
    if version != VERSION:
        raise CorruptCheckpoint(f"{path}: unsupported format version {version}")
    hash_prefix = blob[6:14]
    (count,) = struct.unpack("<Q", blob[14:22])
    expected = header + 8 * count + 4
    if len(blob) != expected:
        raise CorruptCheckpoint(
            f"{path}: size {len(blob)} != expected {expected} for {count} params")
    (crc_stored,) = struct.unpack("<I", blob[-4:])
    if zlib.crc32(blob[:-4]) & 0xFFFFFFFF != crc_stored:
        raise CorruptCheckpoint(f"{path}: checksum mismatch")
    spec_hash = spec.spec_hash()
    if hash_prefix != bytes.fromhex(spec_hash)[:8]:
        raise SpecMismatch(f"{path}: checkpoint was written for a different spec")
    layout = build_layout(spec)
    if count != layout.size:
        raise SpecMismatch(
            f"{path}: parameter count {count} != spec layout {layout.size}")
    values = np.frombuffer(blob[22:-4], dtype="<f8").astype(np.float64)
    return NetworkWeights(values, layout, spec_hash)
