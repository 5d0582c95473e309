"""On-disk cache for enumerated level sets.

Each cached file holds the distinct field residues of one level together with
their multiplicities.  Digit witnesses are deliberately not stored: they are
cheap to drop and excluding them keeps cold and warm runs byte-identical.

Layout: ``<cache_dir>/<sha256 of the minimal polynomial>/<alphabet>_<n>.lvl``
with a per-directory lock file guarding concurrent writers.  Every integer in
the file is length-prefixed (4-byte big-endian length, then the two's
complement big-endian payload), so the format is independent of word size.
"""

from __future__ import annotations

import hashlib
import os
import struct
from fractions import Fraction
from typing import Sequence

from filelock import FileLock

from .polynomials import IntPolynomial

_FORMAT_VERSION = 1

Entry = tuple[tuple[Fraction, ...], int]


def _encode_int(value: int) -> bytes:
    nbytes = (value.bit_length() + 8) // 8  # one spare bit for the sign
    payload = value.to_bytes(nbytes, "big", signed=True)
    return struct.pack(">I", len(payload)) + payload


class _Reader:
    def __init__(self, blob: bytes):
        self.blob = blob
        self.pos = 0

    def read_int(self) -> int:
        if self.pos + 4 > len(self.blob):
            raise ValueError("truncated cache file")
        (length,) = struct.unpack_from(">I", self.blob, self.pos)
        self.pos += 4
        if self.pos + length > len(self.blob):
            raise ValueError("truncated cache file")
        value = int.from_bytes(self.blob[self.pos : self.pos + length], "big", signed=True)
        self.pos += length
        return value

    def done(self) -> bool:
        return self.pos == len(self.blob)


def _poly_digest(poly: IntPolynomial) -> str:
    text = ",".join(str(c) for c in poly.coeffs)
    return hashlib.sha256(text.encode("ascii")).hexdigest()


def _alphabet_tag(alphabet: Sequence[int]) -> str:
    return "d" + "_".join(str(a).replace("-", "m") for a in alphabet)


def cache_path(cache_dir: str, poly: IntPolynomial, n: int, alphabet: Sequence[int]) -> str:
    subdir = os.path.join(cache_dir, _poly_digest(poly))
    return os.path.join(subdir, f"{_alphabet_tag(alphabet)}_{n:04d}.lvl")


def _serialize(poly: IntPolynomial, n: int, alphabet: Sequence[int], entries: Sequence[Entry]) -> bytes:
    out = [_encode_int(_FORMAT_VERSION)]
    out.append(_encode_int(len(poly.coeffs)))
    out.extend(_encode_int(c) for c in poly.coeffs)
    out.append(_encode_int(n))
    out.append(_encode_int(len(alphabet)))
    out.extend(_encode_int(a) for a in alphabet)
    out.append(_encode_int(len(entries)))
    for residue, multiplicity in entries:
        for coord in residue:
            frac = Fraction(coord)
            out.append(_encode_int(frac.numerator))
            out.append(_encode_int(frac.denominator))
        out.append(_encode_int(multiplicity))
    return b"".join(out)


def store(cache_dir: str, poly: IntPolynomial, n: int,
          alphabet: Sequence[int], entries: Sequence[Entry]) -> str:
    """Write one level atomically; concurrent writers serialize on a lock."""
    path = cache_path(cache_dir, poly, n, alphabet)
    subdir = os.path.dirname(path)
    os.makedirs(subdir, exist_ok=True)
    blob = _serialize(poly, n, alphabet, entries)
    with FileLock(os.path.join(subdir, ".lock")):
        tmp = path + ".tmp"
        with open(tmp, "wb") as fh:
            fh.write(blob)
        os.replace(tmp, path)
    return path


def load(cache_dir: str, poly: IntPolynomial, n: int,
         alphabet: Sequence[int]) -> list[Entry] | None:
    """Return cached ``(residue, multiplicity)`` pairs, or None on a miss.

    A malformed or mismatched file is treated as a miss rather than an error;
    the caller recomputes and overwrites it.
    """
    path = cache_path(cache_dir, poly, n, alphabet)
    subdir = os.path.dirname(path)
    if not os.path.exists(path):
        return None
    with FileLock(os.path.join(subdir, ".lock")):
        try:
            with open(path, "rb") as fh:
                blob = fh.read()
        except OSError:
            return None
    try:
        rd = _Reader(blob)
        if rd.read_int() != _FORMAT_VERSION:
            return None
        ncoeffs = rd.read_int()
        coeffs = tuple(rd.read_int() for _ in range(ncoeffs))
        if coeffs != poly.coeffs or rd.read_int() != n:
            return None
        nalpha = rd.read_int()
        if tuple(rd.read_int() for _ in range(nalpha)) != tuple(alphabet):
            return None
        count = rd.read_int()
        degree = len(coeffs) - 1
        entries: list[Entry] = []
        for _ in range(count):
            coords = []
            for _ in range(degree):
                num = rd.read_int()
                den = rd.read_int()
                coords.append(Fraction(num, den))
            entries.append((tuple(coords), rd.read_int()))
        if not rd.done():
            return None
        return entries
    except (ValueError, ZeroDivisionError):
        return None
