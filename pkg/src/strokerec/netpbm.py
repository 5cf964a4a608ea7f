"""Binary Netpbm (P5 grayscale / P6 color) encoding and decoding.

Images are float arrays in [0, 1]; files use maxval 255 with byte values
round(255 * pixel).
"""

from __future__ import annotations

import pathlib

import numpy as np


def encode_pgm(img: np.ndarray) -> bytes:
    if img.ndim != 2:
        raise ValueError(f"PGM wants a 2-d grayscale image, got shape {img.shape}")
    data = np.rint(np.clip(img, 0.0, 1.0) * 255).astype(np.uint8)
    header = f"P5\n{img.shape[1]} {img.shape[0]}\n255\n".encode("ascii")
    return header + data.tobytes()


def encode_ppm(img: np.ndarray) -> bytes:
    if img.ndim != 3 or img.shape[2] != 3:
        raise ValueError(f"PPM wants an HxWx3 image, got shape {img.shape}")
    data = np.rint(np.clip(img, 0.0, 1.0) * 255).astype(np.uint8)
    header = f"P6\n{img.shape[1]} {img.shape[0]}\n255\n".encode("ascii")
    return header + data.tobytes()


def write_pgm(path, img: np.ndarray) -> None:
    pathlib.Path(path).write_bytes(encode_pgm(img))


def write_ppm(path, img: np.ndarray) -> None:
    pathlib.Path(path).write_bytes(encode_ppm(img))


def _tokens(data: bytes, count: int):
    # Yields `count` header tokens, skipping whitespace and # comments, and
    # finally the offset of the first raster byte (one whitespace after the
    # last token).
    pos = 0
    got = 0
    while got < count:
        while pos < len(data) and data[pos : pos + 1].isspace():
            pos += 1
        if pos < len(data) and data[pos] == ord("#"):
            while pos < len(data) and data[pos] != ord("\n"):
                pos += 1
            continue
        start = pos
        while pos < len(data) and not data[pos : pos + 1].isspace():
            pos += 1
        if start == pos:
            raise ValueError("truncated Netpbm header")
        yield data[start:pos]
        got += 1
    yield pos + 1


def decode_image(data: bytes) -> np.ndarray:
    """Decode P5 or P6 bytes into a float32 image in [0, 1] (HxW or HxWx3)."""
    toks = list(_tokens(data, 4))
    magic, w, h, maxval = toks[0], int(toks[1]), int(toks[2]), int(toks[3])
    offset = toks[4]
    if magic == b"P5":
        channels = 1
    elif magic == b"P6":
        channels = 3
    else:
        raise ValueError(f"unsupported Netpbm magic {magic!r}")
    if not (0 < maxval < 256):
        raise ValueError(f"unsupported maxval {maxval}")
    need = w * h * channels
    raster = data[offset : offset + need]
    if len(raster) < need:
        raise ValueError(f"truncated raster: expected {need} bytes, got {len(raster)}")
    img = np.frombuffer(raster, dtype=np.uint8).astype(np.float32) / maxval
    if channels == 1:
        return img.reshape(h, w)
    return img.reshape(h, w, 3)


def read_image(path) -> np.ndarray:
    return decode_image(pathlib.Path(path).read_bytes())
