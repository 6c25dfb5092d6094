"""Arithmetic in GF(2^8) = GF(2)[x] / (x^8 + x^4 + x^3 + x + 1).

A field element is a byte 0..255; bit k is the coefficient of x^k.
Addition is bitwise XOR (every element is its own additive inverse).
Multiplication reduces modulo 0x11B, the bit pattern of the modulus.

`gf_mul` is the shift-and-conditionally-XOR (Russian peasant) loop.
`MUL_TABLE` is the full 256x256 product table, built once at import by
running the same loop vectorised over the whole grid; the matrix helpers
and every hot caller index into it instead of recomputing products.
"""

from __future__ import annotations

import numpy as np

#: Reduction modulus x^8 + x^4 + x^3 + x + 1.
MODULUS = 0x11B


def gf_add(a: int, b: int) -> int:
    """Sum in GF(2^8): bitwise XOR."""
    return a ^ b


def gf_mul(a: int, b: int) -> int:
    """Product in GF(2^8), reduced modulo 0x11B."""
    r = 0
    for _ in range(8):
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & 0x100:
            a ^= MODULUS
    return r


def _build_mul_table() -> np.ndarray:
    a = np.broadcast_to(np.arange(256, dtype=np.uint16)[:, None], (256, 256)).copy()
    b = np.broadcast_to(np.arange(256, dtype=np.uint16)[None, :], (256, 256)).copy()
    acc = np.zeros((256, 256), dtype=np.uint16)
    for _ in range(8):
        acc ^= np.where(b & 1, a, 0)
        b >>= 1
        a <<= 1
        a = np.where(a & 0x100, a ^ MODULUS, a)
    out = acc.astype(np.uint8)
    out.setflags(write=False)
    return out


#: MUL_TABLE[a, b] == gf_mul(a, b) for all byte pairs. Read-only.
MUL_TABLE = _build_mul_table()


def gf_matrix_mul(m: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Matrix-vector product over GF(2^8).

    `m` is (4, 4); `v` is (..., 4) with any leading batch dimensions.
    Component i of the result is the XOR over j of m[i,j]*v[j].
    """
    m = np.asarray(m, dtype=np.uint8)
    v = np.asarray(v, dtype=np.uint8)
    prod = MUL_TABLE[m, v[..., None, :]]  # (..., i, j) = m[i,j] * v[..., j]
    return np.bitwise_xor.reduce(prod, axis=-1)


def gf_matrix_compose(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product over GF(2^8): (a @ b) v == a (b v) for all v."""
    a = np.asarray(a, dtype=np.uint8)
    b = np.asarray(b, dtype=np.uint8)
    prod = MUL_TABLE[a[:, :, None], b[None, :, :]]  # (i, j, k) = a[i,j] * b[j,k]
    return np.bitwise_xor.reduce(prod, axis=1)


def gf_matrix_identity(n: int = 4) -> np.ndarray:
    return np.eye(n, dtype=np.uint8)
