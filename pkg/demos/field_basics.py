#!/usr/bin/env python3
# Tour of the GF(2^8) layer: products, the 256x256 table, and the four
# circulant matrices that drive everything else.

import numpy as np

from aeseqc import gf_add, gf_matrix_compose, gf_matrix_identity, gf_matrix_mul, gf_mul
from aeseqc.aes import INV_MIX_MATRIX, MIX_MATRIX

print("addition is XOR:        0x57 + 0x83 =", hex(gf_add(0x57, 0x83)))
print("multiplication mod 0x11B: 0x57 * 0x83 =", hex(gf_mul(0x57, 0x83)))
print("0x53 and 0xCA are inverses:", gf_mul(0x53, 0xCA) == 1)

# the row constants of both mixing matrices fold to 1, which is exactly
# why the column XOR survives the mixing step
print("2^3^1^1 =", 2 ^ 3 ^ 1 ^ 1, "   14^11^13^9 =", 14 ^ 11 ^ 13 ^ 9)

print("\nMixColumns matrix:")
print(MIX_MATRIX)
print("InvMixColumns matrix:")
print(INV_MIX_MATRIX)
print("their product over GF(2^8):")
print(gf_matrix_compose(MIX_MATRIX, INV_MIX_MATRIX))

# matrix action on a class vector
v = np.array([1, 0, 0, 0], dtype=np.uint8)
print("\nMixColumns matrix applied to (1,0,0,0):", gf_matrix_mul(MIX_MATRIX, v))
print("identity applied to anything is itself:",
      np.array_equal(gf_matrix_mul(gf_matrix_identity(), v), v))
