import numpy as np

from aeseqc.gf256 import (
    MUL_TABLE,
    gf_add,
    gf_matrix_compose,
    gf_matrix_identity,
    gf_matrix_mul,
    gf_mul,
)

MIX_ROWS = [(2, 3, 1, 1), (1, 2, 3, 1), (1, 1, 2, 3), (3, 1, 1, 2)]
INV_MIX_ROWS = [(14, 11, 13, 9), (9, 14, 11, 13), (13, 9, 14, 11), (11, 13, 9, 14)]
TWO_SHIFT_ROWS = [(3, 0, 2, 0), (0, 3, 0, 2), (2, 0, 3, 0), (0, 2, 0, 3)]


def slow_mul(a: int, b: int) -> int:
    """Independent oracle: full carry-less product, then long-division
    reduction modulo x^8+x^4+x^3+x+1 (structurally unlike the ship code's
    interleaved shift-and-XOR loop)."""
    prod = 0
    for i in range(8):
        if (b >> i) & 1:
            prod ^= a << i
    for bit in range(14, 7, -1):
        if prod & (1 << bit):
            prod ^= 0x11B << (bit - 8)
    return prod


def test_add_examples():
    assert gf_add(0x00, 0x57) == 0x57
    assert gf_add(0x57, 0x57) == 0x00
    assert gf_add(0x0E, 0x09) == 0x07


def test_mul_examples():
    assert gf_mul(0x01, 0xAB) == 0xAB
    assert gf_mul(0x02, 0x80) == 0x1B
    assert gf_mul(0x53, 0xCA) == 0x01


def test_mul_matches_slow_oracle_exhaustively():
    for a in range(256):
        for b in range(256):
            assert gf_mul(a, b) == slow_mul(a, b) == MUL_TABLE[a, b]


def test_mul_commutative_exhaustively():
    assert np.array_equal(MUL_TABLE, MUL_TABLE.T)


def test_mul_distributes_over_add_exhaustively():
    a = np.arange(256, dtype=np.uint8)[:, None, None]
    b = np.arange(256, dtype=np.uint8)[None, :, None]
    c = np.arange(256, dtype=np.uint8)[None, None, :]
    assert np.array_equal(MUL_TABLE[a, b ^ c], MUL_TABLE[a, b] ^ MUL_TABLE[a, c])


def test_mul_associative_exhaustively():
    a = np.arange(256, dtype=np.uint8)[:, None, None]
    b = np.arange(256, dtype=np.uint8)[None, :, None]
    c = np.arange(256, dtype=np.uint8)[None, None, :]
    assert np.array_equal(MUL_TABLE[MUL_TABLE[a, b], c], MUL_TABLE[a, MUL_TABLE[b, c]])


def test_times_three_is_times_two_plus_identity():
    a = np.arange(256, dtype=np.uint8)
    assert np.array_equal(MUL_TABLE[a, 3], MUL_TABLE[a, 2] ^ a)


def test_circulant_row_constants_xor_to_one():
    assert 2 ^ 3 ^ 1 ^ 1 == 1
    assert 14 ^ 11 ^ 13 ^ 9 == 1


def test_matrix_mul_identity_and_zero():
    v = np.array([0x12, 0x34, 0x56, 0x78], dtype=np.uint8)
    assert np.array_equal(gf_matrix_mul(gf_matrix_identity(), v), v)
    mix = np.array(MIX_ROWS, dtype=np.uint8)
    assert np.array_equal(gf_matrix_mul(mix, np.zeros(4, dtype=np.uint8)), np.zeros(4))


def test_matrix_mul_unit_vector_reads_first_column():
    mix = np.array(MIX_ROWS, dtype=np.uint8)
    e1 = np.array([1, 0, 0, 0], dtype=np.uint8)
    assert np.array_equal(gf_matrix_mul(mix, e1), np.array([2, 1, 1, 3]))


def test_matrix_mul_batched_matches_loop():
    rng = np.random.default_rng(1)
    mix = np.array(MIX_ROWS, dtype=np.uint8)
    vecs = rng.integers(0, 256, size=(50, 4), dtype=np.uint8)
    batched = gf_matrix_mul(mix, vecs)
    for i in range(50):
        assert np.array_equal(batched[i], gf_matrix_mul(mix, vecs[i]))


def test_compose_identity_is_neutral():
    mix = np.array(MIX_ROWS, dtype=np.uint8)
    assert np.array_equal(gf_matrix_compose(gf_matrix_identity(), mix), mix)
    assert np.array_equal(gf_matrix_compose(mix, gf_matrix_identity()), mix)


def test_mix_and_inv_mix_compose_to_identity():
    mix = np.array(MIX_ROWS, dtype=np.uint8)
    inv = np.array(INV_MIX_ROWS, dtype=np.uint8)
    ident = gf_matrix_identity()
    assert np.array_equal(gf_matrix_compose(mix, inv), ident)
    assert np.array_equal(gf_matrix_compose(inv, mix), ident)


def test_two_shift_matrix_is_involution():
    # top-left entry of the square: 3*3 + 2*2 = 5 + 4 = 1
    assert gf_mul(3, 3) ^ gf_mul(2, 2) == 1
    m = np.array(TWO_SHIFT_ROWS, dtype=np.uint8)
    assert np.array_equal(gf_matrix_compose(m, m), gf_matrix_identity())


def test_compose_agrees_with_sequential_application():
    rng = np.random.default_rng(2)
    a = rng.integers(0, 256, size=(4, 4), dtype=np.uint8)
    b = rng.integers(0, 256, size=(4, 4), dtype=np.uint8)
    for _ in range(20):
        v = rng.integers(0, 256, size=4, dtype=np.uint8)
        assert np.array_equal(
            gf_matrix_mul(gf_matrix_compose(a, b), v),
            gf_matrix_mul(a, gf_matrix_mul(b, v)),
        )
