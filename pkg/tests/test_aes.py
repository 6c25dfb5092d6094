import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from aeseqc import aes

# FIPS 197 known answers
KAT_KEY = bytes.fromhex("000102030405060708090a0b0c0d0e0f")
KAT_PLAIN = bytes.fromhex("00112233445566778899aabbccddeeff")
KAT_CIPHER = bytes.fromhex("69c4e0d86a7b0430d8cdb78070b4c55a")
EXAMPLE_KEY = bytes.fromhex("2b7e151628aed2a6abf7158809cf4f3c")
EXAMPLE_PLAIN = bytes.fromhex("3243f6a8885a308d313198a2e0370734")
EXAMPLE_CIPHER = bytes.fromhex("3925841d02dc09fbdc118597196a0b32")
EXAMPLE_ROUND1_KEY = bytes.fromhex("a0fafe1788542cb123a339392a6c7605")
EXAMPLE_ROUND10_KEY = bytes.fromhex("d014f9a8c9ee2589e13f0cc8b6630ca6")

blocks = st.binary(min_size=16, max_size=16)


def test_state_layout_is_column_major():
    state = aes.state_from_block(bytes(range(16)))
    for i in range(16):
        assert state[i % 4, i // 4] == i
    assert aes.block_from_state(state) == bytes(range(16))


def test_state_from_block_rejects_wrong_length():
    with pytest.raises(ValueError):
        aes.state_from_block(b"\x00" * 15)


def test_hex_block_round_trip():
    assert aes.block_from_hex(KAT_KEY.hex()) == KAT_KEY
    assert aes.hex_from_block(KAT_KEY) == KAT_KEY.hex()
    with pytest.raises(ValueError):
        aes.block_from_hex("00" * 15)
    with pytest.raises(ValueError):
        aes.block_from_hex("zz" * 16)


def test_sbox_is_bijective_and_inverse_table_matches():
    assert np.array_equal(np.sort(aes.SBOX), np.arange(256))
    assert np.array_equal(aes.INV_SBOX[aes.SBOX], np.arange(256))


def test_sbox_known_entries():
    # first four table entries and the worked-example substitution
    assert list(aes.SBOX[:4]) == [0x63, 0x7C, 0x77, 0x7B]
    assert aes.SBOX[0x53] == 0xED


def test_sub_bytes_of_zero_state():
    zero = np.zeros((4, 4), dtype=np.uint8)
    assert (aes.sub_bytes(zero) == 0x63).all()
    assert (aes.inv_sub_bytes(np.full((4, 4), 0x63, dtype=np.uint8)) == 0).all()


def test_shift_rows_matches_single_shift_layout():
    # entry r*4+c marks (row r, col c); after one shift row 1 reads
    # (A12 A13 A14 A11) in 1-based terms
    state = np.arange(16, dtype=np.uint8).reshape(4, 4)
    shifted = aes.shift_rows(state)
    assert np.array_equal(shifted[0], [0, 1, 2, 3])
    assert np.array_equal(shifted[1], [5, 6, 7, 4])
    assert np.array_equal(shifted[2], [10, 11, 8, 9])
    assert np.array_equal(shifted[3], [15, 12, 13, 14])


def test_shift_rows_four_times_is_identity():
    rng = np.random.default_rng(3)
    state = rng.integers(0, 256, size=(4, 4), dtype=np.uint8)
    out = state
    for _ in range(4):
        out = aes.shift_rows(out)
    assert np.array_equal(out, state)


def test_mix_columns_known_column():
    state = np.zeros((4, 4), dtype=np.uint8)
    state[:, 0] = [0xDB, 0x13, 0x53, 0x45]
    mixed = aes.mix_columns(state)
    assert list(mixed[:, 0]) == [0x8E, 0x4D, 0xA1, 0xBC]
    assert np.array_equal(aes.inv_mix_columns(mixed), state)


def test_mix_columns_zero_column_stays_zero():
    zero = np.zeros((4, 4), dtype=np.uint8)
    assert np.array_equal(aes.mix_columns(zero), zero)
    assert np.array_equal(aes.inv_mix_columns(zero), zero)


def test_mix_columns_preserves_column_xor():
    rng = np.random.default_rng(4)
    states = rng.integers(0, 256, size=(1000, 4, 4), dtype=np.uint8)
    for op in (aes.mix_columns, aes.inv_mix_columns):
        assert np.array_equal(
            np.bitwise_xor.reduce(op(states), axis=-2),
            np.bitwise_xor.reduce(states, axis=-2),
        )


def test_add_round_key_involution():
    rng = np.random.default_rng(5)
    s = rng.integers(0, 256, size=(4, 4), dtype=np.uint8)
    k = rng.integers(0, 256, size=(4, 4), dtype=np.uint8)
    assert np.array_equal(aes.add_round_key(s, np.zeros((4, 4), dtype=np.uint8)), s)
    assert np.array_equal(aes.add_round_key(s, s), np.zeros((4, 4)))
    assert np.array_equal(aes.add_round_key(aes.add_round_key(s, k), k), s)


def test_expand_key_round0_is_cipher_key():
    schedule = aes.expand_key(EXAMPLE_KEY)
    assert schedule.shape == (11, 4, 4)
    assert aes.block_from_state(schedule[0]) == EXAMPLE_KEY


def test_expand_key_zero_key_first_column():
    schedule = aes.expand_key(bytes(16))
    assert list(schedule[1][:, 0]) == [0x62, 0x63, 0x63, 0x63]


def test_expand_key_against_published_schedule():
    schedule = aes.expand_key(EXAMPLE_KEY)
    assert aes.block_from_state(schedule[1]) == EXAMPLE_ROUND1_KEY
    assert aes.block_from_state(schedule[10]) == EXAMPLE_ROUND10_KEY


def test_encrypt_known_answers():
    assert aes.encrypt_block(KAT_PLAIN, KAT_KEY) == KAT_CIPHER
    assert aes.encrypt_block(EXAMPLE_PLAIN, EXAMPLE_KEY) == EXAMPLE_CIPHER


def test_decrypt_known_answer():
    assert aes.decrypt_block(KAT_CIPHER, KAT_KEY) == KAT_PLAIN


@given(plaintext=blocks, key=blocks)
def test_encrypt_decrypt_round_trip(plaintext, key):
    assert aes.decrypt_block(aes.encrypt_block(plaintext, key), key) == plaintext


@given(plaintext=blocks, key=blocks)
def test_sub_shift_round_trips(plaintext, key):
    state = aes.state_from_block(plaintext)
    assert np.array_equal(aes.inv_sub_bytes(aes.sub_bytes(state)), state)
    assert np.array_equal(aes.inv_shift_rows(aes.shift_rows(state)), state)


def test_distinct_plaintexts_give_distinct_ciphertexts():
    a = aes.encrypt_block(bytes(16), KAT_KEY)
    b = aes.encrypt_block(bytes(15) + b"\x01", KAT_KEY)
    assert a != b


def test_batched_encrypt_matches_scalar():
    rng = np.random.default_rng(6)
    plains = rng.integers(0, 256, size=(20, 4, 4), dtype=np.uint8)
    keys = rng.integers(0, 256, size=(20, 4, 4), dtype=np.uint8)
    schedules = aes.expand_key_state(keys)
    batched = aes.encrypt_state(plains, schedules)
    for i in range(20):
        expected = aes.encrypt_block(aes.block_from_state(plains[i]),
                                     aes.block_from_state(keys[i]))
        assert aes.block_from_state(batched[i]) == expected


def test_agrees_with_independent_aes_implementation():
    pytest.importorskip("cryptography")
    from cryptography.hazmat.primitives.ciphers import Cipher, algorithms, modes

    rng = np.random.default_rng(7)
    for _ in range(50):
        key = rng.integers(0, 256, size=16, dtype=np.uint8).tobytes()
        plain = rng.integers(0, 256, size=16, dtype=np.uint8).tobytes()
        enc = Cipher(algorithms.AES(key), modes.ECB()).encryptor()
        assert aes.encrypt_block(plain, key) == enc.update(plain) + enc.finalize()
