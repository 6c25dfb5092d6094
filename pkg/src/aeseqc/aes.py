"""Complete AES-128: round operations, key expansion, block encrypt/decrypt.

State layout follows FIPS 197: a 16-byte block fills a 4x4 byte grid
column-major, so block byte i lands at (row i % 4, column i // 4). All
round operations accept any leading batch dimensions over a trailing
(4, 4) state, so a (N, 4, 4) array of states is processed in one call.

The S-box is generated at import from its algebraic definition
(multiplicative inverse in GF(2^8), then the affine bit transform with
constant 0x63) rather than hard-coded, so the table itself is testable.
"""

from __future__ import annotations

import numpy as np

from .gf256 import MUL_TABLE

#: Round constants for the 10 key-schedule transitions.
RCON = (0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80, 0x1B, 0x36)

#: MixColumns / InvMixColumns circulant matrices.
MIX_MATRIX = np.array(
    [[2, 3, 1, 1],
     [1, 2, 3, 1],
     [1, 1, 2, 3],
     [3, 1, 1, 2]], dtype=np.uint8)
INV_MIX_MATRIX = np.array(
    [[14, 11, 13, 9],
     [9, 14, 11, 13],
     [13, 9, 14, 11],
     [11, 13, 9, 14]], dtype=np.uint8)
MIX_MATRIX.setflags(write=False)
INV_MIX_MATRIX.setflags(write=False)


def _build_sbox() -> tuple[np.ndarray, np.ndarray]:
    # Multiplicative inverses read off the product table: MUL_TABLE[a, b] == 1
    # exactly when b = a^-1. Zero stays zero.
    inverse = np.zeros(256, dtype=np.uint8)
    ones = np.argwhere(MUL_TABLE == 1)
    inverse[ones[:, 0]] = ones[:, 1]

    def rotl(v: np.ndarray, n: int) -> np.ndarray:
        w = v.astype(np.uint16)
        return (((w << n) | (w >> (8 - n))) & 0xFF).astype(np.uint8)

    sbox = inverse ^ rotl(inverse, 1) ^ rotl(inverse, 2) ^ rotl(inverse, 3) ^ rotl(inverse, 4) ^ 0x63
    inv_sbox = np.zeros(256, dtype=np.uint8)
    inv_sbox[sbox] = np.arange(256, dtype=np.uint8)
    sbox.setflags(write=False)
    inv_sbox.setflags(write=False)
    return sbox, inv_sbox


SBOX, INV_SBOX = _build_sbox()


# ---------------------------------------------------------------------------
# block <-> state <-> hex
# ---------------------------------------------------------------------------

def state_from_block(block) -> np.ndarray:
    """16-byte block(s) to (..., 4, 4) state(s), column-major fill."""
    arr = np.asarray(bytearray(block) if isinstance(block, (bytes, bytearray)) else block,
                     dtype=np.uint8)
    if arr.shape[-1] != 16:
        raise ValueError(f"block must be 16 bytes, got {arr.shape[-1]}")
    return arr.reshape(arr.shape[:-1] + (4, 4)).swapaxes(-1, -2)


def block_from_state(state: np.ndarray) -> bytes:
    """Single (4, 4) state back to its 16-byte block."""
    s = np.asarray(state, dtype=np.uint8)
    return s.swapaxes(-1, -2).reshape(s.shape[:-2] + (16,)).tobytes()


def block_from_hex(text: str) -> bytes:
    """Parse a 32-hex-digit block, byte 0 first."""
    block = bytes.fromhex(text)
    if len(block) != 16:
        raise ValueError(f"expected 32 hex digits, got {len(text)}")
    return block


def hex_from_block(block: bytes) -> str:
    return block.hex()


# ---------------------------------------------------------------------------
# round operations, batched over leading dimensions
# ---------------------------------------------------------------------------

def sub_bytes(state: np.ndarray) -> np.ndarray:
    return SBOX[state]


def inv_sub_bytes(state: np.ndarray) -> np.ndarray:
    return INV_SBOX[state]


def shift_rows(state: np.ndarray) -> np.ndarray:
    """Rotate row r left by r positions."""
    return np.stack([np.roll(state[..., r, :], -r, axis=-1) for r in range(4)], axis=-2)


def inv_shift_rows(state: np.ndarray) -> np.ndarray:
    """Rotate row r right by r positions."""
    return np.stack([np.roll(state[..., r, :], r, axis=-1) for r in range(4)], axis=-2)


def _mul_columns(matrix: np.ndarray, state: np.ndarray) -> np.ndarray:
    # (..., i, j, c) = matrix[i, j] * state[..., j, c], XOR-reduced over j.
    prod = MUL_TABLE[matrix[:, :, None], state[..., None, :, :]]
    return np.bitwise_xor.reduce(prod, axis=-2)


def mix_columns(state: np.ndarray) -> np.ndarray:
    return _mul_columns(MIX_MATRIX, state)


def inv_mix_columns(state: np.ndarray) -> np.ndarray:
    return _mul_columns(INV_MIX_MATRIX, state)


def add_round_key(state: np.ndarray, key: np.ndarray) -> np.ndarray:
    return state ^ key


# ---------------------------------------------------------------------------
# key schedule
# ---------------------------------------------------------------------------

def expand_key_state(key_state: np.ndarray) -> np.ndarray:
    """Expand (..., 4, 4) cipher-key state(s) to (..., 11, 4, 4) round keys.

    Column 0 of round i+1 is column 0 of round i XOR G(last column of
    round i), where G rotates the column up one byte, substitutes each
    byte through the S-box and XORs RCON[i] into the first byte.
    Columns 1..3 chain: col j of round i+1 = col j-1 of round i+1 XOR
    col j of round i.
    """
    k = np.asarray(key_state, dtype=np.uint8)
    keys = [k]
    for rnd in range(10):
        prev = keys[-1]
        g = SBOX[np.roll(prev[..., :, 3], -1, axis=-1)]
        g[..., 0] ^= RCON[rnd]
        cols = [prev[..., :, 0] ^ g]
        for j in range(1, 4):
            cols.append(cols[-1] ^ prev[..., :, j])
        keys.append(np.stack(cols, axis=-1))
    return np.stack(keys, axis=-3)


def expand_key(key: bytes) -> np.ndarray:
    """Expand a 16-byte cipher key to the (11, 4, 4) round-key schedule."""
    return expand_key_state(state_from_block(key))


# ---------------------------------------------------------------------------
# full cipher
# ---------------------------------------------------------------------------

def encrypt_state(state: np.ndarray, schedule: np.ndarray) -> np.ndarray:
    """AES-128 on (..., 4, 4) state(s) with (..., 11, 4, 4) round keys."""
    s = add_round_key(state, schedule[..., 0, :, :])
    for rnd in range(1, 10):
        s = add_round_key(mix_columns(shift_rows(sub_bytes(s))), schedule[..., rnd, :, :])
    return add_round_key(shift_rows(sub_bytes(s)), schedule[..., 10, :, :])


def decrypt_state(state: np.ndarray, schedule: np.ndarray) -> np.ndarray:
    s = add_round_key(state, schedule[..., 10, :, :])
    s = inv_sub_bytes(inv_shift_rows(s))
    for rnd in range(9, 0, -1):
        s = inv_mix_columns(add_round_key(s, schedule[..., rnd, :, :]))
        s = inv_sub_bytes(inv_shift_rows(s))
    return add_round_key(s, schedule[..., 0, :, :])


def encrypt_block(plaintext: bytes, key: bytes) -> bytes:
    """Encrypt one 16-byte block under a 16-byte key."""
    return block_from_state(encrypt_state(state_from_block(plaintext), expand_key(key)))


def decrypt_block(ciphertext: bytes, key: bytes) -> bytes:
    """Exact inverse of encrypt_block."""
    return block_from_state(decrypt_state(state_from_block(ciphertext), expand_key(key)))
