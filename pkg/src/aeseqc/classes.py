"""XOR equivalence-class tracking for AES states.

The class value of a 4-byte column is the XOR of its bytes; a 128-bit
state reduces to the 4-byte class vector (Q1, Q2, Q3, Q4), one value per
*logical* column. A logical column is the set of four bytes that shared
a physical column before any ShiftRows ran; after k cumulative shifts
its bytes sit at (row r, physical column (j - k*r) mod 4). The phase k
lives in {0, 1, 2, 3} and all arithmetic on it is mod 4.

One encryption-direction step ShiftRows-then-MixColumns maps the class
vector linearly over GF(2^8); which 4x4 matrix applies depends only on
the phase. The decryption-direction step InvMixColumns-then-
InvShiftRows applies the exact inverse matrix. The four forward/backward
matrix pairs:

    k=0: the MixColumns circulant (2,3,1,1)   /  InvMixColumns (14,11,13,9)
    k=1: rows (3,0,2,0)... (self-inverse, shared by both directions)
    k=2: rows (2,1,1,3)...                    /  rows (14,9,13,11)...
    k=3: identity (the cycle closes after four shifts)

AddRoundKey is XOR, so it adds the key state's own class vector at the
current phase. SubBytes is the one step with no such matrix; its
statistical effect on class values lives in the distribution module.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from . import aes
from .gf256 import gf_matrix_identity, gf_matrix_mul

_TWO_SHIFT = np.array(
    [[3, 0, 2, 0],
     [0, 3, 0, 2],
     [2, 0, 3, 0],
     [0, 2, 0, 3]], dtype=np.uint8)
_THREE_SHIFT_FWD = np.array(
    [[2, 1, 1, 3],
     [3, 2, 1, 1],
     [1, 3, 2, 1],
     [1, 1, 3, 2]], dtype=np.uint8)
_THREE_SHIFT_BWD = np.array(
    [[14, 9, 13, 11],
     [11, 14, 9, 13],
     [13, 11, 14, 9],
     [9, 13, 11, 14]], dtype=np.uint8)

FORWARD_STEP_MATRICES = (aes.MIX_MATRIX, _TWO_SHIFT, _THREE_SHIFT_FWD, gf_matrix_identity())
BACKWARD_STEP_MATRICES = (aes.INV_MIX_MATRIX, _TWO_SHIFT, _THREE_SHIFT_BWD, gf_matrix_identity())
for _m in FORWARD_STEP_MATRICES + BACKWARD_STEP_MATRICES:
    _m.setflags(write=False)

# Per-phase physical-column index of logical column j in row r.
_LOGICAL_COLS = tuple(
    (np.arange(4)[None, :] - k * np.arange(4)[:, None]) % 4 for k in range(4)
)


def _check_phase(phase: int) -> int:
    if phase not in (0, 1, 2, 3):
        raise ValueError(f"phase must be in {{0,1,2,3}}, got {phase}")
    return phase


def logical_class(state: np.ndarray, phase: int) -> np.ndarray:
    """Class vector of (..., 4, 4) state(s) after `phase` cumulative shifts.

    Component j is the XOR over rows r of the byte at physical column
    (j - phase*r) mod 4. At phase 0 this is the plain column XOR.
    """
    _check_phase(phase)
    s = np.asarray(state, dtype=np.uint8)
    gathered = s[..., np.arange(4)[:, None], _LOGICAL_COLS[phase]]
    return np.bitwise_xor.reduce(gathered, axis=-2)


def forward_step_matrix(phase: int) -> np.ndarray:
    """Class matrix of one ShiftRows+MixColumns step entered at `phase`."""
    return FORWARD_STEP_MATRICES[_check_phase(phase)]


def backward_step_matrix(phase: int) -> np.ndarray:
    """Inverse of forward_step_matrix(phase), i.e. the class matrix of one
    InvMixColumns+InvShiftRows step undoing the forward step entered at
    `phase`."""
    return BACKWARD_STEP_MATRICES[_check_phase(phase)]


def propagate_forward(classes: np.ndarray, phase: int, steps: int,
                      matrices=None) -> tuple[np.ndarray, int]:
    """Push a class vector through `steps` ShiftRows+MixColumns steps.

    Returns (final class vector, final phase). `matrices` overrides the
    per-phase forward matrices (verification hook).
    """
    if steps < 0:
        raise ValueError("steps must be >= 0")
    if matrices is None:
        matrices = FORWARD_STEP_MATRICES
    v = np.asarray(classes, dtype=np.uint8)
    phase %= 4
    for _ in range(steps):
        v = gf_matrix_mul(matrices[phase], v)
        phase = (phase + 1) % 4
    return v, phase


def propagate_backward(classes: np.ndarray, phase: int, steps: int,
                       matrices=None) -> tuple[np.ndarray, int]:
    """Undo `steps` forward steps; exact inverse of propagate_forward."""
    if steps < 0:
        raise ValueError("steps must be >= 0")
    if matrices is None:
        matrices = BACKWARD_STEP_MATRICES
    v = np.asarray(classes, dtype=np.uint8)
    phase %= 4
    for _ in range(steps):
        phase = (phase - 1) % 4
        v = gf_matrix_mul(matrices[phase], v)
    return v, phase


def add_round_key_class(classes: np.ndarray, key_state: np.ndarray, phase: int) -> np.ndarray:
    """Class vector after XORing `key_state` into a state at `phase`."""
    return np.asarray(classes, dtype=np.uint8) ^ logical_class(key_state, phase)


def class_to_hex(classes: np.ndarray) -> str:
    """8 hex digits, Q1..Q4 in order."""
    return bytes(int(q) for q in classes).hex()


# ---------------------------------------------------------------------------
# trace harnesses
# ---------------------------------------------------------------------------

class TraceRecord(NamedTuple):
    round: int
    stage: str
    phase: int
    classes: np.ndarray


class FullTrace(NamedTuple):
    records: list
    ciphertext: bytes


def trace_linearized(plaintext: bytes, key: bytes, rounds: int) -> list[np.ndarray]:
    """Observed class vectors of AES with SubBytes replaced by identity.

    Runs `rounds` uniform rounds (ShiftRows, MixColumns, AddRoundKey;
    MixColumns kept in every round) after the initial AddRoundKey, and
    returns the class vector observed right after each round's
    MixColumns, at phase r mod 4. With the S-box removed every step is
    linear, so the same sequence is predictable from the plaintext class
    vector alone via propagate_forward and add_round_key_class; the two
    code paths check each other.
    """
    if not 1 <= rounds <= 10:
        raise ValueError("rounds must be in 1..10")
    schedule = aes.expand_key(key)
    state = aes.state_from_block(plaintext) ^ schedule[0]
    observed = []
    for rnd in range(1, rounds + 1):
        state = aes.mix_columns(aes.shift_rows(state))
        observed.append(logical_class(state, rnd % 4))
        state = state ^ schedule[rnd]
    return observed


def trace_full(plaintext: bytes, key: bytes) -> FullTrace:
    """Class trajectory of a real AES-128 encryption.

    Records the class vector before and after every SubBytes and after
    every MixColumns and AddRoundKey, each with the phase in force at
    that point (round r's SubBytes sees phase (r-1) mod 4; its
    MixColumns and AddRoundKey see phase r mod 4). Round 10 has no
    MixColumns. The returned ciphertext is the final state's block.
    """
    schedule = aes.expand_key(key)
    state = aes.state_from_block(plaintext)
    records = [TraceRecord(0, "plaintext", 0, logical_class(state, 0))]
    state = state ^ schedule[0]
    records.append(TraceRecord(0, "add_round_key", 0, logical_class(state, 0)))
    for rnd in range(1, 11):
        pre = (rnd - 1) % 4
        post = rnd % 4
        records.append(TraceRecord(rnd, "sub_bytes_in", pre, logical_class(state, pre)))
        state = aes.sub_bytes(state)
        records.append(TraceRecord(rnd, "sub_bytes_out", pre, logical_class(state, pre)))
        state = aes.shift_rows(state)
        if rnd < 10:
            state = aes.mix_columns(state)
            records.append(TraceRecord(rnd, "mix_columns", post, logical_class(state, post)))
        state = state ^ schedule[rnd]
        records.append(TraceRecord(rnd, "add_round_key", post, logical_class(state, post)))
    return FullTrace(records, aes.block_from_state(state))
