"""Equivalence classes of key-schedule columns.

EK0..EK3 of a round key are the XORs of its four columns; EG is the
XOR of the four bytes of G applied to the round's last column (G =
RotWord then SubWord, with the round constant XORed into the first
byte -- the rotation permutes bytes so it never changes the XOR, but
the round constant lands in the class value). The classes of round
i+1 follow from round i by four chained XORs:

    EK0' = EK0 ^ EG,  EK1' = EK0' ^ EK1,  EK2' = EK1' ^ EK2,  EK3' = EK2' ^ EK3

exact for every key and every transition.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import aes
from .classes import logical_class


@dataclass(frozen=True)
class KeyClassRecord:
    round: int
    ek: np.ndarray        # column XORs EK0..EK3 of this round key
    eg: int | None        # class of G(last column); None for round 10


def g_class(last_column: np.ndarray, round_index: int) -> int:
    """XOR of the bytes of G(column) for the transition round -> round+1."""
    sub = aes.SBOX[np.asarray(last_column, dtype=np.uint8)]
    return int(np.bitwise_xor.reduce(sub)) ^ aes.RCON[round_index]


def key_class_record(schedule: np.ndarray, round_index: int) -> KeyClassRecord:
    """Column classes of one round key, with the G class feeding the next."""
    if not 0 <= round_index <= 10:
        raise ValueError(f"round must be in 0..10, got {round_index}")
    key = schedule[round_index]
    ek = logical_class(key, 0)
    eg = g_class(key[:, 3], round_index) if round_index < 10 else None
    return KeyClassRecord(round_index, ek, eg)


def predict_next_classes(record: KeyClassRecord) -> np.ndarray:
    """EK0..EK3 of round r+1 from round r's record, by the chained XORs."""
    if record.round > 9:
        raise ValueError("no transition out of round 10")
    ek0 = int(record.ek[0]) ^ record.eg
    ek1 = ek0 ^ int(record.ek[1])
    ek2 = ek1 ^ int(record.ek[2])
    ek3 = ek2 ^ int(record.ek[3])
    return np.array([ek0, ek1, ek2, ek3], dtype=np.uint8)


def audit_schedule_classes(key: bytes) -> list[dict]:
    """Check all 10 class transitions of one key's schedule.

    Returns one JSON-ready dict per transition: predicted vs recomputed
    classes of the next round key and whether they agree.
    """
    schedule = aes.expand_key(key)
    report = []
    for rnd in range(10):
        predicted = predict_next_classes(key_class_record(schedule, rnd))
        actual = key_class_record(schedule, rnd + 1).ek
        report.append({
            "round": rnd,
            "predicted": [f"{int(v):02x}" for v in predicted],
            "actual": [f"{int(v):02x}" for v in actual],
            "pass": bool(np.array_equal(predicted, actual)),
        })
    return report
