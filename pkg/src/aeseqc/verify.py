"""Randomized invariant suite behind the verify-properties command.

Every check draws its cases from one seeded numpy PCG64 generator, so a
(seed, trials) pair reproduces the exact same run, counterexamples
included. Checks are vectorised; `trials` is the number of random cases
per property (deterministic algebra checks run once regardless).

`forward_matrices` / `backward_matrices` let a caller swap in corrupted
step matrices to prove the suite actually catches wrong propagation.
"""

from __future__ import annotations

import numpy as np

from . import aes
from .classes import (
    BACKWARD_STEP_MATRICES,
    FORWARD_STEP_MATRICES,
    add_round_key_class,
    class_to_hex,
    logical_class,
    propagate_backward,
    propagate_forward,
)
from .gf256 import gf_matrix_compose, gf_matrix_identity, gf_matrix_mul


def _state_hex(state: np.ndarray) -> str:
    return aes.hex_from_block(aes.block_from_state(state))


def _random_states(rng, trials):
    return rng.integers(0, 256, size=(trials, 4, 4), dtype=np.uint8)


def _first_mismatch(ok: np.ndarray) -> int:
    return int(np.nonzero(~ok)[0][0])


def _check_mix_xor(rng, trials, forward, backward, inverse=False):
    op = aes.inv_mix_columns if inverse else aes.mix_columns
    states = _random_states(rng, trials)
    before = np.bitwise_xor.reduce(states, axis=-2)
    after = np.bitwise_xor.reduce(op(states), axis=-2)
    ok = (before == after).all(axis=-1)
    if ok.all():
        return 0, None
    i = _first_mismatch(ok)
    return int((~ok).sum()), (
        f"state {_state_hex(states[i])} column XOR {class_to_hex(before[i])} "
        f"-> {class_to_hex(after[i])} not preserved"
    )


def _check_forward_step(rng, trials, forward, backward, phase):
    states = _random_states(rng, trials)
    stepped = aes.mix_columns(aes.shift_rows(states))
    observed = logical_class(stepped, (phase + 1) % 4)
    predicted = gf_matrix_mul(forward[phase], logical_class(states, phase))
    ok = (observed == predicted).all(axis=-1)
    if ok.all():
        return 0, None
    i = _first_mismatch(ok)
    return int((~ok).sum()), (
        f"state {_state_hex(states[i])} phase {phase}: expected class "
        f"{class_to_hex(predicted[i])}, got {class_to_hex(observed[i])}"
    )


def _check_backward_step(rng, trials, forward, backward, phase):
    states = _random_states(rng, trials)
    stepped = aes.inv_shift_rows(aes.inv_mix_columns(states))
    observed = logical_class(stepped, phase)
    predicted = gf_matrix_mul(backward[phase], logical_class(states, (phase + 1) % 4))
    ok = (observed == predicted).all(axis=-1)
    if ok.all():
        return 0, None
    i = _first_mismatch(ok)
    return int((~ok).sum()), (
        f"state {_state_hex(states[i])} phase {phase}: expected class "
        f"{class_to_hex(predicted[i])}, got {class_to_hex(observed[i])}"
    )


def _check_matrix_algebra(rng, trials, forward, backward):
    ident = gf_matrix_identity()
    for k in range(4):
        prod = gf_matrix_compose(forward[k], backward[k])
        if not np.array_equal(prod, ident):
            return 1, f"forward[{k}] @ backward[{k}] != identity"
    if not np.array_equal(gf_matrix_compose(forward[1], forward[1]), ident):
        return 1, "two-shift matrix is not an involution"
    if not np.array_equal(forward[3], ident):
        return 1, "four-shift step matrix is not the identity"
    return 0, None


def _check_op_roundtrips(rng, trials, forward, backward):
    states = _random_states(rng, trials)
    for op, inv, name in (
        (aes.sub_bytes, aes.inv_sub_bytes, "sub_bytes"),
        (aes.shift_rows, aes.inv_shift_rows, "shift_rows"),
        (aes.mix_columns, aes.inv_mix_columns, "mix_columns"),
    ):
        ok = (inv(op(states)) == states).all(axis=(-1, -2))
        if not ok.all():
            i = _first_mismatch(ok)
            return int((~ok).sum()), f"{name} round-trip broke state {_state_hex(states[i])}"
    return 0, None


def _check_encrypt_roundtrip(rng, trials, forward, backward):
    plain = _random_states(rng, trials)
    keys = _random_states(rng, trials)
    schedules = aes.expand_key_state(keys)
    back = aes.decrypt_state(aes.encrypt_state(plain, schedules), schedules)
    ok = (back == plain).all(axis=(-1, -2))
    if ok.all():
        return 0, None
    i = _first_mismatch(ok)
    return int((~ok).sum()), (
        f"encrypt/decrypt round-trip failed for plaintext {_state_hex(plain[i])} "
        f"key {_state_hex(keys[i])}"
    )


def _check_key_schedule_classes(rng, trials, forward, backward):
    keys = _random_states(rng, trials)
    schedules = aes.expand_key_state(keys)
    for rnd in range(10):
        ek = logical_class(schedules[:, rnd], 0)
        sub = aes.SBOX[schedules[:, rnd, :, 3]]
        eg = np.bitwise_xor.reduce(sub, axis=-1) ^ aes.RCON[rnd]
        ek0 = ek[:, 0] ^ eg
        ek1 = ek0 ^ ek[:, 1]
        ek2 = ek1 ^ ek[:, 2]
        ek3 = ek2 ^ ek[:, 3]
        predicted = np.stack([ek0, ek1, ek2, ek3], axis=-1)
        actual = logical_class(schedules[:, rnd + 1], 0)
        ok = (predicted == actual).all(axis=-1)
        if not ok.all():
            i = _first_mismatch(ok)
            return int((~ok).sum()), (
                f"key {_state_hex(keys[i])} round {rnd}: predicted classes "
                f"{class_to_hex(predicted[i])}, actual {class_to_hex(actual[i])}"
            )
    return 0, None


def _check_propagation_roundtrip(rng, trials, forward, backward):
    vecs = rng.integers(0, 256, size=(trials, 4), dtype=np.uint8)
    phases = rng.integers(0, 4, size=trials)
    failures = 0
    detail = None
    for k in range(4):
        sel = vecs[phases == k]
        if not sel.size:
            continue
        fwd, end = propagate_forward(sel, k, 4, matrices=forward)
        back, start = propagate_backward(fwd, end, 4, matrices=backward)
        ok = (back == sel).all(axis=-1)
        if start != k or not ok.all():
            failures += int((~ok).sum()) or 1
            i = _first_mismatch(ok) if not ok.all() else 0
            detail = detail or (
                f"class {class_to_hex(sel[i])} phase {k}: 4 steps forward then "
                f"4 back gave {class_to_hex(back[i])}"
            )
    return failures, detail


def _check_add_round_key_class(rng, trials, forward, backward):
    states = _random_states(rng, trials)
    keys = _random_states(rng, trials)
    for phase in range(4):
        via_state = logical_class(states ^ keys, phase)
        via_class = add_round_key_class(logical_class(states, phase), keys, phase)
        ok = (via_state == via_class).all(axis=-1)
        if not ok.all():
            i = _first_mismatch(ok)
            return int((~ok).sum()), (
                f"state {_state_hex(states[i])} key {_state_hex(keys[i])} phase {phase}: "
                f"expected class {class_to_hex(via_state[i])}, got {class_to_hex(via_class[i])}"
            )
    return 0, None


def _check_logical_class_fold(rng, trials, forward, backward):
    states = _random_states(rng, trials)
    for phase in range(4):
        unshifted = states
        for _ in range(phase):
            unshifted = aes.inv_shift_rows(unshifted)
        fold = np.bitwise_xor.reduce(unshifted, axis=-2)
        got = logical_class(states, phase)
        ok = (fold == got).all(axis=-1)
        if not ok.all():
            i = _first_mismatch(ok)
            return int((~ok).sum()), (
                f"state {_state_hex(states[i])} phase {phase}: expected class "
                f"{class_to_hex(fold[i])}, got {class_to_hex(got[i])}"
            )
    return 0, None


_CHECKS = [
    ("mix_columns_preserves_column_xor", lambda r, t, f, b: _check_mix_xor(r, t, f, b, False), True),
    ("inv_mix_columns_preserves_column_xor", lambda r, t, f, b: _check_mix_xor(r, t, f, b, True), True),
    ("forward_class_step_phase0", lambda r, t, f, b: _check_forward_step(r, t, f, b, 0), True),
    ("forward_class_step_phase1", lambda r, t, f, b: _check_forward_step(r, t, f, b, 1), True),
    ("forward_class_step_phase2", lambda r, t, f, b: _check_forward_step(r, t, f, b, 2), True),
    ("forward_class_step_phase3", lambda r, t, f, b: _check_forward_step(r, t, f, b, 3), True),
    ("backward_class_step_phase0", lambda r, t, f, b: _check_backward_step(r, t, f, b, 0), True),
    ("backward_class_step_phase1", lambda r, t, f, b: _check_backward_step(r, t, f, b, 1), True),
    ("backward_class_step_phase2", lambda r, t, f, b: _check_backward_step(r, t, f, b, 2), True),
    ("backward_class_step_phase3", lambda r, t, f, b: _check_backward_step(r, t, f, b, 3), True),
    ("step_matrix_algebra", _check_matrix_algebra, False),
    ("round_op_inverses", _check_op_roundtrips, True),
    ("encrypt_decrypt_roundtrip", _check_encrypt_roundtrip, True),
    ("key_schedule_class_recurrences", _check_key_schedule_classes, True),
    ("four_step_propagation_roundtrip", _check_propagation_roundtrip, True),
    ("add_round_key_class_consistency", _check_add_round_key_class, True),
    ("logical_class_matches_unshifted_fold", _check_logical_class_fold, True),
]


def run_property_suite(trials: int, seed: int,
                       forward_matrices=None, backward_matrices=None) -> dict:
    """Run every invariant check with `trials` random cases per property.

    Returns a JSON-ready report: per-property trial/failure counts, the
    first counterexample of each failing property, and `all_pass`.
    """
    if trials < 0:
        raise ValueError("trials must be >= 0")
    forward = forward_matrices if forward_matrices is not None else FORWARD_STEP_MATRICES
    backward = backward_matrices if backward_matrices is not None else BACKWARD_STEP_MATRICES
    rng = np.random.default_rng(seed)
    properties = []
    for name, check, randomized in _CHECKS:
        n = trials if randomized else 1
        if randomized and trials == 0:
            properties.append({"name": name, "trials": 0, "failures": 0,
                               "pass": True, "vacuous": True})
            continue
        failures, detail = check(rng, n, forward, backward)
        entry = {"name": name, "trials": n, "failures": failures, "pass": failures == 0}
        if detail is not None:
            entry["counterexample"] = detail
        properties.append(entry)
    return {
        "seed": seed,
        "trials": trials,
        "properties": properties,
        "all_pass": all(p["pass"] for p in properties),
    }


def first_counterexample(report: dict) -> str | None:
    for prop in report["properties"]:
        if not prop["pass"]:
            return prop.get("counterexample", prop["name"])
    return None
