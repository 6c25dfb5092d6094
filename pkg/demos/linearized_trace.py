#!/usr/bin/env python3
# Remove SubBytes and the whole cipher becomes class-linear: a 10-round
# trajectory of 4-byte class vectors is predictable from the plaintext's
# class vector and the key schedule alone. Then look at real AES, where
# only the SubBytes stages break the prediction.

import numpy as np

from aeseqc import (
    add_round_key_class,
    aes,
    class_to_hex,
    forward_step_matrix,
    gf_matrix_mul,
    logical_class,
    propagate_forward,
    trace_full,
    trace_linearized,
)

rng = np.random.default_rng(7)
plaintext = rng.integers(0, 256, size=16, dtype=np.uint8).tobytes()
key = rng.integers(0, 256, size=16, dtype=np.uint8).tobytes()
schedule = aes.expand_key(key)

print("S-box removed: observed vs predicted, 10 rounds")
observed = trace_linearized(plaintext, key, 10)
v = add_round_key_class(logical_class(aes.state_from_block(plaintext), 0), schedule[0], 0)
phase = 0
for rnd in range(1, 11):
    v, phase = propagate_forward(v, phase, 1)
    match = np.array_equal(v, observed[rnd - 1])
    print(f"  round {rnd:>2} phase {phase}: {class_to_hex(observed[rnd - 1])} "
          f"vs {class_to_hex(v)}  {'ok' if match else 'MISMATCH'}")
    v = add_round_key_class(v, schedule[rnd], phase)

print("\nreal AES: the linear stages still obey their matrices...")
result = trace_full(plaintext, key)
records = {(r.round, r.stage): r for r in result.records}
for rnd in (1, 2, 3):
    pre = records[(rnd, "sub_bytes_out")]
    post = records[(rnd, "mix_columns")]
    predicted = gf_matrix_mul(forward_step_matrix((rnd - 1) % 4), pre.classes)
    print(f"  round {rnd} mix_columns: {class_to_hex(post.classes)} "
          f"predicted {class_to_hex(predicted)} "
          f"{'ok' if np.array_equal(post.classes, predicted) else 'MISMATCH'}")

print("...but SubBytes scrambles the class vector:")
for rnd in (1, 2, 3):
    before = records[(rnd, "sub_bytes_in")].classes
    after = records[(rnd, "sub_bytes_out")].classes
    print(f"  round {rnd} sub_bytes: {class_to_hex(before)} -> {class_to_hex(after)}")

print("\nciphertext:", result.ciphertext.hex())
print("matches encrypt_block:", result.ciphertext == aes.encrypt_block(plaintext, key))
