#!/usr/bin/env python3
# Watch a 128-bit state's 4-byte class vector move through the linear
# layers: each ShiftRows+MixColumns step is one 4x4 matrix over GF(2^8),
# chosen by how many shifts have already happened.

import numpy as np

from aeseqc import (
    class_to_hex,
    forward_step_matrix,
    gf_matrix_mul,
    logical_class,
    mix_columns,
    propagate_backward,
    shift_rows,
)

rng = np.random.default_rng(2024)
state = rng.integers(0, 256, size=(4, 4), dtype=np.uint8)
print("random state:\n", state)

classes = logical_class(state, 0)
print("\nclass vector at phase 0 (plain column XORs):", class_to_hex(classes))

# run four real steps on the full state while predicting each class
# vector from the 4 bytes alone
phase = 0
predicted = classes
for step in range(4):
    state = mix_columns(shift_rows(state))
    predicted = gf_matrix_mul(forward_step_matrix(phase), predicted)
    phase = (phase + 1) % 4
    observed = logical_class(state, phase)
    print(f"step {step + 1}: phase {phase}  observed {class_to_hex(observed)}  "
          f"predicted {class_to_hex(predicted)}  match {np.array_equal(observed, predicted)}")

# the backward matrices undo all four steps exactly
recovered, phase0 = propagate_backward(predicted, phase, 4)
print("\n4 backward steps recover the start:", class_to_hex(recovered),
      "at phase", phase0, "->", np.array_equal(recovered, classes))

# note the phase-3 step: four cumulative shifts close the cycle, so its
# matrix is the identity
print("phase-3 step matrix:\n", forward_step_matrix(3))
