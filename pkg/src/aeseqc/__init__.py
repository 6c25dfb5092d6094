"""AES-128 with XOR equivalence-class tracking.

The class value of a 4-byte column is the XOR of its bytes. This
package implements the full cipher, the deterministic propagation of
per-column class values through the linear layers, the exact
class-transition distribution of SubBytes over all 2^32 input tuples,
and the class recurrences of the key schedule.
"""

from .aes import (
    INV_SBOX,
    RCON,
    SBOX,
    add_round_key,
    block_from_hex,
    block_from_state,
    decrypt_block,
    encrypt_block,
    expand_key,
    hex_from_block,
    inv_mix_columns,
    inv_shift_rows,
    inv_sub_bytes,
    mix_columns,
    shift_rows,
    state_from_block,
    sub_bytes,
)
from .classes import (
    BACKWARD_STEP_MATRICES,
    FORWARD_STEP_MATRICES,
    add_round_key_class,
    backward_step_matrix,
    class_to_hex,
    forward_step_matrix,
    logical_class,
    propagate_backward,
    propagate_forward,
    trace_full,
    trace_linearized,
)
from .distribution import (
    compute_counts_fast,
    compute_counts_naive,
    compute_pair_table,
    counts_stats,
    dist_from_counts,
    transpose_check,
    xor_convolve_square,
)
from .gf256 import MUL_TABLE, gf_add, gf_matrix_compose, gf_matrix_identity, gf_matrix_mul, gf_mul
from .keyschedule import (
    KeyClassRecord,
    audit_schedule_classes,
    key_class_record,
    predict_next_classes,
)
from .verify import run_property_suite

__version__ = "0.1.0"
