import time

import numpy as np
import pytest

from aeseqc import INV_SBOX, SBOX
from aeseqc.distribution import compute_counts_naive


@pytest.fixture(scope="session")
def naive_p_counts():
    """Full 2^32 exhaust for the S-box, with its wall-clock time."""
    t0 = time.perf_counter()
    counts = compute_counts_naive(SBOX)
    return counts, time.perf_counter() - t0


@pytest.fixture(scope="session")
def naive_invp_counts():
    t0 = time.perf_counter()
    counts = compute_counts_naive(INV_SBOX)
    return counts, time.perf_counter() - t0


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(0x5EED)
