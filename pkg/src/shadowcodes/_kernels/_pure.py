"""Pure-Python enumeration kernels (fallback when the extension is absent).

The binary kernel works on Python big integers: XOR and bit_count on a
q-bit int are C-speed word operations, which keeps the fallback within a
small factor of the compiled version.
"""

import numpy as np


def weight_enum_r2(packed, n, base=None):
    """Weights of all XOR combinations of the given bit-packed rows.

    packed: (L, W) uint64 array, row bits little-endian within words.
    base: optional (W,) uint64 start word to XOR into every combination.
    Returns (counts, first): counts[w] = number of messages m in [0, 2^L)
    whose codeword has weight w; first[w] = smallest such m, -1 if none.
    Bit i of m selects row i; enumeration is Gray-coded, one XOR per step.
    """
    L = packed.shape[0]
    rows = [int.from_bytes(packed[i].tobytes(), "little") for i in range(L)]
    state = (
        int.from_bytes(np.ascontiguousarray(base).tobytes(), "little")
        if base is not None
        else 0
    )
    counts = np.zeros(n + 1, dtype=np.int64)
    first = np.full(n + 1, -1, dtype=np.int64)
    w = state.bit_count()
    counts[w] += 1
    first[w] = 0
    for i in range(1, 1 << L):
        state ^= rows[(i & -i).bit_length() - 1]
        w = state.bit_count()
        counts[w] += 1
        m = i ^ (i >> 1)
        if first[w] < 0 or m < first[w]:
            first[w] = m
    return counts, first


def weight_enum_modr(rows, r, base=None):
    """Weights of all F_r-combinations of the given rows (entries in [0, r)).

    rows: (L, n) uint8 array. Enumeration follows the reflected mixed-radix
    Gray code, so each step adds or subtracts a single row mod r. Message
    keys use digit i as the coefficient of r^i. Returns (counts, first) as
    in weight_enum_r2.
    """
    L, n = rows.shape
    rows16 = rows.astype(np.int16)
    state = (
        base.astype(np.int16) if base is not None else np.zeros(n, dtype=np.int16)
    )
    counts = np.zeros(n + 1, dtype=np.int64)
    first = np.full(n + 1, -1, dtype=np.int64)
    digits = [0] * L
    focus = list(range(L + 1))
    direction = [1] * L
    powers = [r**i for i in range(L)]
    key = 0
    while True:
        w = int(np.count_nonzero(state))
        counts[w] += 1
        if first[w] < 0 or key < first[w]:
            first[w] = key
        j = focus[0]
        focus[0] = 0
        if j == L:
            break
        delta = direction[j]
        digits[j] += delta
        key += delta * powers[j]
        if delta > 0:
            state += rows16[j]
            state[state >= r] -= r
        else:
            state -= rows16[j]
            state[state < 0] += r
        if digits[j] == 0 or digits[j] == r - 1:
            direction[j] = -direction[j]
            focus[j] = focus[j + 1]
            focus[j + 1] = j + 1
    return counts, first
