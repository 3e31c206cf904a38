"""Multiplicative characters of prime order r, mapped into (F_r, +).

A character here is the composite of an order-r multiplicative character
on GF(q)* with a fixed isomorphism of its image onto the additive group
of F_r: nonzero a maps to the j in [0, r) with a^((q-1)/r) = zeta^j.
The complex r-th roots of unity are never materialized.
"""

import functools
from collections import namedtuple

import numpy as np

from .errors import OrderMismatch, ZeroArgument
from .algebra import is_prime

CharSum = namedtuple("CharSum", ["counts", "signed"])


@functools.lru_cache(maxsize=64)
def get_character(field, r):
    """Shared Character instance per (field, r); construction is O(q)."""
    return Character(field, r)


class Character:
    """Order-r character on a finite field, evaluated via a full class table.

    zeta is chosen deterministically: scanning element indices 2, 3, ...,
    the first a with b = a^((q-1)/r) != 1 fixes zeta = b. The class of a
    nonzero element is then the table position of a^((q-1)/r) among the
    powers of zeta. Index 0 (the zero element) holds a -1 sentinel.
    """

    def __init__(self, field, r: int):
        if not is_prime(r):
            raise OrderMismatch(f"character order {r} is not prime")
        if (field.q - 1) % r != 0:
            raise OrderMismatch(f"{r} does not divide q - 1 = {field.q - 1}")
        self.field = field
        self.r = r
        self.exponent = (field.q - 1) // r
        self.zeta = self._scan_zeta()
        powers = {}
        z = 1
        for j in range(r):
            powers[z] = j
            z = field.mul(z, self.zeta)
        assert z == 1 and len(powers) == r
        self.zeta_powers = powers
        self.class_table = self._build_table()

    def _scan_zeta(self):
        field, e = self.field, self.exponent
        for a in range(2, field.q):
            b = field.pow(a, e)
            if b != 1:
                return b
        raise AssertionError("no order-r element found")  # unreachable

    def _build_table(self):
        field, r = self.field, self.r
        table = np.full(field.q, -1, dtype=np.int8)
        if r == 2 and field.ell == 1:
            # Euler's criterion: zeta is the unique order-2 element -1,
            # so the class is 0 exactly on the nonzero squares.
            qr = field.qr_table()
            table[1:] = np.where(qr[1:], 0, 1)
        else:
            for a in range(1, field.q):
                table[a] = self.zeta_powers[field.pow(a, self.exponent)]
        return table

    def __call__(self, a) -> int:
        """Class in F_r of the nonzero element with index a."""
        a = getattr(a, "index", a)
        if a == 0:
            raise ZeroArgument("character evaluated at 0")
        return int(self.class_table[a])

    def class_values(self, poly):
        """Classes of poly(x) over all x in index order, as a uint8 array."""
        values = poly.eval_all()
        if (values == 0).any():
            x = int(np.nonzero(values == 0)[0][0])
            raise ZeroArgument(f"polynomial vanishes at element index {x}")
        return self.class_table[values].astype(np.uint8)

    def __repr__(self):
        return f"Character(order={self.r}, field={self.field!r}, zeta={self.zeta})"


def character_make(field, r: int) -> Character:
    return Character(field, r)


def char_value(chi: Character, a) -> int:
    return chi(a)


def char_sum(chi: Character, poly) -> CharSum:
    """Class counts of poly over the whole field; signed sum when r = 2.

    counts[j] = #{x : class(poly(x)) = j}; the counts always total q.
    For r = 2 the signed value counts[0] - counts[1] equals the classical
    character sum over the field.
    """
    classes = chi.class_values(poly)
    counts = np.bincount(classes, minlength=chi.r).astype(int)
    signed = int(counts[0] - counts[1]) if chi.r == 2 else None
    return CharSum(counts=[int(c) for c in counts], signed=signed)
