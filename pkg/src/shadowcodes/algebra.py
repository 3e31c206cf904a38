"""Finite field and polynomial arithmetic, plus prime-power utilities.

Elements of GF(p^ell) are addressed by an integer index in [0, q): the
base-p digits of the index are the coefficients of the element written in
the power basis (digit 0 = constant coefficient). Index arithmetic keeps
the hot loops free of wrapper objects; FieldElement is a thin convenience
wrapper on top.
"""

import math

import numpy as np

from .errors import NotEnoughPolynomials, NotPrime, Overflow, ZeroPolynomial

_MAX_Q = 1 << 62

# Witnesses making Miller-Rabin deterministic for every n < 3.3 * 10^24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for 64-bit inputs."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_power_decompose(n: int):
    """Return (p, k) with n = p^k and p prime, or None."""
    if n < 2:
        return None
    if is_prime(n):
        return (n, 1)
    for k in range(2, n.bit_length() + 1):
        root = round(n ** (1.0 / k))
        for r in (root - 1, root, root + 1):
            if r >= 2 and r**k == n and is_prime(r):
                return (r, k)
    return None


def next_prime_power_gt(x: int, odd_only: bool = False) -> int:
    """Least prime power strictly greater than x (odd values only if flagged)."""
    if x < 2:
        raise ValueError("x must be at least 2")
    n = x + 1
    while True:
        if n > _MAX_Q:
            raise Overflow(f"no prime power found below {_MAX_Q}")
        if (not odd_only or n % 2 == 1) and prime_power_decompose(n) is not None:
            return n
        n += 1


def _mobius(n):
    mu = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            mu = -mu
        d += 1
    if n > 1:
        mu = -mu
    return mu


def num_monic_irreducibles(q: int, degree: int) -> int:
    """Count of monic irreducible polynomials of the given degree over GF(q)."""
    total = 0
    for e in range(1, degree + 1):
        if degree % e == 0:
            total += _mobius(e) * q ** (degree // e)
    return total // degree


class FiniteField:
    """Arithmetic context for GF(p^ell) with canonical element indexing.

    For ell > 1 the modulus is the monic irreducible of degree ell over
    GF(p) that is smallest in canonical order (coefficient vector read as
    a base-p integer, constant coefficient least significant).
    """

    def __init__(self, p: int, ell: int = 1):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if ell < 1:
            raise ValueError("ell must be positive")
        q = p**ell
        if q > _MAX_Q:
            raise Overflow(f"p^ell = {q} exceeds the supported range")
        self.p = p
        self.ell = ell
        self.q = q
        self._qr_table = None
        if ell == 1:
            self.modulus = None
            self._red = None
        else:
            self.modulus = self._find_modulus()
            self._red = self._reduction_rows()

    def _find_modulus(self):
        base = FiniteField(self.p)
        for key in range(self.p**self.ell):
            if key % self.p == 0:  # c_0 = 0 means x divides f
                continue
            coeffs = _digits(key, self.p, self.ell) + (1,)
            if is_irreducible(Polynomial(base, coeffs)):
                return coeffs
        raise AssertionError("no irreducible modulus found")  # unreachable

    def _reduction_rows(self):
        # x^k mod modulus for k = ell .. 2*ell-2, as coefficient tuples
        p, ell, m = self.p, self.ell, self.modulus
        rows = []
        cur = [(-m[i]) % p for i in range(ell)]  # x^ell
        rows.append(tuple(cur))
        for _ in range(ell - 2):
            top = cur[-1]
            cur = [0] + cur[:-1]
            for i in range(ell):
                cur[i] = (cur[i] + top * rows[0][i]) % p
            rows.append(tuple(cur))
        return rows

    # -- index arithmetic -------------------------------------------------

    def to_vec(self, a):
        return _digits(a, self.p, self.ell)

    def from_vec(self, vec):
        out = 0
        for c in reversed(vec):
            out = out * self.p + c % self.p
        return out

    def add(self, a, b):
        p = self.p
        if self.ell == 1:
            return (a + b) % p
        out = 0
        mult = 1
        while a or b:
            out += ((a % p + b % p) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a):
        p = self.p
        if self.ell == 1:
            return (-a) % p
        out = 0
        mult = 1
        while a:
            out += ((-a % p) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        p = self.p
        if self.ell == 1:
            return a * b % p
        if a == 0 or b == 0:
            return 0
        va, vb = self.to_vec(a), self.to_vec(b)
        ell = self.ell
        conv = [0] * (2 * ell - 1)
        for i, ai in enumerate(va):
            if ai:
                for j, bj in enumerate(vb):
                    conv[i + j] += ai * bj
        out = [c % p for c in conv[:ell]]
        for k in range(ell, 2 * ell - 1):
            ck = conv[k] % p
            if ck:
                row = self._red[k - ell]
                for i in range(ell):
                    out[i] = (out[i] + ck * row[i]) % p
        return self.from_vec(out)

    def pow(self, a, e):
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self.ell == 1:
            return pow(a, e, self.p)
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        if self.ell == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.q - 2)

    def element(self, index):
        return FieldElement(self, index)

    def elements(self):
        return (FieldElement(self, i) for i in range(self.q))

    def qr_table(self):
        """Boolean table over indices: True at nonzero squares. Prime fields only."""
        if self.ell != 1:
            raise ValueError("qr_table is a prime-field fast path")
        if self.q > (1 << 31):
            raise Overflow("qr_table supports prime fields up to 2^31")
        if self._qr_table is None:
            x = np.arange(self.q, dtype=np.int64)
            table = np.zeros(self.q, dtype=bool)
            table[(x * x) % self.q] = True
            table[0] = False
            self._qr_table = table
        return self._qr_table

    def as_dict(self):
        return {
            "p": self.p,
            "ell": self.ell,
            "modulus": list(self.modulus) if self.modulus else None,
        }

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and self.p == other.p
            and self.ell == other.ell
        )

    def __hash__(self):
        return hash((self.p, self.ell))

    def __repr__(self):
        return f"GF({self.q})" if self.ell > 1 else f"GF({self.p})"


def field_make(p: int, ell: int = 1) -> FiniteField:
    return FiniteField(p, ell)


def _digits(n, base, width):
    out = []
    for _ in range(width):
        out.append(n % base)
        n //= base
    return tuple(out)


class FieldElement:
    """An element of a FiniteField, identified by its canonical index."""

    __slots__ = ("field", "index")

    def __init__(self, field, index):
        if not 0 <= index < field.q:
            raise ValueError(f"index {index} out of range for {field!r}")
        self.field = field
        self.index = index

    @property
    def vector(self):
        return self.field.to_vec(self.index)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.index, _idx(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.index, _idx(other)))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.index, _idx(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.index))

    def __pow__(self, e):
        return FieldElement(self.field, self.field.pow(self.index, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.index))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.index == other
        return (
            isinstance(other, FieldElement)
            and self.field == other.field
            and self.index == other.index
        )

    def __hash__(self):
        return hash((self.field.p, self.field.ell, self.index))

    def __repr__(self):
        return f"FieldElement({self.index}, {self.field!r})"


def _idx(x):
    return x.index if isinstance(x, FieldElement) else x


class Polynomial:
    """Polynomial over a FiniteField, coefficients stored as element indices.

    Coefficients are little-endian (constant term first) with no trailing
    zeros; the zero polynomial has an empty coefficient tuple. The canonical
    total order compares degree first, then the coefficient vector read as a
    base-q integer (constant coefficient least significant).
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        coeffs = tuple(_idx(c) for c in coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        self.field = field
        self.coeffs = coeffs

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __call__(self, x):
        """Evaluate at an element index by Horner's rule; returns an index."""
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def eval_all(self):
        """Values at every field element in index order, as an int64 array."""
        f = self.field
        if f.ell == 1 and self.coeffs:
            x = np.arange(f.q, dtype=np.int64)
            acc = np.full(f.q, self.coeffs[-1], dtype=np.int64)
            for c in reversed(self.coeffs[:-1]):
                acc = (acc * x + c) % f.q
            return acc
        return np.array([self(x) for x in range(f.q)], dtype=np.int64)

    def __add__(self, other):
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Polynomial(f, out)

    def __mul__(self, other):
        f = self.field
        if self.is_zero or other.is_zero:
            return Polynomial(f, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = f.add(out[i + j], f.mul(a, b))
        return Polynomial(f, out)

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = Polynomial(self.field, (1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def _key(self):
        out = 0
        for c in reversed(self.coeffs):
            out = out * self.field.q + c
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field.p, self.field.ell, self.coeffs))

    def __lt__(self, other):
        return (self.degree, self._key()) < (other.degree, other._key())

    def serialize(self):
        return list(self.coeffs)

    def __repr__(self):
        if self.is_zero:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                xi = "x" if i == 1 else f"x^{i}"
                terms.append(xi if c == 1 else f"{c}*{xi}")
        return " + ".join(terms)


def _poly_mulmod(f, a, b, mod):
    """a*b mod `mod` with coefficient lists over field f; mod is monic."""
    d = len(mod) - 1
    conv = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                conv[i + j] = f.add(conv[i + j], f.mul(ai, bj))
    for k in range(len(conv) - 1, d - 1, -1):
        c = conv[k]
        if c:
            conv[k] = 0
            for i in range(d):
                conv[k - d + i] = f.sub(conv[k - d + i], f.mul(c, mod[i]))
    out = conv[:d]
    while len(out) < d:
        out.append(0)
    return out


def _poly_powmod_x(f, e, mod):
    """x^e mod `mod` (monic) as a coefficient list of length deg(mod)."""
    d = len(mod) - 1
    result = [0] * d
    result[0] = 1
    base = [0] * d
    if d == 1:
        base[0] = f.neg(mod[0])
    else:
        base[1] = 1
    while e:
        if e & 1:
            result = _poly_mulmod(f, result, base, mod)
        base = _poly_mulmod(f, base, base, mod)
        e >>= 1
    return result


def _poly_gcd(f, a, b):
    a = list(a)
    b = list(b)
    while any(b):
        while b and b[-1] == 0:
            b.pop()
        if not b:
            break
        inv = f.inv(b[-1])
        b = [f.mul(c, inv) for c in b]
        # a mod b
        a = list(a)
        while len(a) >= len(b) and any(a):
            while a and a[-1] == 0:
                a.pop()
            if len(a) < len(b):
                break
            c = a[-1]
            shift = len(a) - len(b)
            for i in range(len(b)):
                a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]))
        a, b = b, a
    while a and a[-1] == 0:
        a.pop()
    return a


def _has_root(poly):
    return any(poly(x) == 0 for x in range(poly.field.q))


def is_irreducible(poly: Polynomial) -> bool:
    """Irreducibility over the polynomial's own field.

    Degrees 2 and 3 reduce to root absence; higher degrees use the gcd
    chain against x^(q^i) - x.
    """
    if poly.is_zero:
        raise ZeroPolynomial("the zero polynomial has no factorization")
    d = poly.degree
    if d == 0:
        return False
    if d == 1:
        return True
    f = poly.field
    if d in (2, 3):
        if d == 2 and f.ell == 1 and f.p != 2 and f.q > 512:
            c0, c1 = poly.coeffs[0], poly.coeffs[1]
            lead_inv = f.inv(poly.coeffs[2])
            c0, c1 = f.mul(c0, lead_inv), f.mul(c1, lead_inv)
            disc = (c1 * c1 - 4 * c0) % f.q
            if disc == 0:
                return False
            return not bool(f.qr_table()[disc])
        return not _has_root(poly)
    # Rabin's test on the monic normalization
    lead_inv = f.inv(poly.coeffs[-1])
    mod = [f.mul(c, lead_inv) for c in poly.coeffs]
    x_poly = [0, 1] + [0] * (d - 2)
    h = _poly_powmod_x(f, f.q**d, mod)
    if h != x_poly[:d]:
        return False
    for t in range(2, d + 1):
        if d % t == 0 and is_prime(t):
            g = _poly_powmod_x(f, f.q ** (d // t), mod)
            g[1] = f.sub(g[1], 1)
            if len(_poly_gcd(f, g, mod)) > 1:
                return False
    return True


def enumerate_monic_irreducibles(field, degree: int, count: int):
    """First `count` monic irreducibles of the given degree in canonical order.

    Canonical order reads the non-leading coefficient vector as a base-q
    integer, constant coefficient least significant, ascending.
    """
    total = num_monic_irreducibles(field.q, degree)
    if degree == 2:
        assert total == (field.q**2 - field.q) // 2
    if count > total:
        raise NotEnoughPolynomials(count, total)
    q = field.q
    fast_disc = degree == 2 and field.ell == 1 and field.p != 2
    qr = field.qr_table() if fast_disc else None
    found = []
    for key in range(q**degree):
        if key % q == 0:  # constant coefficient 0: x divides f
            continue
        if fast_disc:
            c0 = key % q
            c1 = key // q
            disc = (c1 * c1 - 4 * c0) % q
            ok = disc != 0 and not qr[disc]
        else:
            ok = is_irreducible(
                Polynomial(field, _digits(key, q, degree) + (1,))
            )
        if ok:
            found.append(Polynomial(field, _digits(key, q, degree) + (1,)))
            if len(found) == count:
                return found
    raise AssertionError("irreducible count mismatch")  # unreachable


def floor_root_power(q: int, exponent: float) -> int:
    """floor(q**exponent) guarded against floating-point edge cases."""
    est = int(math.floor(q**exponent))
    while (est + 1) > 0 and math.log(est + 1) <= exponent * math.log(q):
        est += 1
    while est > 1 and math.log(est) > exponent * math.log(q):
        est -= 1
    return est
