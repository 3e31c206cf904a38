"""Construction of shadow codes: F_r-linear codes of length q whose
generator rows are character classes of irreducible polynomials evaluated
over the whole field.

Row i of the generator matrix is the class vector of p_i at every field
element in canonical index order; encoding a message v multiplies out to
the class vector of prod_i p_i^{v_i}. Coordinate j is the field element
with index j.
"""

import json
import math
import warnings
from dataclasses import dataclass, field as dc_field

import numpy as np

from .algebra import (
    FiniteField,
    Polynomial,
    enumerate_monic_irreducibles,
    floor_root_power,
    is_irreducible,
    prime_power_decompose,
)
from .character import get_character
from .errors import (
    Ambiguous,
    BadPositions,
    DimensionMismatch,
    DomainError,
    Inconsistent,
    NotPrime,
)

# erased-coordinate marker accepted by erasure_decode
ERASED = None


class ShadowCodeSpec:
    """Parameters of a shadow code: field, character order r, and the
    ordered list of distinct monic irreducible polynomials of degree >= 2."""

    def __init__(self, field, r, polys, validate=True):
        polys = tuple(polys)
        if validate:
            if len(polys) < 1:
                raise ValueError("at least one polynomial is required")
            if len(set(polys)) != len(polys):
                raise ValueError("polynomials must be distinct")
            for p in polys:
                if p.field != field:
                    raise ValueError("polynomial field mismatch")
                if p.degree < 2:
                    raise ValueError(f"degree of {p!r} is below 2")
                if not p.is_monic:
                    raise ValueError(f"{p!r} is not monic")
                if not is_irreducible(p):
                    raise ValueError(f"{p!r} is reducible")
        self.field = field
        self.r = r
        self.polys = polys
        self.chi = get_character(field, r)
        self._value_table = None

    @property
    def q(self):
        return self.field.q

    @property
    def L(self):
        return len(self.polys)

    @property
    def max_degree(self):
        return max(p.degree for p in self.polys)

    def value_table(self):
        """p_i(x_j) element indices, shape (L, q); cached."""
        if self._value_table is None:
            self._value_table = np.stack([p.eval_all() for p in self.polys])
        return self._value_table

    def as_dict(self):
        return {
            "q": self.q,
            "r": self.r,
            "field": self.field.as_dict(),
            "polynomials": [p.serialize() for p in self.polys],
        }


class GeneratorMatrix:
    """L x n generator matrix over F_r, entries stored as uint8."""

    def __init__(self, r, rows, spec=None):
        rows = np.ascontiguousarray(rows, dtype=np.uint8)
        if rows.ndim != 2:
            raise ValueError("rows must be a 2-d array")
        self.r = r
        self.rows = rows
        self.spec = spec

    @property
    def L(self):
        return self.rows.shape[0]

    @property
    def n(self):
        return self.rows.shape[1]

    def encode(self, v):
        """Codeword of message v (length L, entries taken mod r)."""
        v = np.asarray(v, dtype=np.int64)
        if v.shape != (self.L,):
            raise DimensionMismatch(f"message length {v.shape} != {self.L}")
        return ((v % self.r) @ self.rows.astype(np.int64) % self.r).astype(np.uint8)

    def rank(self):
        return matrix_rank_mod(self.rows, self.r)

    def puncture(self, positions):
        """Remove the given coordinate positions from every row."""
        pos = sorted(set(int(p) for p in positions))
        if any(p < 0 or p >= self.n for p in pos):
            raise BadPositions(f"positions out of range [0, {self.n})")
        if len(pos) >= self.n:
            raise BadPositions("cannot puncture every coordinate")
        keep = np.ones(self.n, dtype=bool)
        keep[pos] = False
        return GeneratorMatrix(self.r, self.rows[:, keep], spec=None)

    def save_text(self, path):
        """Header `n r L`, then one digit string per row."""
        with open(path, "w") as fh:
            fh.write(f"{self.n} {self.r} {self.L}\n")
            for row in self.rows:
                fh.write("".join(str(int(c)) for c in row) + "\n")

    def save_json(self, path):
        if self.spec is None:
            raise ValueError("JSON format requires the originating spec")
        doc = self.spec.as_dict()
        doc["rows"] = ["".join(str(int(c)) for c in row) for row in self.rows]
        with open(path, "w") as fh:
            json.dump(doc, fh, sort_keys=True, indent=2)
            fh.write("\n")


def load_matrix(path):
    """Load a generator matrix saved in either format; returns GeneratorMatrix."""
    with open(path) as fh:
        head = fh.read(1)
        fh.seek(0)
        if head == "{":
            doc = json.load(fh)
            f = FiniteField(doc["field"]["p"], doc["field"]["ell"])
            polys = [Polynomial(f, c) for c in doc["polynomials"]]
            spec = ShadowCodeSpec(f, doc["r"], polys)
            rows = np.array(
                [[int(c) for c in row] for row in doc["rows"]], dtype=np.uint8
            )
            return GeneratorMatrix(doc["r"], rows, spec=spec)
        header = fh.readline().split()
        if len(header) != 3:
            raise ValueError("bad matrix header, expected `n r L`")
        n, r, L = (int(t) for t in header)
        rows = []
        for _ in range(L):
            line = fh.readline().strip()
            if len(line) != n:
                raise ValueError("row length disagrees with header")
            rows.append([int(c) for c in line])
        arr = np.array(rows, dtype=np.uint8)
        if (arr >= r).any():
            raise ValueError("matrix entry out of range")
        return GeneratorMatrix(r, arr)


def build(spec: ShadowCodeSpec) -> GeneratorMatrix:
    """Generator matrix with row i = class vector of p_i over all of F_q."""
    rows = np.stack([spec.chi.class_values(p) for p in spec.polys])
    return GeneratorMatrix(spec.r, rows, spec=spec)


def _pow_mod_vec(base, e, q):
    out = np.ones_like(base)
    b = base % q
    while e:
        if e & 1:
            out = out * b % q
        b = b * b % q
        e >>= 1
    return out


def encode_direct(spec, v, reduce_exponents=True):
    """Codeword by the defining evaluation: character of prod p_i(x)^{v_i}.

    Independent of the generator-matrix shortcut; used to cross-check
    linearity and well-definedness. Exponents are lifted to {0,...,r-1}
    unless reduce_exponents is False, in which case the raw nonnegative
    integers are used verbatim.
    """
    v = [int(e) for e in v]
    if len(v) != spec.L:
        raise DimensionMismatch(f"message length {len(v)} != {spec.L}")
    if reduce_exponents:
        v = [e % spec.r for e in v]
    if any(e < 0 for e in v):
        raise ValueError("exponents must be nonnegative")
    vt = spec.value_table()
    f, chi = spec.field, spec.chi
    if f.ell == 1:
        prod = np.ones(f.q, dtype=np.int64)
        for i, e in enumerate(v):
            if e:
                prod = prod * _pow_mod_vec(vt[i], e, f.q) % f.q
        return chi.class_table[prod].astype(np.uint8)
    out = np.empty(f.q, dtype=np.uint8)
    for j in range(f.q):
        acc = 1
        for i, e in enumerate(v):
            if e:
                acc = f.mul(acc, f.pow(int(vt[i, j]), e))
        out[j] = chi(acc)
    return out


def matrix_rank_mod(rows, r):
    """Rank of an integer matrix over F_r (r prime), by elimination."""
    m = np.array(rows, dtype=np.int64) % r
    nrows = m.shape[0]
    rowi = 0
    while rowi < nrows:
        sub = m[rowi:]
        nz = sub.any(axis=0)
        if not nz.any():
            break
        col = int(np.argmax(nz))
        k = rowi + int(np.argmax(sub[:, col] != 0))
        if k != rowi:
            m[[rowi, k]] = m[[k, rowi]]
        inv = pow(int(m[rowi, col]), r - 2, r)
        m[rowi] = m[rowi] * inv % r
        others = np.nonzero(m[:, col])[0]
        others = others[others != rowi]
        if others.size:
            m[others] = (m[others] - np.outer(m[others, col], m[rowi])) % r
        rowi += 1
    return rowi


def dimension_condition(q, r, L, max_degree):
    """Sufficient condition for the code dimension to equal L.

    Holds when max deg p_i < (q(r-1) - 1) / (r L sqrt(q)). Sufficient but
    not necessary, so callers treat the outcome as a report, not a verdict.
    """
    threshold = (q * (r - 1) - 1) / (r * L * math.sqrt(q))
    return max_degree < threshold, threshold


def erasure_decode(G: GeneratorMatrix, received):
    """Recover the message from a partially erased codeword.

    `received` has length n with erased coordinates set to ERASED (None);
    the rest must be integers in [0, r). Solves the linear system on the
    unerased coordinates; unique solutions are guaranteed whenever the
    number of erasures is at most d - 1.
    """
    if len(received) != G.n:
        raise DimensionMismatch(f"received length {len(received)} != {G.n}")
    known = [j for j, c in enumerate(received) if c is not ERASED]
    r, L = G.r, G.L
    A = G.rows[:, known].T.astype(np.int64) % r
    b = np.array([received[j] for j in known], dtype=np.int64) % r
    aug = np.hstack([A, b[:, None]])
    nrows = aug.shape[0]
    rowi = 0
    pivot_of_col = {}
    for col in range(L):
        if rowi >= nrows:
            break
        nz = np.nonzero(aug[rowi:, col])[0]
        if nz.size == 0:
            continue
        k = rowi + int(nz[0])
        if k != rowi:
            aug[[rowi, k]] = aug[[k, rowi]]
        inv = pow(int(aug[rowi, col]), r - 2, r)
        aug[rowi] = aug[rowi] * inv % r
        others = np.nonzero(aug[:, col])[0]
        others = others[others != rowi]
        if others.size:
            aug[others] = (aug[others] - np.outer(aug[others, col], aug[rowi])) % r
        pivot_of_col[col] = rowi
        rowi += 1
    if rowi < nrows and aug[rowi:, L].any():
        raise Inconsistent("received word is not consistent with the code")
    if len(pivot_of_col) < L:
        raise Ambiguous(
            f"system underdetermined: {L - len(pivot_of_col)} free dimensions"
        )
    v = np.zeros(L, dtype=np.uint8)
    for col, row in pivot_of_col.items():
        v[col] = aug[row, L]
    return v


@dataclass
class ConstructionReport:
    """Outcome of the standard construction recipe."""

    q: int
    r: int
    epsilon: float | None
    L: int
    rank: int
    claimed_dimension: int
    distance_lower_bound: float
    epsilon_distance_bound: float | None
    recipe_inequality_holds: bool | None
    prop_condition_holds: bool
    prop_condition_threshold: float
    small_q_warning: bool
    spec: ShadowCodeSpec = dc_field(repr=False, default=None)
    matrix: GeneratorMatrix = dc_field(repr=False, default=None)

    def as_dict(self):
        return {
            "q": self.q,
            "r": self.r,
            "epsilon": self.epsilon,
            "l_polynomials": self.L,
            "rank": self.rank,
            "claimed_dimension": self.claimed_dimension,
            "distance_lower_bound": self.distance_lower_bound,
            "epsilon_distance_bound": self.epsilon_distance_bound,
            "recipe_inequality_holds": self.recipe_inequality_holds,
            "prop_condition_holds": self.prop_condition_holds,
            "prop_condition_threshold": self.prop_condition_threshold,
            "small_q_warning": self.small_q_warning,
            "polynomials": [p.serialize() for p in self.spec.polys],
        }


def construct_code(q, r, epsilon=None, L=None) -> ConstructionReport:
    """Build a shadow code over GF(q) with degree-2 polynomials.

    With epsilon, picks L = floor(q^(1/2 - epsilon)) and reports the
    distance guarantee (r-1)q/r - 2 q^(1-epsilon); with explicit L, only
    the generic (r-1)q/r - 2L sqrt(q) lower bound applies. Emits a warning
    when q is at or below 6^(1/epsilon), where the dimension guarantee may
    not hold.
    """
    decomp = prime_power_decompose(q)
    if decomp is None:
        raise NotPrime(f"{q} is not a prime power")
    f = FiniteField(*decomp)
    get_character(f, r)  # raises OrderMismatch before argument handling
    if (epsilon is None) == (L is None):
        raise DomainError("exactly one of epsilon, L must be given")
    small_q_warning = False
    eps_bound = None
    recipe_ok = None
    if epsilon is not None:
        if not 0 < epsilon < 0.5:
            raise DomainError("epsilon must lie in (0, 1/2)")
        L = floor_root_power(q, 0.5 - epsilon)
        if L < 1:
            L = 1
        eps_bound = (r - 1) * q / r - 2 * q ** (1 - epsilon)
        if q <= 6 ** (1 / epsilon):
            small_q_warning = True
            warnings.warn(
                f"q={q} is not above 6^(1/epsilon)={6 ** (1 / epsilon):.0f}; "
                "the dimension guarantee may fail",
                stacklevel=2,
            )
        recipe_ok = L < math.sqrt(q) / 4 - 1 / (4 * math.sqrt(q))
    polys = enumerate_monic_irreducibles(f, 2, L)
    spec = ShadowCodeSpec(f, r, polys)
    matrix = build(spec)
    rank = matrix.rank()
    cond_ok, threshold = dimension_condition(q, r, L, 2)
    dist_lb = (r - 1) * q / r - L * 2 * math.sqrt(q)
    return ConstructionReport(
        q=q,
        r=r,
        epsilon=epsilon,
        L=L,
        rank=rank,
        claimed_dimension=L,
        distance_lower_bound=dist_lb,
        epsilon_distance_bound=eps_bound,
        recipe_inequality_holds=recipe_ok,
        prop_condition_holds=cond_ok,
        prop_condition_threshold=threshold,
        small_q_warning=small_q_warning,
        spec=spec,
        matrix=matrix,
    )


def hamming_weight(v) -> int:
    return int(np.count_nonzero(v))
