"""Classical bounds on code size (Hamming, Gilbert-Varshamov, Plotkin,
McEliece, and the Barg-Nogin spectral refinement) plus Delsarte-Goethals
parameters and the head-to-head comparison against shadow codes.

Combinatorial bounds are exact big-integer / rational arithmetic; floating
point appears only in the entropy function and the tridiagonal eigenvalue
solver.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import next_prime_power_gt
from .errors import DomainError


def entropy(r: int, x: float) -> float:
    """r-ary entropy H_r(x), extended by continuity to the endpoints."""
    if r < 2:
        raise DomainError("entropy needs r >= 2")
    if x < 0 or x > 1:
        raise DomainError(f"entropy argument {x} outside [0, 1]")
    if x == 0:
        return 0.0
    if x == 1:
        return math.log(r - 1, r) if r > 2 else 0.0
    h = x * math.log(r - 1, r) if r > 2 else 0.0
    return h - x * math.log(x, r) - (1 - x) * math.log(1 - x, r)


def _ball(n, radius, r):
    return sum(math.comb(n, j) * (r - 1) ** j for j in range(radius + 1))


def hamming_bound(n: int, d: int, r: int) -> int:
    """Sphere-packing upper bound on A_r(n, d), floored exactly."""
    if not 1 <= d <= n:
        raise DomainError(f"need 1 <= d <= n, got d={d}, n={n}")
    t = (d - 1) // 2
    return r**n // _ball(n, t, r)


def gv_bound(n: int, d: int, r: int) -> int:
    """Gilbert-Varshamov achievability lower bound on A_r(n, d), ceiled."""
    if not 1 <= d <= n:
        raise DomainError(f"need 1 <= d <= n, got d={d}, n={n}")
    den = _ball(n, d - 1, r)
    return -((-(r**n)) // den)


def plotkin_binary(n: int, d: int):
    """4d + 4 when 2d + 1 >= n, else None (outside the Plotkin regime)."""
    if 2 * d + 1 >= n:
        return 4 * d + 4
    return None


def mceliece_bound(n: int, d: int):
    """n(n - 2d + 2) with a flag for the n - 2d <= sqrt(n) regime proxy.

    The bound is asymptotic for n - 2d = o(sqrt(n)); the concrete proxy
    marks whether a finite instance is plausibly inside that regime.
    """
    if 2 * d > n:
        raise DomainError(f"McEliece bound needs d <= n/2, got d={d}, n={n}")
    value = n * (n - 2 * d + 2)
    in_regime = (n - 2 * d) <= math.isqrt(n)
    return value, in_regime


def _count_below(b2, x):
    # Sturm sign count for the zero-diagonal symmetric tridiagonal matrix
    # with squared off-diagonal entries b2; counts eigenvalues < x.
    count = 0
    d = 1.0
    for i in range(len(b2) + 1):
        d = -x - (b2[i - 1] / d if i > 0 else 0.0)
        if d == 0.0:
            d = -1e-300
        if d < 0:
            count += 1
    return count


def tridiag_max_eigenvalue(n: int, size: int, tol: float) -> float:
    """Largest eigenvalue of the size x size matrix with zero diagonal and
    off-diagonal entries sqrt(i(n+1-i)), i = 1..size-1, by Sturm bisection."""
    if size == 1:
        return 0.0
    b2 = [i * (n + 1 - i) for i in range(1, size)]
    lo, hi = 0.0, float(n + 2)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if _count_below(b2, mid) == size:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2


@dataclass
class SpectralReport:
    k: int
    lambda_km1: float
    lambda_k: float
    valid: bool
    bound: int | None

    def as_dict(self):
        return {
            "k": self.k,
            "lambda_km1": self.lambda_km1,
            "lambda_k": self.lambda_k,
            "valid": self.valid,
            "bound": self.bound,
        }


def spectral_bound(n: int, d: int, k: int) -> SpectralReport:
    """Barg-Nogin refinement: A_2(n,d) <= 4(n-k)/(n-lambda_k) * C(n,k).

    lambda_km1 is the top eigenvalue of the k x k matrix, lambda_k of the
    (k+1) x (k+1) one; the bound applies only when lambda_km1 >= n - 2d.
    Eigenvalues are bisected to absolute tolerance 1e-9 * n and the bound
    is rounded up from exact rational arithmetic on the bracket top.
    """
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got k={k}, n={n}")
    if not 1 <= d <= n:
        raise DomainError(f"need 1 <= d <= n, got d={d}, n={n}")
    tol = 1e-9 * n
    lam_km1 = tridiag_max_eigenvalue(n, k, tol)
    lam_k = tridiag_max_eigenvalue(n, k + 1, tol)
    valid = lam_km1 >= n - 2 * d
    bound = None
    # lambda_k < n strictly for k < n; at k = n the top eigenvalue is
    # exactly n and the prefactor degenerates, so no bound is reported.
    lam_hi = lam_k + tol  # upper end of the bisection bracket
    if valid and lam_hi < n:
        exact = Fraction(4 * (n - k)) * math.comb(n, k) / (n - Fraction(lam_hi))
        bound = math.ceil(exact)
    return SpectralReport(
        k=k, lambda_km1=lam_km1, lambda_k=lam_k, valid=valid, bound=bound
    )


@dataclass
class DGParams:
    """Delsarte-Goethals code parameters for (m, s)."""

    m: int
    s: int
    n: int
    log2_size: int
    d: float
    d_integral: bool

    @property
    def rate(self):
        return self.log2_size / self.n

    def as_dict(self):
        return {
            "m": self.m,
            "s": self.s,
            "n": self.n,
            "log2_size": self.log2_size,
            "d": int(self.d) if self.d_integral else self.d,
            "d_integral": self.d_integral,
            "rate": self.rate,
        }


def dg_params(m: int, s: int) -> DGParams:
    """Length 2^m, size 2^(s(m-1)+2m), distance 2^(m-1) - 2^(m/2-1+s).

    For odd m the distance exponent is a half-integer; the value is then
    reported as a float with d_integral False.
    """
    if m < 4:
        raise DomainError("need m >= 4")
    if not 1 <= s <= m / 2 - 1:
        raise DomainError(f"need 1 <= s <= m/2 - 1, got s={s}, m={m}")
    n = 2**m
    log2_size = s * (m - 1) + 2 * m
    if m % 2 == 0:
        d = 2 ** (m - 1) - 2 ** (m // 2 - 1 + s)
        integral = True
    else:
        d = 2 ** (m - 1) - 2 ** (m / 2 - 1 + s)
        integral = False
    return DGParams(m=m, s=s, n=n, log2_size=log2_size, d=d, d_integral=integral)


@dataclass
class DGComparison:
    """One desk-scale instance of the shadow vs Delsarte-Goethals race."""

    m: int
    delta: float
    s_m: int
    q: int
    epsilon: float
    L: int
    log2_size_dg: int
    d_dg: float
    d_shadow: float
    shadow_d_exact: bool
    log_size_ratio: float
    distance_inequality_holds: bool

    def as_dict(self):
        return {
            "m": self.m,
            "delta": self.delta,
            "s_m": self.s_m,
            "q": self.q,
            "epsilon": self.epsilon,
            "l_polynomials": self.L,
            "log2_size_dg": self.log2_size_dg,
            "d_dg": self.d_dg,
            "d_shadow": self.d_shadow,
            "shadow_d_exact": self.shadow_d_exact,
            "log_size_ratio": self.log_size_ratio,
            "distance_inequality_holds": self.distance_inequality_holds,
        }


def compare_dg(m: int, delta: float, workers: int = 1) -> DGComparison:
    """Build the shadow code that dominates the (m, s_m) Delsarte-Goethals
    code: s_m = ceil(delta m) + 1, q the next odd prime power past 2^m,
    epsilon = (1 - delta)/2. The shadow distance is measured exactly when
    the code is small enough to enumerate (L <= 20), otherwise the generic
    lower bound stands in."""
    from .analysis import weight_distribution
    from .shadow_code import construct_code

    if not 0 < delta < 5 / 12:
        raise DomainError("need 0 < delta < 5/12")
    s_m = math.ceil(delta * m) + 1
    if s_m > m / 2 - 1:
        raise DomainError(f"s_m = {s_m} exceeds m/2 - 1")
    dg = dg_params(m, s_m)
    q = next_prime_power_gt(2**m, odd_only=True)
    epsilon = (1 - delta) / 2
    built = construct_code(q, 2, epsilon=epsilon)
    if built.L <= 20:
        report = weight_distribution(built.matrix, workers=workers)
        d_shadow = report.d_exact
        exact = True
    else:
        d_shadow = built.distance_lower_bound
        exact = False
    ratio = built.L / dg.log2_size
    return DGComparison(
        m=m,
        delta=delta,
        s_m=s_m,
        q=q,
        epsilon=epsilon,
        L=built.L,
        log2_size_dg=dg.log2_size,
        d_dg=dg.d,
        d_shadow=d_shadow,
        shadow_d_exact=exact,
        log_size_ratio=ratio,
        distance_inequality_holds=dg.d <= d_shadow,
    )


@dataclass
class BoundReport:
    n: int
    d: int
    r: int
    hamming: int
    gv: int
    plotkin: int | None
    mceliece: int | None
    mceliece_in_regime: bool | None
    spectral: SpectralReport | None
    entropy_at_relative_distance: float
    entropy_at_plotkin_point: float

    def as_dict(self):
        return {
            "n": self.n,
            "d": self.d,
            "r": self.r,
            "hamming": self.hamming,
            "gv": self.gv,
            "plotkin": self.plotkin,
            "mceliece": self.mceliece,
            "mceliece_in_regime": self.mceliece_in_regime,
            "spectral": self.spectral.as_dict() if self.spectral else None,
            "entropy_at_relative_distance": self.entropy_at_relative_distance,
            "entropy_at_plotkin_point": self.entropy_at_plotkin_point,
        }


def bound_report(n, d, r, k_range=None) -> BoundReport:
    """All applicable bounds for one (n, d, r); binary-only bounds are None
    for r > 2. The spectral entry is the smallest valid bound over k_range
    (default 1..12)."""
    hamming = hamming_bound(n, d, r)
    gv = gv_bound(n, d, r)
    plotkin = mceliece = regime = spectral = None
    if r == 2:
        plotkin = plotkin_binary(n, d)
        if 2 * d <= n:
            mceliece, regime = mceliece_bound(n, d)
        best = None
        for k in k_range if k_range is not None else range(1, 13):
            if not 1 <= k <= n:
                continue
            rep = spectral_bound(n, d, k)
            if rep.valid and rep.bound is not None and (
                best is None or rep.bound < best.bound
            ):
                best = rep
        spectral = best
    return BoundReport(
        n=n,
        d=d,
        r=r,
        hamming=hamming,
        gv=gv,
        plotkin=plotkin,
        mceliece=mceliece,
        mceliece_in_regime=regime,
        spectral=spectral,
        entropy_at_relative_distance=entropy(r, d / n),
        entropy_at_plotkin_point=entropy(r, (r - 1) / (2 * r)),
    )
