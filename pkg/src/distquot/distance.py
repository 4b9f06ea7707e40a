"""Point sets, pair-distance counts, quotient sets, and coverage checks.

For E a subset of F_q^d, the profile nu(t) counts ordered pairs (x, y) in
E x E with ||x - y|| = t. It is computed exactly in integers by pair
enumeration against the cached norm array; the spectral route through the
Fourier transform is a validated secondary path, never the source of truth,
which keeps every coverage decision free of floating-point doubt.

The central quantity behind the coverage checks is the cross sum
sum_t nu(t) nu(rt). Its four-term spectral expansion is evaluated here with
the radius-paired orthogonality closed form collapsing the inner sum, so the
double frequency sum reduces to norm-histogram buckets of |Ehat|^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

import numpy as np

from .characters import characters_for
from .errors import BelowThreshold, EmptySet, EvenDimension, OddDimension
from .field import build_field
from .fourier import GridFunction, forward_transform, sphere_hat_table
from .geometry import GridDomain, build_sphere_table, point_index
from .rng import SplitMix64, sample_without_replacement

_PAIR_BLOCK = 1 << 22


class PointSet:
    """A subset of F_q^d held as sorted distinct point indices."""

    def __init__(self, domain: GridDomain, indices):
        pts = np.unique(np.asarray(indices, dtype=np.int64))
        if pts.size and (pts[0] < 0 or pts[-1] >= domain.size):
            raise ValueError("point index out of range")
        self.domain = domain
        self.points = pts

    @property
    def cardinality(self) -> int:
        return int(self.points.size)

    def indicator(self) -> np.ndarray:
        ind = np.zeros(self.domain.size, dtype=bool)
        ind[self.points] = True
        return ind

    @classmethod
    def from_vectors(cls, domain: GridDomain, vectors) -> "PointSet":
        return cls(domain, [point_index(domain, v) for v in vectors])

    @classmethod
    def full_space(cls, domain: GridDomain) -> "PointSet":
        return cls(domain, np.arange(domain.size, dtype=np.int64))

    @classmethod
    def random(cls, domain: GridDomain, size: int, rng: SplitMix64) -> "PointSet":
        if size > domain.size:
            raise ValueError(
                f"cannot place {size} distinct points in a grid of {domain.size}"
            )
        return cls(domain, sample_without_replacement(rng, domain.size, size))

    def coords(self) -> np.ndarray:
        q = self.domain.q
        return np.stack(
            [(self.points // q**k) % q for k in range(self.domain.d)]
        )


@dataclass
class PairCountProfile:
    """nu(t): ordered pairs of E at each distance t, exact integers."""

    q: int
    values: np.ndarray  # int64, length q

    def support(self) -> set[int]:
        return {int(t) for t in np.nonzero(self.values)[0]}

    def total(self) -> int:
        return int(self.values.sum())


def pair_count_profile(e: PointSet) -> PairCountProfile:
    """Exact nu via blocked pair enumeration over the norm of differences."""
    n = e.cardinality
    if n == 0:
        raise EmptySet("point set is empty")
    field = e.domain.field
    q, d = e.domain.q, e.domain.d
    coords = e.coords()
    counts = np.zeros(q, dtype=np.int64)
    rows = max(1, _PAIR_BLOCK // n)
    for start in range(0, n, rows):
        stop = min(start + rows, n)
        acc = np.zeros((stop - start, n), dtype=np.int64)
        for k in range(d):
            diff = field.sub_arr(coords[k, start:stop, None], coords[k, None, :])
            acc = field.add_arr(acc, field.sq_table[diff])
        counts += np.bincount(acc.ravel(), minlength=q)
    return PairCountProfile(q=q, values=counts)


def distance_set(e: PointSet) -> set[int]:
    """All attained norms of differences; contains 0 whenever E is nonempty."""
    return pair_count_profile(e).support()


def quotient_set(field, delta: set[int]) -> set[int]:
    """All ratios a/b with a in delta and b a nonzero member of delta."""
    nonzero = [b for b in delta if b != 0]
    return {field.mul(a, field.inv(b)) for a in delta for b in nonzero}


def spectrum_power(e: PointSet) -> np.ndarray:
    """|Ehat(m)|^2 per frequency; reusable across the spectral routes."""
    ehat = forward_transform(GridFunction.indicator(e.domain, e.points))
    return np.abs(ehat.values) ** 2


def pair_counts_spectral(e: PointSet, power: np.ndarray | None = None) -> np.ndarray:
    """nu evaluated as q^(2d) sum_m Shat_t(m) |Ehat(m)|^2 per radius t.

    Collapses the frequency sum into norm-histogram buckets; agrees with
    pair_count_profile within tolerance (complex output, tiny imaginary part).
    """
    domain = e.domain
    q, d = domain.q, domain.d
    if power is None:
        power = spectrum_power(e)
    norms = build_sphere_table(domain).norm_of
    buckets = np.bincount(norms, weights=power, minlength=q)
    radial = sphere_hat_table(domain).radial
    return float(q) ** (2 * d) * (radial @ buckets + power[0] / q)


def pair_count_cross_sum(e: PointSet, r: int, profile: PairCountProfile | None = None) -> int:
    """Exact integer sum_t nu(t) nu(rt) for r != 0."""
    field = e.domain.field
    if not 0 < r < field.q:
        raise ValueError(f"ratio r must be a nonzero field element, got {r}")
    if profile is None:
        profile = pair_count_profile(e)
    vals = profile.values
    return int(
        sum(int(vals[t]) * int(vals[field.mul(r, t)]) for t in range(field.q))
    )


def key_inequality_check(
    e: PointSet, r: int, profile: PairCountProfile | None = None
) -> bool:
    """Exact integer test nu(0)^2 < sum_t nu(t) nu(rt)."""
    if profile is None:
        profile = pair_count_profile(e)
    nu0 = int(profile.values[0])
    return nu0 * nu0 < pair_count_cross_sum(e, r, profile)


@dataclass
class DecompositionReport:
    """Four-term spectral expansion of sum_t nu(t) nu(rt).

    size_term comes from sphere sizes alone, the two mixed terms couple sizes
    with the spectrum, and the spectral term is the double frequency sum. The
    mixed terms coincide, the total matches the exact integer cross sum, and
    for even d the size term has its own closed form.
    """

    ratio: int
    size_term: complex
    mixed_term_left: complex
    mixed_term_right: complex
    spectral_term: complex
    total: complex
    exact_total: int
    size_term_closed: float | None


def cross_sum_decomposition(
    e: PointSet,
    r: int,
    profile: PairCountProfile | None = None,
    power: np.ndarray | None = None,
) -> DecompositionReport:
    domain = e.domain
    field = domain.field
    chars = characters_for(field)
    q, d, n = domain.q, domain.d, e.cardinality
    if not 0 < r < q:
        raise ValueError(f"ratio r must be a nonzero field element, got {r}")
    table = build_sphere_table(domain)
    sizes = table.size_of
    radial = sphere_hat_table(domain).radial
    idx = np.arange(q, dtype=np.int64)
    scaled = field.mul_arr(r, idx)

    if power is None:
        power = spectrum_power(e)
    buckets = np.bincount(table.norm_of, weights=power, minlength=q)
    buckets_nz = buckets.copy()
    buckets_nz[0] -= power[0]

    n4 = float(n) ** 4
    size_pairs = int(np.sum(sizes * sizes[scaled]))
    size_term = float(q) ** (-2 * d) * n4 * size_pairs

    qd = float(q) ** d
    n2 = float(n) ** 2
    left_profile = sizes @ radial[scaled, :]  # sum_t |S_t| radial[rt, u]
    mixed_left = qd * n2 * complex(buckets_nz @ left_profile)
    right_profile = sizes[scaled] @ radial  # sum_t |S_rt| radial[t, u]
    mixed_right = qd * n2 * complex(buckets_nz @ right_profile)

    base = chars.gauss_power(2 * d) * (
        1 if d % 2 == 0 else chars.eta(field.neg(r))
    )
    c_match = float(q) ** (-2 * d) * base * (1.0 - 1.0 / q)
    c_other = -float(q) ** (-2 * d - 1) * base
    matched = float(buckets_nz[scaled] @ buckets_nz)
    everything = float(buckets_nz.sum()) ** 2
    spectral = float(q) ** (4 * d) * (
        c_match * matched + c_other * (everything - matched)
    )

    total = size_term + mixed_left + mixed_right + spectral
    exact_total = pair_count_cross_sum(e, r, profile)
    closed = (1.0 / q + float(q) ** (-d) - float(q) ** (-d - 1)) * n4 if d % 2 == 0 else None
    return DecompositionReport(
        ratio=r,
        size_term=complex(size_term),
        mixed_term_left=mixed_left,
        mixed_term_right=mixed_right,
        spectral_term=complex(spectral),
        total=complex(total),
        exact_total=exact_total,
        size_term_closed=closed,
    )


def zero_count_spectral(e: PointSet, power: np.ndarray | None = None) -> complex:
    """nu(0) from the spectrum; matches the exact count within tolerance.

    Even d uses the expanded form with the Gauss-sum factor split off; odd d
    uses the zero-frequency mass plus the remainder over nonzero frequencies.
    """
    domain = e.domain
    field = domain.field
    chars = characters_for(field)
    q, d, n = domain.q, domain.d, e.cardinality
    if power is None:
        power = spectrum_power(e)
    table = build_sphere_table(domain)
    radial = sphere_hat_table(domain).radial
    if d % 2 == 0:
        gd = chars.gauss_power(d)
        # every norm-zero frequency except the zero vector itself
        iso_mass = float(np.sum(power[table.norm_of == 0])) - float(power[0])
        return (
            n * n / q
            - gd * n / q
            + float(q) ** (-d) * gd * n * n
            + float(q) ** d * gd * iso_mass
        )
    buckets = np.bincount(table.norm_of, weights=power, minlength=q)
    buckets[0] -= power[0]
    zero_freq_mass = float(q) ** (2 * d) * (radial[0, 0] + 1.0 / q) * power[0]
    remainder = float(q) ** (2 * d) * complex(radial[0] @ buckets)
    return zero_freq_mass + remainder


# ---------------------------------------------------------------------------
# Coverage checks.
# ---------------------------------------------------------------------------

@dataclass
class CoverageReport:
    """Outcome of one containment check on a concrete point set.

    ``passed`` records containment of the required set regardless of the
    size regime; a report below threshold is informational. ``vacuous_regime``
    flags (q, d) where no admissible set size exists at all.
    """

    statement: str
    q: int
    d: int
    set_size: int
    threshold: float
    meets_threshold: bool
    vacuous_regime: bool
    required: tuple[int, ...]
    found: tuple[int, ...]
    passed: bool
    missing: tuple[int, ...]


def _coverage(statement, domain, e, threshold, meets, vacuous, required, found):
    missing = tuple(sorted(required - found))
    return CoverageReport(
        statement=statement,
        q=domain.q,
        d=domain.d,
        set_size=e.cardinality,
        threshold=threshold,
        meets_threshold=meets,
        vacuous_regime=vacuous,
        required=tuple(sorted(required)),
        found=tuple(sorted(found)),
        passed=not missing,
        missing=missing,
    )


def check_quotient_covers_field(e: PointSet) -> CoverageReport:
    """Even d: at size 9 q^(d/2) the quotient of the distance set is all of F_q."""
    domain = e.domain
    if domain.d % 2 != 0:
        raise OddDimension("quotient-covers-field check requires even dimension")
    q = domain.q
    threshold = 9 * q ** (domain.d // 2)
    required = set(range(q))
    found = quotient_set(domain.field, distance_set(e))
    return _coverage(
        "quotient-full-field",
        domain,
        e,
        float(threshold),
        e.cardinality >= threshold,
        threshold > domain.size,
        required,
        found,
    )


def check_quotient_covers_squares(e: PointSet) -> CoverageReport:
    """Odd d >= 3: at size 6 q^(d/2) the quotient contains 0 and every square."""
    domain = e.domain
    if domain.d % 2 == 0:
        raise EvenDimension("quotient-covers-squares check requires odd dimension")
    q, d = domain.q, domain.d
    chars = characters_for(domain.field)
    threshold = 6.0 * float(q) ** (d / 2)
    meets = e.cardinality**2 >= 36 * q**d  # |E| >= 6 q^(d/2), exactly
    vacuous = 36 * q**d > domain.size**2
    required = {0} | set(chars.quadratic_residues())
    found = quotient_set(domain.field, distance_set(e))
    return _coverage(
        "quotient-squares-and-zero", domain, e, threshold, meets, vacuous,
        required, found,
    )


def distance_covers_min_size(q: int, d: int) -> int:
    """Smallest size with |E| > 2 q^((d+1)/2), computed exactly."""
    return math.isqrt(4 * q ** (d + 1)) + 1


def check_distance_covers_field(e: PointSet) -> CoverageReport:
    """Above 2 q^((d+1)/2) points the distance set itself is all of F_q."""
    domain = e.domain
    q, d = domain.q, domain.d
    threshold = 2.0 * float(q) ** ((d + 1) / 2)
    if e.cardinality**2 <= 4 * q ** (d + 1):
        raise BelowThreshold(
            f"|E| = {e.cardinality} does not exceed 2 q^((d+1)/2) = {threshold:.3f}"
        )
    required = set(range(q))
    found = distance_set(e)
    vacuous = distance_covers_min_size(q, d) > domain.size
    return _coverage(
        "distance-full-field", domain, e, threshold, True, vacuous, required, found
    )


def subfield_construction(p: int, d: int) -> PointSet:
    """E = F_p^d inside F_{p^2}^d: size q^(d/2) with quotient set only F_p.

    The prime subfield occupies element indices [0, p), so E is the set of
    points all of whose coordinates have index below p.
    """
    field = build_field(p, 2)
    domain = GridDomain(field, d)
    pts = [
        point_index(domain, v) for v in product(range(p), repeat=d)
    ]
    return PointSet(domain, pts)
