"""Identity sweeps over a domain, producing machine-readable check records.

Each sweep compares a directly accumulated quantity against its closed form
or against an independent exact computation, reports the worst relative
deviation seen, and passes iff that deviation is within tolerance. Sweeps are
exhaustive on small domains and switch to seeded sampling (at least 10^4
draws) on larger ones; the switch points are module constants.

Deviations are normalized as |a - b| / (1 + max(|a|, |b|)) so a single
tolerance applies across quantities of very different magnitudes. Exact
integer comparisons report the raw mismatch count with a zero bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .characters import TOLERANCE, CharacterCtx, characters_for
from .distance import (
    PointSet,
    cross_sum_decomposition,
    pair_count_profile,
    pair_counts_spectral,
    spectrum_power,
    zero_count_spectral,
)
from .fourier import (
    DIRECT_TRANSFORM_CAP,
    RADIAL_FROM_TRANSFORM_CAP,
    GridFunction,
    forward_transform,
    forward_transform_direct,
    inverse_transform,
    plancherel_check,
    sphere_hat_table,
    zero_sphere_hat_max,
)
from .geometry import GridDomain, build_sphere_table, sphere_size_closed
from .rng import SplitMix64

EXHAUSTIVE_SUM_LIMIT = (7, 3)  # radius-sum sweeps exhaustive when q and d fit
EXHAUSTIVE_ORTHO_LIMIT = (5, 3)  # orthogonality sweeps exhaustive when q and d fit
MIN_SAMPLES = 10_000


def _within(limit: tuple[int, int], q: int, d: int) -> bool:
    return q <= limit[0] and d <= limit[1]


def _ratio_sweep(q: int, ratio: int | None) -> list[int]:
    if ratio is None:
        return list(range(1, q))
    if not 0 < ratio < q:
        raise ValueError(f"ratio must be a nonzero field element below {q}")
    return [ratio]


@dataclass
class CheckRecord:
    """One verified identity: worst deviation over all cases swept."""

    name: str
    description: str
    cases: int
    max_deviation: float
    bound: float
    passed: bool
    details: dict = dc_field(default_factory=dict)


def rel_dev(a, b) -> float:
    return abs(a - b) / (1.0 + max(abs(a), abs(b)))


def _rel_dev_arrays(a: np.ndarray, b: np.ndarray) -> float:
    denom = 1.0 + np.maximum(np.abs(a), np.abs(b))
    return float(np.max(np.abs(a - b) / denom))


def _record(name, description, cases, deviation, *, bound=TOLERANCE, **details):
    return CheckRecord(
        name=name,
        description=description,
        cases=int(cases),
        max_deviation=float(deviation),
        bound=float(bound),
        passed=bool(deviation <= bound),
        details=details,
    )


def _rng_values(seed: int, size: int) -> np.ndarray:
    """Bulk complex noise for round-trip checks, seeded deterministically."""
    gen = np.random.Generator(np.random.PCG64(seed))
    return gen.random(size) - 0.5 + 1j * (gen.random(size) - 0.5)


# ---------------------------------------------------------------------------
# Character-level checks.
# ---------------------------------------------------------------------------

def character_checks(chars: CharacterCtx) -> list[CheckRecord]:
    field = chars.field
    q = field.q
    idx = np.arange(q, dtype=np.int64)

    dev = rel_dev(chars.gauss_direct, chars.gauss_closed())
    records = [
        _record(
            "gauss-sum-closed-form",
            "direct sum of eta(s)*chi(s) over nonzero s matches the explicit value",
            1,
            dev,
        ),
        _record(
            "gauss-magnitude",
            "G times its conjugate equals q",
            1,
            rel_dev(chars.gauss_direct * chars.gauss_direct.conjugate(), q),
        ),
    ]

    worst = 0.0
    for s in range(q):
        total = complex(np.sum(chars.chi_table[field.mul_arr(s, idx)]))
        worst = max(worst, rel_dev(total, q if s == 0 else 0.0))
    records.append(
        _record(
            "chi-orthogonality",
            "sum of chi(s*x) over x is q at s = 0 and vanishes otherwise",
            q,
            worst,
        )
    )

    records.append(
        _record(
            "eta-orthogonality",
            "eta sums to zero over the nonzero elements (exact integers)",
            1,
            float(abs(int(chars.eta_table.sum()))),
            bound=0.0,
        )
    )

    mism = int(np.sum(chars.eta_table[1:] != chars.eta_table[field.inv_table[1:]]))
    records.append(
        _record(
            "eta-inversion-symmetry",
            "eta(a) equals eta(1/a) for every nonzero a (exact)",
            q - 1,
            float(mism),
            bound=0.0,
        )
    )

    worst = 0.0
    g = chars.gauss_direct
    for c in range(1, q):
        total = complex(np.sum(chars.eta_table * chars.chi_table[field.mul_arr(c, idx)]))
        worst = max(worst, rel_dev(total, chars.eta(c) * g))
    records.append(
        _record(
            "twisted-character-sum",
            "sum of eta(t)*chi(c*t) equals eta(c)*G for every nonzero c "
            "(covers all products c = r*s of nonzero pairs)",
            q - 1,
            worst,
        )
    )
    return records


def gauss_parity_check(chars: CharacterCtx, d: int) -> CheckRecord:
    q = chars.field.q
    g2d = chars.gauss_direct ** (2 * d)
    if d % 2 == 0:
        dev = rel_dev(g2d, float(q) ** d)
        desc = "G^(2d) equals q^d in even dimension"
    else:
        dev = rel_dev(g2d * chars.eta(chars.field.neg(1)), float(q) ** d)
        desc = "G^(2d)*eta(-1) equals q^d in odd dimension"
    return _record("gauss-power-parity", desc, 1, dev)


# ---------------------------------------------------------------------------
# Geometry and transform checks.
# ---------------------------------------------------------------------------

def sphere_size_check(domain: GridDomain) -> CheckRecord:
    sizes = build_sphere_table(domain).size_of
    closed = np.array(
        [sphere_size_closed(domain, t) for t in range(domain.q)], dtype=np.int64
    )
    mismatches = int(np.sum(sizes != closed))
    total_ok = int(sizes.sum()) == domain.size
    return _record(
        "sphere-sizes-closed-form",
        "brute-force sphere cardinalities match the closed form for every "
        "radius, and they sum to q^d (exact integers)",
        domain.q,
        float(mismatches + (0 if total_ok else 1)),
        bound=0.0,
        total_points=int(sizes.sum()),
    )


def transform_roundtrip_checks(
    domain: GridDomain, trials: int, seed: int
) -> list[CheckRecord]:
    rng = SplitMix64(seed)
    inv_dev = 0.0
    pl_dev = 0.0
    fact_dev = 0.0
    fact_cases = 0
    for t in range(trials):
        f = GridFunction(domain, _rng_values(rng.next64(), domain.size))
        back = inverse_transform(forward_transform(f))
        inv_dev = max(inv_dev, _rel_dev_arrays(back.values, f.values))
        lhs, rhs = plancherel_check(f)
        pl_dev = max(pl_dev, rel_dev(lhs, rhs))
        if domain.size <= DIRECT_TRANSFORM_CAP and t < 3:
            lit = forward_transform_direct(f)
            fac = forward_transform(f)
            fact_dev = max(fact_dev, _rel_dev_arrays(lit.values, fac.values))
            fact_cases += 1
    records = [
        _record(
            "fourier-inversion",
            "inverse transform of the forward transform returns the input",
            trials,
            inv_dev,
        ),
        _record(
            "plancherel",
            "spectral energy equals normalized spatial energy",
            trials,
            pl_dev,
        ),
    ]
    if fact_cases:
        records.append(
            _record(
                "transform-factorization",
                "axis-factorized transform agrees with the literal double loop",
                fact_cases,
                fact_dev,
            )
        )
    return records


def _sphere_points(domain: GridDomain, j: int) -> np.ndarray:
    norms = build_sphere_table(domain).norm_of
    return np.nonzero(norms == j)[0]


def _definitional_hat_at(domain: GridDomain, j: int, m_index: int) -> complex:
    """Shat_j(m) summed literally over the sphere's points."""
    field = domain.field
    chars = characters_for(field)
    q = domain.q
    pts = _sphere_points(domain, j)
    dot = np.zeros(pts.shape, dtype=np.int64)
    for k in range(domain.d):
        mk = (m_index // q**k) % q
        dot = field.add_arr(dot, field.mul_arr((pts // q**k) % q, mk))
    return float(q) ** (-domain.d) * complex(np.sum(chars.chi_table[field.neg_arr(dot)]))


def sphere_hat_closed_check(
    domain: GridDomain, samples: int, seed: int
) -> CheckRecord:
    """Closed-form sphere transform against the definitional transform.

    Exhaustive over every (radius, frequency) pair when the grid fits the
    transform cap; otherwise a seeded sample of literal sphere sums.
    """
    closed = sphere_hat_table(domain, source="closed-form")
    norms = build_sphere_table(domain).norm_of.astype(np.int64)
    q = domain.q
    if domain.size <= RADIAL_FROM_TRANSFORM_CAP:
        worst = 0.0
        inv_q = 1.0 / q
        for j in range(q):
            grid = forward_transform(
                GridFunction.indicator(domain, _sphere_points(domain, j))
            ).values
            closed_grid = closed.radial[j][norms]
            closed_grid[0] += inv_q
            worst = max(worst, _rel_dev_arrays(grid, closed_grid))
        return _record(
            "sphere-hat-closed-form",
            "closed-form sphere transform matches the definitional transform "
            "at every (radius, frequency) pair",
            q * domain.size,
            worst,
        )
    rng = SplitMix64(seed)
    light = max(24, samples // 200)
    worst = 0.0
    for _ in range(light):
        j = rng.below(q)
        m = rng.below(domain.size)
        direct = _definitional_hat_at(domain, j, m)
        worst = max(
            worst,
            rel_dev(direct, closed.value_by_norm(j, int(norms[m]), m == 0)),
        )
    return _record(
        "sphere-hat-closed-form",
        "closed-form sphere transform matches literal sphere sums at sampled "
        "(radius, frequency) pairs",
        light,
        worst,
    )


def sphere_hat_radial_check(domain: GridDomain) -> CheckRecord | None:
    """Equal-norm frequencies share one transform value (small grids)."""
    if domain.size > RADIAL_FROM_TRANSFORM_CAP:
        return None
    table = sphere_hat_table(domain, source="transform")
    return _record(
        "sphere-hat-radial-collapse",
        "sphere transforms at equal-norm frequencies coincide",
        domain.q * domain.size,
        table.class_deviation,
    )


# ---------------------------------------------------------------------------
# Radius-sum identities.
# ---------------------------------------------------------------------------

def _scaled_rows(domain: GridDomain, r: int) -> np.ndarray:
    return domain.field.mul_arr(r, np.arange(domain.q, dtype=np.int64))


def sphere_hat_sum_checks(
    domain: GridDomain, samples: int, seed: int, ratio: int | None = None
) -> list[CheckRecord]:
    """The two radius-sum identities at nonzero frequencies.

    zero-sum: sum_t Shat_{rt}(m) = 0; weighted: sum_t w(t) Shat_{rt}(m)
    equals q * Shat_0(m).
    """
    field = domain.field
    chars = characters_for(field)
    q = domain.q
    table = sphere_hat_table(domain)
    radial = table.radial
    weights = chars.size_weight_table()
    ratios = _ratio_sweep(q, ratio)
    exhaustive = _within(EXHAUSTIVE_SUM_LIMIT, q, domain.d)
    if exhaustive:
        norms = build_sphere_table(domain).norm_of.astype(np.int64)[1:]
        zero_dev = 0.0
        weighted_dev = 0.0
        for r in ratios:
            rows = radial[_scaled_rows(domain, r)]
            colsum = rows.sum(axis=0)
            wsum = weights @ rows
            rhs = q * radial[0]
            zero_dev = max(zero_dev, float(np.max(np.abs(colsum[norms]))))
            weighted_dev = max(
                weighted_dev, _rel_dev_arrays(wsum[norms], rhs[norms])
            )
        cases = len(ratios) * (domain.size - 1)
        mode = "exhaustive over every nonzero (r, m)"
    else:
        rng = SplitMix64(seed)
        n = max(samples, MIN_SAMPLES)
        r_arr = np.array(
            [ratios[rng.below(len(ratios))] for _ in range(n)], dtype=np.int64
        )
        m_arr = np.array(
            [1 + rng.below(domain.size - 1) for _ in range(n)], dtype=np.int64
        )
        u_arr = build_sphere_table(domain).norm_of.astype(np.int64)[m_arr]
        acc = np.zeros(n, dtype=np.complex128)
        acc_w = np.zeros(n, dtype=np.complex128)
        for t in range(q):
            rows = field.mul_arr(r_arr, t)
            vals = radial[rows, u_arr]
            acc += vals
            acc_w += int(weights[t]) * vals
        zero_dev = float(np.max(np.abs(acc)))
        rhs = q * radial[0][u_arr]
        weighted_dev = _rel_dev_arrays(acc_w, rhs)
        cases = n
        mode = f"{n} seeded (r, m) samples"
    return [
        _record(
            "sphere-hat-sum-zero",
            f"sum of sphere transforms over all scaled radii vanishes at "
            f"nonzero frequencies; {mode}",
            cases,
            zero_dev,
        ),
        _record(
            "sphere-hat-weighted-sum",
            f"size-weighted sum of sphere transforms equals q times the "
            f"zero-radius transform; {mode}",
            cases,
            weighted_dev,
        ),
    ]


# ---------------------------------------------------------------------------
# Orthogonality of radius-paired transforms.
# ---------------------------------------------------------------------------

def _orthogonality_closed_vectors(domain, r_arr, matched, delta_pairs):
    """General and parity-specialized closed forms, vectorized over samples."""
    field = domain.field
    chars = characters_for(field)
    q, d = domain.q, domain.d
    if d % 2 == 0:
        eta_negr = np.ones(len(r_arr))
        eta_r = np.ones(len(r_arr))
    else:
        eta_negr = chars.eta_table[field.neg_arr(r_arr)].astype(np.float64)
        eta_r = chars.eta_table[r_arr].astype(np.float64)
    base = chars.gauss_power(2 * d) * eta_negr
    general = np.where(
        matched,
        delta_pairs / q + float(q) ** (-2 * d) * base * (1.0 - 1.0 / q),
        -float(q) ** (-2 * d - 1) * base,
    )
    parity = np.where(
        matched,
        delta_pairs / q + (float(q) ** (-d) - float(q) ** (-d - 1)) * eta_r,
        -float(q) ** (-d - 1) * eta_r,
    )
    return general, parity


def orthogonality_checks(
    domain: GridDomain, samples: int, seed: int, ratio: int | None = None
) -> list[CheckRecord]:
    field = domain.field
    q = domain.q
    radial = sphere_hat_table(domain).radial
    norms_all = build_sphere_table(domain).norm_of.astype(np.int64)
    ratios = _ratio_sweep(q, ratio)
    exhaustive = _within(EXHAUSTIVE_ORTHO_LIMIT, q, domain.d)
    gen_dev = 0.0
    par_dev = 0.0
    matched_cases = 0
    split_cases = 0
    if exhaustive:
        values = radial[:, norms_all]  # (q radii, size frequencies)
        values[:, 0] += 1.0 / q
        cases = 0
        for r in ratios:
            direct = values.T @ values[_scaled_rows(domain, r)]
            scaled_norm = field.mul_arr(r, norms_all)
            matched = norms_all[:, None] == scaled_norm[None, :]
            delta_pairs = np.zeros((domain.size, domain.size))
            delta_pairs[0, 0] = 1.0
            rr = np.full(domain.size * domain.size, r, dtype=np.int64)
            general, parity = _orthogonality_closed_vectors(
                domain, rr, matched.ravel(), delta_pairs.ravel()
            )
            gen_dev = max(gen_dev, _rel_dev_arrays(direct.ravel(), general))
            par_dev = max(par_dev, _rel_dev_arrays(direct.ravel(), parity))
            matched_cases += int(matched.sum())
            split_cases += int((~matched).sum())
            cases += matched.size
        mode = "exhaustive over every (r, m, m')"
    else:
        rng = SplitMix64(seed)
        n = max(samples, MIN_SAMPLES)
        r_arr = np.array(
            [ratios[rng.below(len(ratios))] for _ in range(n)], dtype=np.int64
        )
        m_arr = np.array([rng.below(domain.size) for _ in range(n)], dtype=np.int64)
        mp_arr = np.array([rng.below(domain.size) for _ in range(n)], dtype=np.int64)
        u = norms_all[m_arr]
        up = norms_all[mp_arr]
        left_delta = (m_arr == 0).astype(np.float64) / q
        right_delta = (mp_arr == 0).astype(np.float64) / q
        direct = np.zeros(n, dtype=np.complex128)
        for t in range(q):
            left = radial[t, u] + left_delta
            right = radial[field.mul_arr(r_arr, t), up] + right_delta
            direct += left * right
        matched = u == field.mul_arr(r_arr, up)
        delta_pairs = ((m_arr == 0) & (mp_arr == 0)).astype(np.float64)
        general, parity = _orthogonality_closed_vectors(
            domain, r_arr, matched, delta_pairs
        )
        gen_dev = _rel_dev_arrays(direct, general)
        par_dev = _rel_dev_arrays(direct, parity)
        matched_cases = int(matched.sum())
        split_cases = int((~matched).sum())
        cases = n
        mode = f"{n} seeded (r, m, m') samples"
    return [
        _record(
            "sphere-hat-orthogonality-general",
            f"radius-paired transform products match the two-branch closed "
            f"form; {mode}",
            cases,
            gen_dev,
            matched_branch=matched_cases,
            unmatched_branch=split_cases,
        ),
        _record(
            "sphere-hat-orthogonality-parity",
            f"radius-paired transform products match the parity-specialized "
            f"closed form; {mode}",
            cases,
            par_dev,
            matched_branch=matched_cases,
            unmatched_branch=split_cases,
        ),
    ]


def size_weighted_sum_check(
    domain: GridDomain, samples: int, seed: int, ratio: int | None = None
) -> CheckRecord:
    """Odd d: sum_t |S_t| Shat_{rt}(m) against its closed form."""
    field = domain.field
    chars = characters_for(field)
    q, d = domain.q, domain.d
    table = build_sphere_table(domain)
    sizes = table.size_of
    radial = sphere_hat_table(domain).radial
    sign_elem = 1 if ((d + 1) // 2) % 2 == 0 else field.neg(1)
    coeff = float(q) ** (-(d + 3) // 2) * chars.gauss_power(d + 1)

    def closed_for(r: int, u_is_zero: np.ndarray) -> np.ndarray:
        eta_factor = chars.eta(field.mul(r, sign_elem))
        return coeff * eta_factor * np.where(u_is_zero, q - 1.0, -1.0)

    ratios = _ratio_sweep(q, ratio)
    exhaustive = _within(EXHAUSTIVE_ORTHO_LIMIT, q, d)
    if exhaustive:
        norms = table.norm_of.astype(np.int64)[1:]
        worst = 0.0
        for r in ratios:
            direct_u = sizes @ radial[_scaled_rows(domain, r)]
            closed_u = closed_for(r, np.arange(q) == 0)
            worst = max(
                worst, _rel_dev_arrays(direct_u[norms], closed_u[norms])
            )
        cases = len(ratios) * (domain.size - 1)
        mode = "exhaustive over every nonzero (r, m)"
    else:
        rng = SplitMix64(seed)
        n = max(samples, MIN_SAMPLES)
        r_arr = np.array(
            [ratios[rng.below(len(ratios))] for _ in range(n)], dtype=np.int64
        )
        m_arr = np.array(
            [1 + rng.below(domain.size - 1) for _ in range(n)], dtype=np.int64
        )
        u_arr = table.norm_of.astype(np.int64)[m_arr]
        direct = np.zeros(n, dtype=np.complex128)
        for t in range(q):
            direct += int(sizes[t]) * radial[field.mul_arr(r_arr, t), u_arr]
        eta_factor = chars.eta_table[
            field.mul_arr(r_arr, np.full(n, sign_elem, dtype=np.int64))
        ].astype(np.float64)
        closed = coeff * eta_factor * np.where(u_arr == 0, q - 1.0, -1.0)
        worst = _rel_dev_arrays(direct, closed)
        cases = n
        mode = f"{n} seeded (r, m) samples"
    return _record(
        "size-weighted-hat-sum",
        f"sphere-size-weighted transform sum matches its closed form in odd "
        f"dimension; {mode}",
        cases,
        worst,
    )


def zero_hat_max_check(domain: GridDomain) -> CheckRecord:
    value, bound = zero_sphere_hat_max(domain)
    return _record(
        "zero-sphere-hat-max",
        "peak magnitude of the zero-radius transform away from frequency "
        "zero stays within the parity bound",
        domain.size - 1,
        max(0.0, value - bound),
        peak=value,
        parity_bound=bound,
    )


# ---------------------------------------------------------------------------
# Pair-count checks.
# ---------------------------------------------------------------------------

def _set_sizes_for(domain: GridDomain) -> list[int]:
    q, size = domain.q, domain.size
    cap = min(size, 512)
    candidates = {2, 3, q // 2 + 1, q, 2 * q, 4 * q, size // 2, size}
    return sorted({min(c, cap) for c in candidates if c >= 1})


def pair_count_checks(
    domain: GridDomain, n_sets: int, seed: int, ratio: int | None = None
) -> list[CheckRecord]:
    """Spectral pair-count routes against exact integer counting."""
    rng = SplitMix64(seed)
    sizes = _set_sizes_for(domain)
    q = domain.q
    ratios = _ratio_sweep(q, ratio)
    spectral_dev = 0.0
    zero_dev = 0.0
    total_dev = 0.0
    mixed_dev = 0.0
    size_term_dev = 0.0
    invariant_failures = 0
    size_lower_failures = 0
    even = domain.d % 2 == 0
    for i in range(n_sets):
        e = PointSet.random(domain, sizes[i % len(sizes)], rng)
        profile = pair_count_profile(e)
        n = e.cardinality
        if profile.total() != n * n or int(profile.values[0]) < n:
            invariant_failures += 1
        power = spectrum_power(e)
        spectral = pair_counts_spectral(e, power)
        spectral_dev = max(
            spectral_dev,
            _rel_dev_arrays(spectral, profile.values.astype(np.float64)),
        )
        zero_dev = max(
            zero_dev, rel_dev(zero_count_spectral(e, power), int(profile.values[0]))
        )
        r = ratios[i % len(ratios)]
        rep = cross_sum_decomposition(e, r, profile, power)
        total_dev = max(total_dev, rel_dev(rep.total, rep.exact_total))
        mixed_dev = max(
            mixed_dev, rel_dev(rep.mixed_term_left, rep.mixed_term_right)
        )
        if even:
            size_term_dev = max(
                size_term_dev, rel_dev(rep.size_term, rep.size_term_closed)
            )
        elif characters_for(domain.field).eta(r) == 1:
            floor = float(n) ** 4 / q
            if rep.size_term.real < floor * (1.0 - 1e-9):
                size_lower_failures += 1
    records = [
        _record(
            "pair-counts-spectral-vs-direct",
            "spectral pair-count evaluation matches exact integer counting "
            "at every radius",
            n_sets * q,
            spectral_dev,
        ),
        _record(
            "pair-count-invariants",
            "profile sums to |E|^2 and the zero-radius count is at least |E|",
            n_sets,
            float(invariant_failures),
            bound=0.0,
        ),
        _record(
            "zero-count-spectral",
            "spectral formula for the zero-distance count matches exact "
            "counting",
            n_sets,
            zero_dev,
        ),
        _record(
            "decomposition-total",
            "four-term expansion of the cross sum matches the exact integer "
            "value",
            n_sets,
            total_dev,
        ),
        _record(
            "decomposition-mixed-symmetry",
            "the two mixed expansion terms coincide",
            n_sets,
            mixed_dev,
        ),
    ]
    if even:
        records.append(
            _record(
                "size-term-closed-form",
                "the size term of the expansion matches its even-dimension "
                "closed form",
                n_sets,
                size_term_dev,
            )
        )
    else:
        records.append(
            _record(
                "size-term-lower-bound",
                "for square ratios the size term is at least |E|^4 / q",
                n_sets,
                float(size_lower_failures),
                bound=0.0,
            )
        )
    return records


# ---------------------------------------------------------------------------
# Full suite.
# ---------------------------------------------------------------------------

def identity_suite(
    domain: GridDomain,
    *,
    trials: int,
    samples: int,
    seed: int,
    ratio: int | None = None,
) -> list[CheckRecord]:
    """Every identity check applicable to the domain, in a fixed order."""
    chars = characters_for(domain.field)
    records = character_checks(chars)
    records.append(gauss_parity_check(chars, domain.d))
    records.append(sphere_size_check(domain))
    records.extend(transform_roundtrip_checks(domain, trials, seed))
    records.append(sphere_hat_closed_check(domain, samples, seed))
    radial = sphere_hat_radial_check(domain)
    if radial is not None:
        records.append(radial)
    records.extend(sphere_hat_sum_checks(domain, samples, seed, ratio))
    records.extend(orthogonality_checks(domain, samples, seed, ratio))
    if domain.d % 2 == 1:
        records.append(size_weighted_sum_check(domain, samples, seed, ratio))
    records.append(zero_hat_max_check(domain))
    records.extend(pair_count_checks(domain, trials, seed, ratio))
    return records
