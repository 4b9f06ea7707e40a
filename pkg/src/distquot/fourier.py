"""The normalized Fourier transform on F_q^d and sphere-transform identities.

Conventions: the forward transform is fhat(m) = q^(-d) * sum_x chi(-x.m) f(x)
and the inverse is f(x) = sum_m chi(x.m) fhat(m); Plancherel then reads
sum |fhat|^2 = q^(-d) sum |f|^2. All closed forms in this package assume this
normalization.

Because chi is additive, the d-dimensional transform factorizes into d
one-dimensional passes with the q-by-q kernel chi(-x*m); that is the default
O(d q^(d+1)) route. The literal O(q^(2d)) evaluation is retained as a test
oracle for small grids.

The transform of a sphere indicator has the closed form

    Shat_j(m) = q^(-1) delta_0(m)
              + q^(-d-1) eta(-1)^d G^d sum_{s != 0} eta(s)^d chi(j s + ||m||/(4s))

whose non-delta part depends on m only through ||m||. ``SphereHatTable``
stores that radial profile per radius, built either from actual transforms
(small grids) or from the closed form (large grids); the two sources agree
within tolerance and the agreement is tested.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .characters import CharacterCtx, characters_for
from .errors import CapExceeded, EvenDimension
from .geometry import (
    GridDomain,
    build_sphere_table,
    coords_matrix,
    point_index,
    vector_norm,
)

DIRECT_TRANSFORM_CAP = 1 << 12
RADIAL_FROM_TRANSFORM_CAP = 1 << 16


@dataclass
class GridFunction:
    """A dense complex-valued function on F_q^d, indexed by point index."""

    domain: GridDomain
    values: np.ndarray

    @classmethod
    def zeros(cls, domain: GridDomain) -> "GridFunction":
        return cls(domain, np.zeros(domain.size, dtype=np.complex128))

    @classmethod
    def indicator(cls, domain: GridDomain, indices) -> "GridFunction":
        f = cls.zeros(domain)
        f.values[np.asarray(indices, dtype=np.int64)] = 1.0
        return f


def _kernels(domain: GridDomain) -> tuple[np.ndarray, np.ndarray]:
    cached = domain._cache.get("kernels")
    if cached is not None:
        return cached
    field = domain.field
    chars = characters_for(field)
    idx = np.arange(domain.q, dtype=np.int64)
    prod = field.mul_arr(idx[:, None], idx[None, :])
    forward = chars.chi_table[field.neg_arr(prod)]
    inverse = chars.chi_table[prod]
    domain._cache["kernels"] = (forward, inverse)
    return forward, inverse


def _apply_kernel(values: np.ndarray, kernel: np.ndarray, q: int, d: int) -> np.ndarray:
    arr = values.reshape((q,) * d)
    for axis in range(d):
        arr = np.moveaxis(np.tensordot(kernel, arr, axes=([1], [axis])), 0, axis)
    return arr.reshape(-1)


def forward_transform(f: GridFunction) -> GridFunction:
    """fhat(m) = q^(-d) sum_x chi(-x.m) f(x), via d axis passes."""
    domain = f.domain
    kernel, _ = _kernels(domain)
    out = _apply_kernel(f.values.astype(np.complex128), kernel, domain.q, domain.d)
    out *= float(domain.q) ** (-domain.d)
    return GridFunction(domain, out)


def inverse_transform(fhat: GridFunction) -> GridFunction:
    """f(x) = sum_m chi(x.m) fhat(m); exact inverse of forward_transform."""
    domain = fhat.domain
    _, kernel = _kernels(domain)
    out = _apply_kernel(fhat.values.astype(np.complex128), kernel, domain.q, domain.d)
    return GridFunction(domain, out)


def forward_transform_direct(f: GridFunction) -> GridFunction:
    """Literal double-loop transform; the test oracle for small grids."""
    domain = f.domain
    if domain.size > DIRECT_TRANSFORM_CAP:
        raise CapExceeded(
            f"direct transform limited to {DIRECT_TRANSFORM_CAP} points"
        )
    field = domain.field
    chars = characters_for(field)
    coords = coords_matrix(domain)
    q = domain.q
    out = np.empty(domain.size, dtype=np.complex128)
    for m in range(domain.size):
        dot = np.zeros(domain.size, dtype=np.int64)
        for k in range(domain.d):
            mk = (m // q**k) % q
            dot = field.add_arr(dot, field.mul_arr(coords[k], mk))
        out[m] = chars.chi_table[field.neg_arr(dot)] @ f.values
    out *= float(q) ** (-domain.d)
    return GridFunction(domain, out)


def plancherel_check(f: GridFunction) -> tuple[float, float]:
    """(sum |fhat|^2, q^(-d) sum |f|^2); the two agree within tolerance."""
    fhat = forward_transform(f)
    lhs = float(np.sum(np.abs(fhat.values) ** 2))
    rhs = float(f.domain.q) ** (-f.domain.d) * float(np.sum(np.abs(f.values) ** 2))
    return lhs, rhs


# ---------------------------------------------------------------------------
# Sphere transforms.
# ---------------------------------------------------------------------------

def _eta_power_d(chars: CharacterCtx, x: int, d: int) -> int:
    return 1 if d % 2 == 0 else chars.eta(x)


def _radial_closed(domain: GridDomain) -> np.ndarray:
    """radial[j, u]: the non-delta part of Shat_j at any m with ||m|| = u."""
    field = domain.field
    chars = characters_for(field)
    chars.gauss_sum()  # validates the character tables before use
    q, d = domain.q, domain.d
    inv4 = field.inv(field.element_of_int(4))
    idx = np.arange(q, dtype=np.int64)
    acc = np.zeros((q, q), dtype=np.complex128)
    for s in range(1, q):
        sign = _eta_power_d(chars, s, d)
        js = field.mul_arr(idx, s)  # j*s per radius j
        uc = field.mul_arr(idx, field.mul(inv4, field.inv(s)))  # u/(4s) per norm u
        acc += sign * chars.chi_table[field.add_arr(js[:, None], uc[None, :])]
    coeff = (
        float(q) ** (-d - 1)
        * _eta_power_d(chars, field.neg(1), d)
        * chars.gauss_power(d)
    )
    return coeff * acc


def _radial_from_transforms(domain: GridDomain) -> tuple[np.ndarray, float]:
    """Radial profiles read off actual sphere transforms, plus the largest
    deviation of any frequency from its norm-class representative."""
    table = build_sphere_table(domain)
    norms = table.norm_of.astype(np.int64)
    q = domain.q
    closed = _radial_closed(domain)  # fills norm classes with no nonzero member
    reps = np.full(q, -1, dtype=np.int64)
    rev = np.arange(domain.size - 1, 0, -1, dtype=np.int64)
    reps[norms[rev]] = rev  # last write wins -> smallest nonzero index per class
    radial = np.empty((q, q), dtype=np.complex128)
    deviation = 0.0
    inv_q = 1.0 / q
    for j in range(q):
        grid = forward_transform(
            GridFunction.indicator(domain, np.nonzero(norms == j)[0])
        ).values
        row = np.where(reps >= 0, grid[np.maximum(reps, 0)], closed[j])
        radial[j] = row
        recon = row[norms]
        recon[0] += inv_q
        deviation = max(deviation, float(np.max(np.abs(grid - recon))))
    return radial, deviation


@dataclass
class SphereHatTable:
    """Per-radius radial profile of the sphere transforms.

    value of Shat_j at m is q^(-1)*[m == 0] + radial[j, ||m||]; the table is
    the workhorse behind every identity sweep and the spectral pair counts.
    """

    domain: GridDomain
    radial: np.ndarray  # (q, q) complex
    source: str  # "transform" or "closed-form"
    class_deviation: float  # 0.0 for closed-form source

    def value_by_norm(self, j: int, u: int, at_zero_vector: bool) -> complex:
        v = complex(self.radial[j, u])
        return v + 1.0 / self.domain.q if at_zero_vector else v

    def value(self, j: int, m) -> complex:
        mi = point_index(self.domain, m)
        u = vector_norm(self.domain.field, m)
        return self.value_by_norm(j, u, mi == 0)


def sphere_hat_table(domain: GridDomain, *, source: str = "auto") -> SphereHatTable:
    if source == "auto":
        source = (
            "transform" if domain.size <= RADIAL_FROM_TRANSFORM_CAP else "closed-form"
        )
    key = ("sphere_hat", source)
    cached = domain._cache.get(key)
    if cached is not None:
        return cached
    if source == "transform":
        radial, deviation = _radial_from_transforms(domain)
    elif source == "closed-form":
        radial, deviation = _radial_closed(domain), 0.0
    else:
        raise ValueError(f"unknown sphere-hat source {source!r}")
    table = SphereHatTable(
        domain=domain, radial=radial, source=source, class_deviation=deviation
    )
    domain._cache[key] = table
    return table


def sphere_hat_closed(domain: GridDomain, j: int, m) -> complex:
    """Closed-form Shat_j(m); matches the definitional transform pointwise."""
    field = domain.field
    chars = characters_for(field)
    q, d = domain.q, domain.d
    mi = point_index(domain, m)
    u = vector_norm(field, m)
    inv4 = field.inv(field.element_of_int(4))
    total = 0.0 + 0.0j
    for s in range(1, q):
        arg = field.add(field.mul(j, s), field.mul(u, field.mul(inv4, field.inv(s))))
        total += _eta_power_d(chars, s, d) * chars.chi(arg)
    coeff = (
        float(q) ** (-d - 1)
        * _eta_power_d(chars, field.neg(1), d)
        * chars.gauss_power(d)
    )
    value = coeff * total
    if mi == 0:
        value += 1.0 / q
    return value


def _check_r_m(domain: GridDomain, r: int, m) -> tuple[int, int]:
    if not 0 < r < domain.q:
        raise ValueError(f"ratio r must be a nonzero field element, got {r}")
    mi = point_index(domain, m)
    if mi == 0:
        raise ValueError("frequency m must be a nonzero vector")
    return mi, vector_norm(domain.field, m)


def sum_sphere_hat_over_radii(domain: GridDomain, r: int, m) -> complex:
    """sum_t Shat_{rt}(m) for m != 0; vanishes identically."""
    _, u = _check_r_m(domain, r, m)
    table = sphere_hat_table(domain)
    scaled = domain.field.mul_arr(r, np.arange(domain.q, dtype=np.int64))
    return complex(np.sum(table.radial[scaled, u]))


def weighted_sphere_hat_sum(domain: GridDomain, r: int, m) -> tuple[complex, complex]:
    """(sum_t w(t) Shat_{rt}(m), q * Shat_0(m)) for m != 0; the two agree."""
    _, u = _check_r_m(domain, r, m)
    chars = characters_for(domain.field)
    table = sphere_hat_table(domain)
    scaled = domain.field.mul_arr(r, np.arange(domain.q, dtype=np.int64))
    lhs = complex(np.sum(chars.size_weight_table() * table.radial[scaled, u]))
    rhs = domain.q * complex(table.radial[0, u])
    return lhs, rhs


@dataclass
class OrthogonalityResult:
    """Radius-paired product sum and its two closed forms."""

    direct: complex
    general_closed: complex
    parity_closed: complex
    norms_matched: bool


def sphere_hat_orthogonality(
    domain: GridDomain, r: int, m, mprime
) -> OrthogonalityResult:
    """sum_t Shat_t(m) Shat_{rt}(m'), split on ||m|| = r ||m'||."""
    if not 0 < r < domain.q:
        raise ValueError(f"ratio r must be a nonzero field element, got {r}")
    field = domain.field
    chars = characters_for(field)
    q, d = domain.q, domain.d
    table = sphere_hat_table(domain)
    mi = point_index(domain, m)
    mpi = point_index(domain, mprime)
    u = vector_norm(field, m)
    up = vector_norm(field, mprime)
    idx = np.arange(q, dtype=np.int64)
    left = table.radial[:, u].copy()
    right = table.radial[:, up].copy()
    if mi == 0:
        left += 1.0 / q
    if mpi == 0:
        right += 1.0 / q
    direct = complex(np.sum(left * right[field.mul_arr(r, idx)]))

    matched = u == field.mul(r, up)
    delta_part = (1.0 / q) * (mi == 0) * (mpi == 0)
    base = chars.gauss_power(2 * d) * _eta_power_d(chars, field.neg(r), d)
    if matched:
        general = delta_part + float(q) ** (-2 * d) * base * (1.0 - 1.0 / q)
    else:
        general = -float(q) ** (-2 * d - 1) * base
    eta_r = 1 if d % 2 == 0 else chars.eta(r)
    if matched:
        parity = delta_part + (float(q) ** (-d) - float(q) ** (-d - 1)) * eta_r
    else:
        parity = -float(q) ** (-d - 1) * eta_r
    return OrthogonalityResult(
        direct=direct,
        general_closed=complex(general),
        parity_closed=complex(parity),
        norms_matched=matched,
    )


def size_weighted_hat_sum(domain: GridDomain, r: int, m) -> tuple[complex, complex]:
    """(sum_t |S_t| Shat_{rt}(m), closed form), odd dimension only.

    The closed form is q^(-(d+3)/2) G^(d+1) eta(r (-1)^((d+1)/2)) * F with
    F = q - 1 when ||m|| = 0 and F = -1 otherwise.
    """
    if domain.d % 2 == 0:
        raise EvenDimension("size-weighted transform sum requires odd dimension")
    _, u = _check_r_m(domain, r, m)
    field = domain.field
    chars = characters_for(field)
    q, d = domain.q, domain.d
    table = sphere_hat_table(domain)
    sizes = build_sphere_table(domain).size_of
    scaled = field.mul_arr(r, np.arange(q, dtype=np.int64))
    direct = complex(np.sum(sizes * table.radial[scaled, u]))
    sign_elem = 1 if ((d + 1) // 2) % 2 == 0 else field.neg(1)
    closed = (
        float(q) ** (-(d + 3) // 2)
        * chars.gauss_power(d + 1)
        * chars.eta(field.mul(r, sign_elem))
        * ((q - 1) if u == 0 else -1)
    )
    return direct, complex(closed)


def zero_sphere_hat_max(domain: GridDomain) -> tuple[float, float]:
    """(max over m != 0 of |Shat_0(m)|, the dimension-parity bound)."""
    table = sphere_hat_table(domain)
    sizes = build_sphere_table(domain).size_of
    counts = sizes.copy()
    counts[0] -= 1  # the zero vector is not an admissible m
    realized = counts > 0
    value = float(np.max(np.abs(table.radial[0, realized])))
    q, d = domain.q, domain.d
    bound = float(q) ** (-d / 2) if d % 2 == 0 else float(q) ** (-(d + 1) / 2)
    return value, bound
