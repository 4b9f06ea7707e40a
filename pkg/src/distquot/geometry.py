"""Vectors in F_q^d, the quadratic norm, and sphere tables.

A point of F_q^d is an integer in [0, q^d): index sum(x_k * q**k) encodes the
coordinate vector (x_0, ..., x_{d-1}), each coordinate itself a field-element
index. The norm of x is the field element x_1^2 + ... + x_d^2 (not a metric),
and the sphere of radius t collects the points of norm t.

The per-point norm array is computed once per domain and cached; every
downstream sum over spheres then becomes a single pass over the grid, which
is the main performance lever at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .characters import characters_for
from .errors import CapExceeded
from .field import FieldCtx

GRID_CAP = 1 << 24
_CHUNK = 1 << 20


class GridDomain:
    """The grid F_q^d together with cached per-domain tables."""

    def __init__(self, field: FieldCtx, d: int, *, grid_cap: int = GRID_CAP):
        if d < 2:
            raise ValueError(f"dimension must be >= 2, got {d}")
        size = field.q**d
        if size > grid_cap:
            raise CapExceeded(f"q^d = {size} exceeds the grid cap {grid_cap}")
        self.field = field
        self.q = field.q
        self.d = d
        self.size = size
        self._cache: dict = {}

    def __repr__(self):
        return f"GridDomain(q={self.q}, d={self.d})"


def point_index(domain: GridDomain, vector) -> int:
    """Mixed-radix encoding: (x_0, ..., x_{d-1}) -> sum x_k q^k."""
    if len(vector) != domain.d:
        raise ValueError(f"expected {domain.d} coordinates, got {len(vector)}")
    idx = 0
    for k, x in enumerate(vector):
        if not 0 <= x < domain.q:
            raise ValueError(f"coordinate {x} out of range [0, {domain.q})")
        idx += int(x) * domain.q**k
    return idx


def index_point(domain: GridDomain, idx: int) -> tuple[int, ...]:
    if not 0 <= idx < domain.size:
        raise ValueError(f"point index {idx} out of range [0, {domain.size})")
    q = domain.q
    return tuple((idx // q**k) % q for k in range(domain.d))


def vector_norm(field: FieldCtx, vector) -> int:
    """The field element x_1^2 + ... + x_d^2."""
    acc = 0
    for x in vector:
        acc = field.add(acc, field.mul(x, x))
    return acc


def norm_array(domain: GridDomain) -> np.ndarray:
    """Per-point norm, indexed by point index; computed once and cached."""
    cached = domain._cache.get("norm")
    if cached is not None:
        return cached
    field, q, d, size = domain.field, domain.q, domain.d, domain.size
    out = np.empty(size, dtype=np.int32)
    qpow = [q**k for k in range(d)]
    for start in range(0, size, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, size), dtype=np.int64)
        acc = np.zeros(idx.shape, dtype=np.int64)
        for k in range(d):
            coord = (idx // qpow[k]) % q
            acc = field.add_arr(acc, field.sq_table[coord])
        out[start : start + len(idx)] = acc
    domain._cache["norm"] = out
    return out


def coords_matrix(domain: GridDomain) -> np.ndarray:
    """(d, size) matrix of coordinates; cached for small grids only."""
    cached = domain._cache.get("coords")
    if cached is not None:
        return cached
    q = domain.q
    idx = np.arange(domain.size, dtype=np.int64)
    coords = np.stack([(idx // q**k) % q for k in range(domain.d)])
    if domain.size <= 1 << 16:
        domain._cache["coords"] = coords
    return coords


@dataclass
class SphereTable:
    """Sphere sizes |S_t| and the per-point norm array they came from."""

    domain: GridDomain
    norm_of: np.ndarray  # int32, length q^d
    size_of: np.ndarray  # int64, length q


def build_sphere_table(domain: GridDomain) -> SphereTable:
    cached = domain._cache.get("spheres")
    if cached is not None:
        return cached
    norms = norm_array(domain)
    sizes = np.bincount(norms, minlength=domain.q).astype(np.int64)
    table = SphereTable(domain=domain, norm_of=norms, size_of=sizes)
    domain._cache["spheres"] = table
    return table


def sphere_size_closed(domain: GridDomain, t: int) -> int:
    """Closed-form |S_t|; exact integer, must match the brute-force count.

    Even d:  q^(d-1) + w(t) * q^((d-2)/2) * eta((-1)^(d/2))
    Odd d:   q^(d-1) + q^((d-1)/2) * eta((-1)^((d-1)/2) * t)
    with w the sphere-size weight (q-1 at t = 0, else -1) and eta(0) = 0.
    """
    field = domain.field
    chars = characters_for(field)
    q, d = domain.q, domain.d
    minus_one = field.neg(1)
    if d % 2 == 0:
        sign_elem = 1 if (d // 2) % 2 == 0 else minus_one
        return q ** (d - 1) + chars.size_weight(t) * q ** ((d - 2) // 2) * chars.eta(
            sign_elem
        )
    sign_elem = 1 if ((d - 1) // 2) % 2 == 0 else minus_one
    return q ** (d - 1) + q ** ((d - 1) // 2) * chars.eta(field.mul(sign_elem, t))
