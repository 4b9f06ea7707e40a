"""Additive and quadratic characters on F_q, and the Gauss sum.

The additive character is fixed to chi(x) = exp(2*pi*i*trace(x)/p). Every
counting quantity downstream (sphere sizes, pair counts, distance sets) is
invariant under replacing chi by any other nontrivial additive character, so
fixing the canonical one loses nothing.

The quadratic character eta is computed from discrete-log parity, which keeps
it exact: eta(g^k) = (-1)^k, eta(0) = 0. The Gauss sum G = sum over nonzero s
of eta(s)*chi(s) has the explicit value
    (-1)^(ell-1) * sqrt(q)           when p = 1 (mod 4),
    (-1)^(ell-1) * i^ell * sqrt(q)   when p = 3 (mod 4),
and ``gauss_sum`` raises ClosedFormMismatch when the directly accumulated sum
strays from it, which would indicate corrupted character tables.
"""

from __future__ import annotations

import numpy as np

from .errors import ClosedFormMismatch
from .field import FieldCtx

# Complex comparison tolerance used by every closed-form check in the package:
# relative in the larger operand, absolute near zero. Sums at desk scale have
# at most 2^24 pairwise-accumulated terms, far below this slack.
TOLERANCE = 1e-9


def tolerance_for(a, b) -> float:
    return TOLERANCE * (1.0 + max(abs(a), abs(b)))


def within_tolerance(a, b) -> bool:
    return abs(a - b) <= tolerance_for(a, b)


class CharacterCtx:
    """Character tables bound to a field context; immutable once built."""

    def __init__(self, field: FieldCtx):
        if not field.has_tables:
            raise ValueError("character tables require the discrete-log tables")
        self.field = field
        p, q = field.p, field.q
        self.chi_table = np.exp(2j * np.pi * field.trace_table / p)
        eta = np.zeros(q, dtype=np.int64)
        eta[field.exp[0::2]] = 1
        eta[field.exp[1::2]] = -1
        self.eta_table = eta
        self.gauss_direct = complex(np.sum(eta * self.chi_table))

    def chi(self, x: int) -> complex:
        return complex(self.chi_table[x])

    def eta(self, x: int) -> int:
        return int(self.eta_table[x])

    def size_weight(self, t: int) -> int:
        """Sphere-size correction weight: q - 1 at t = 0, else -1."""
        return self.field.q - 1 if t == 0 else -1

    def size_weight_table(self) -> np.ndarray:
        w = np.full(self.field.q, -1, dtype=np.int64)
        w[0] = self.field.q - 1
        return w

    def gauss_power(self, k: int) -> complex:
        """G^k with the unit factor tracked exactly as a quarter turn."""
        p, ell, q = self.field.p, self.field.ell, self.field.q
        if p % 4 == 1:
            turn = 0 if (ell - 1) % 2 == 0 else 2
        else:
            turn = (2 * (ell - 1) + ell) % 4
        unit = (1, 1j, -1, -1j)[(turn * k) % 4]
        mag = float(q) ** (k // 2) * (np.sqrt(q) if k % 2 else 1.0)
        return unit * mag

    def gauss_closed(self) -> complex:
        return self.gauss_power(1)

    def gauss_sum(self) -> complex:
        """Directly accumulated Gauss sum, validated against the closed form."""
        direct, closed = self.gauss_direct, self.gauss_closed()
        if not within_tolerance(direct, closed):
            raise ClosedFormMismatch(
                f"Gauss sum {direct} deviates from closed form {closed}"
            )
        return direct

    def quadratic_residues(self) -> frozenset[int]:
        """The (q-1)/2 nonzero squares."""
        return frozenset(int(i) for i in np.nonzero(self.eta_table == 1)[0])


def characters_for(field: FieldCtx) -> CharacterCtx:
    """Character context for a field, built once and cached on the field."""
    if field._characters is None:
        field._characters = CharacterCtx(field)
    return field._characters
