"""Exact arithmetic in F_q = F_{p^ell} for odd primes p.

Elements are plain integers in [0, q): the index sum(c_i * p**i) encodes the
coefficient vector (c_0, ..., c_{ell-1}) in the polynomial basis determined
by the modulus. Index 0 is the zero element, index 1 is one, and for ell >= 2
index p is the adjoined root x. The modulus is the lexicographically smallest
monic irreducible polynomial of degree ell, comparing coefficient tuples
(c_{ell-1}, ..., c_0) ascending, so a given (p, ell) always yields the same
tables and the same element numbering. Reports echo the modulus because
element indices are only meaningful relative to it.

Multiplication runs off discrete-log tables (exp/log of a fixed generator)
whenever q fits under the table threshold; the table-free polynomial route is
kept as ``mul_poly`` and the two must agree (tested exhaustively).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CapExceeded, DivisionByZero, NotOddPrime

ELEMENT_CAP = 1 << 16
_TABLE_LIMIT = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Polynomial arithmetic over F_p. Coefficient lists, constant term first,
# trailing zeros trimmed; [] is the zero polynomial.
# ---------------------------------------------------------------------------

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _poly_rem(a: list[int], m: list[int], p: int) -> list[int]:
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        shift = len(a) - 1 - dm
        factor = (a[-1] * inv_lead) % p
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - factor * mi) % p
        _trim(a)
    return a


def _poly_mulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    return _poly_rem(_poly_mul(a, b, p), m, p)


def _poly_powmod(base: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    acc = _poly_rem(list(base), m, p)
    while e > 0:
        if e & 1:
            result = _poly_mulmod(result, acc, m, p)
        acc = _poly_mulmod(acc, acc, m, p)
        e >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _poly_rem(a, b, p)
    if a:
        inv_lead = pow(a[-1], p - 2, p)
        a = [(c * inv_lead) % p for c in a]
    return a


def _minus_x(g: list[int], p: int) -> list[int]:
    diff = list(g) + [0] * max(0, 2 - len(g))
    diff[1] = (diff[1] - 1) % p
    return _trim(diff)


def is_irreducible(coeffs: tuple[int, ...] | list[int], p: int) -> bool:
    """Irreducibility of a monic polynomial over F_p.

    Degree <= 3 reduces to a root scan; in general f of degree n is
    irreducible iff x^(p^n) == x (mod f) and gcd(x^(p^(n/r)) - x, f) = 1
    for every prime r dividing n.
    """
    c = list(coeffs)
    n = len(c) - 1
    if n < 1 or c[-1] != 1:
        return False
    if n == 1:
        return True
    if c[0] == 0:  # divisible by x
        return False
    if n <= 3:
        return all(
            sum(ci * pow(a, i, p) for i, ci in enumerate(c)) % p != 0
            for a in range(p)
        )
    x = [0, 1]
    if _minus_x(_poly_powmod(x, p**n, c, p), p):
        return False
    for r in _prime_factors(n):
        g = _minus_x(_poly_powmod(x, p ** (n // r), c, p), p)
        if len(_poly_gcd(c, g, p)) > 1:
            return False
    return True


def smallest_irreducible(p: int, ell: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree ell over F_p.

    Ordering compares the tuple (c_{ell-1}, ..., c_0) ascending. For ell = 1
    the modulus is x itself (arithmetic is then plain mod p).
    """
    if ell == 1:
        return (0, 1)
    for k in range(p**ell):
        digits = []
        rem = k
        for i in range(ell - 1, -1, -1):
            digits.append(rem // p**i)
            rem %= p**i
        # digits = (c_{ell-1}, ..., c_0)
        coeffs = tuple(reversed(digits)) + (1,)
        if is_irreducible(coeffs, p):
            return coeffs
    raise AssertionError("no irreducible polynomial found")  # unreachable


@dataclass(frozen=True)
class FieldSpec:
    """Parameters pinning down F_q and its element numbering."""

    p: int
    ell: int
    q: int
    modulus: tuple[int, ...]  # constant term first, monic

    def modulus_string(self) -> str:
        terms = []
        for i in range(len(self.modulus) - 1, -1, -1):
            c = self.modulus[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("x" if c == 1 else f"{c}*x")
            else:
                terms.append(f"x^{i}" if c == 1 else f"{c}*x^{i}")
        return " + ".join(terms) if terms else "0"


class FieldCtx:
    """Immutable arithmetic context for F_q; safe to share across workers.

    All operations are pure functions of (ctx, operands). Scalar operations
    take and return plain ints; the ``*_arr`` variants operate elementwise on
    numpy integer arrays (and broadcast scalars).
    """

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.p = spec.p
        self.ell = spec.ell
        self.q = spec.q
        self.modulus = spec.modulus
        self._mod_list = list(spec.modulus)
        self._p_pows = [spec.p**i for i in range(spec.ell + 1)]
        self.has_tables = spec.q <= _TABLE_LIMIT
        self.generator = self._find_generator()
        if self.has_tables:
            self._build_tables()
        self._characters = None  # filled lazily by characters.characters_for

    # -- element <-> coefficient encoding ---------------------------------

    def coeffs(self, a: int) -> list[int]:
        p = self.p
        return [(a // self._p_pows[i]) % p for i in range(self.ell)]

    def from_coeffs(self, c) -> int:
        return sum((ci % self.p) * self._p_pows[i] for i, ci in enumerate(c))

    # -- construction ------------------------------------------------------

    def _find_generator(self) -> int:
        q = self.q
        factors = _prime_factors(q - 1)
        for g in range(2, q):
            gc = _trim(self.coeffs(g))
            if all(
                _poly_powmod(gc, (q - 1) // r, self._mod_list, self.p) != [1]
                for r in factors
            ):
                return g
        raise AssertionError("multiplicative group has no generator")  # unreachable

    def _build_tables(self) -> None:
        p, q, ell = self.p, self.q, self.ell
        exp = np.empty(q - 1, dtype=np.int64)
        if ell == 1:
            cur = 1
            for k in range(q - 1):
                exp[k] = cur
                cur = (cur * self.generator) % p
        else:
            gc = _trim(self.coeffs(self.generator))
            cur = [1]
            for k in range(q - 1):
                exp[k] = self.from_coeffs(cur + [0] * (ell - len(cur)))
                cur = _poly_mulmod(cur, gc, self._mod_list, p)
        log = np.zeros(q, dtype=np.int64)
        log[exp] = np.arange(q - 1)
        self.exp = exp
        self.log = log

        idx = np.arange(q, dtype=np.int64)
        if ell == 1:
            neg = (p - idx) % p
        else:
            neg = np.zeros(q, dtype=np.int64)
            for i in range(ell):
                pk = self._p_pows[i]
                neg += ((p - (idx // pk) % p) % p) * pk
        self.neg_table = neg

        inv = np.zeros(q, dtype=np.int64)
        inv[exp] = exp[(-(np.arange(q - 1))) % (q - 1)]
        self.inv_table = inv  # inv_table[0] stays 0; scalar inv() raises

        self.sq_table = self.mul_arr(idx, idx)

        # trace via the Frobenius permutation a -> a^p
        frob = np.zeros(q, dtype=np.int64)
        frob[exp] = exp[(np.arange(q - 1) * p) % (q - 1)]
        acc = idx.copy()
        cur = idx.copy()
        for _ in range(1, ell):
            cur = frob[cur]
            acc = self.add_arr(acc, cur)
        if not (acc < p).all():
            raise AssertionError("trace landed outside the prime subfield")
        self.trace_table = acc

    # -- scalar operations --------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.ell == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        for pk in self._p_pows[: self.ell]:
            out += (((a // pk) % p + (b // pk) % p) % p) * pk
        return out

    def neg(self, a: int) -> int:
        return int(self.neg_table[a]) if self.has_tables else self.from_coeffs(
            [(-c) % self.p for c in self.coeffs(a)]
        )

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.has_tables:
            return int(self.exp[(self.log[a] + self.log[b]) % (self.q - 1)])
        return self.mul_poly(a, b)

    def mul_poly(self, a: int, b: int) -> int:
        """Reference multiply-and-reduce in the polynomial basis."""
        prod = _poly_mulmod(_trim(self.coeffs(a)), _trim(self.coeffs(b)),
                            self._mod_list, self.p)
        return self.from_coeffs(prod + [0] * (self.ell - len(prod)))

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.has_tables:
            return int(self.inv_table[a])
        c = _poly_powmod(_trim(self.coeffs(a)), self.q - 2, self._mod_list, self.p)
        return self.from_coeffs(c + [0] * (self.ell - len(c)))

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("inverse of zero")
            return 1 if e == 0 else 0
        if self.has_tables:
            return int(self.exp[(int(self.log[a]) * e) % (self.q - 1)])
        c = _poly_powmod(_trim(self.coeffs(a)), e % (self.q - 1),
                         self._mod_list, self.p)
        return self.from_coeffs(c + [0] * (self.ell - len(c)))

    def trace(self, a: int) -> int:
        """Absolute trace a + a^p + ... + a^(p^(ell-1)), a value in [0, p)."""
        if self.has_tables:
            return int(self.trace_table[a])
        acc, cur = a, a
        for _ in range(1, self.ell):
            cur = self.pow(cur, self.p)
            acc = self.add(acc, cur)
        return acc

    def element_of_int(self, n: int) -> int:
        """The field element n*1 (image of the integer n in F_q)."""
        return n % self.p

    def enumerate_elements(self) -> range:
        return range(self.q)

    def prime_subfield(self) -> tuple[int, ...]:
        """Indices of the prime subfield; k*1 has index k for k in [0, p)."""
        return tuple(range(self.p))

    # -- vectorized operations ----------------------------------------------

    def add_arr(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.ell == 1:
            return (a + b) % self.p
        p = self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for pk in self._p_pows[: self.ell]:
            out += (((a // pk) % p + (b // pk) % p) % p) * pk
        return out

    def neg_arr(self, a):
        return self.neg_table[np.asarray(a, dtype=np.int64)]

    def sub_arr(self, a, b):
        return self.add_arr(a, self.neg_arr(b))

    def mul_arr(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)


def build_field(p: int, ell: int = 1, *, element_cap: int = ELEMENT_CAP) -> FieldCtx:
    """Construct F_{p^ell} with deterministic modulus, generator, and tables."""
    if p == 2 or not is_prime(p):
        raise NotOddPrime(f"p = {p} is not an odd prime")
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    q = p**ell
    if q > element_cap:
        raise CapExceeded(f"q = {q} exceeds the element cap {element_cap}")
    spec = FieldSpec(p=p, ell=ell, q=q, modulus=smallest_irreducible(p, ell))
    return FieldCtx(spec)
