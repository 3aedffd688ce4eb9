"""Exact arithmetic in finite fields GF(q), q = p^m.

Field elements are canonical integers in [0, q).  For extension fields
(m > 1) the integer packs the polynomial-basis coefficient vector in
base p, constant term in the least significant digit, so 0 and 1 are
the additive and multiplicative identities of every field.  Prime
fields use direct modular arithmetic; extension fields multiply through
log/antilog tables over a generator of the multiplicative group.

Construction verifies its own tables: the stored generator has exact
multiplicative order q - 1 and every nonzero element has an inverse.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

MAX_FIELD_ORDER = 1 << 16


def is_prime(n: int) -> bool:
    """Trial-division primality test; fine for the supported field sizes."""
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


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# Polynomials over GF(p) appear only while picking a field modulus.
# Coefficient lists are ascending: coeffs[i] multiplies x^i.

def _poly_rem(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a mod b over GF(p); b must be monic."""
    a = a[:]
    db = len(b) - 1
    while len(a) - 1 >= db and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        c = a[-1]
        shift = len(a) - 1 - db
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
    while a and a[-1] == 0:
        a.pop()
    return a


def _is_irreducible(coeffs: list[int], p: int) -> bool:
    """Monic polynomial irreducible over GF(p)? Trial division up to half degree."""
    m = len(coeffs) - 1
    if m < 1 or coeffs[-1] != 1:
        return False
    if coeffs[0] == 0:
        return m == 1
    for t in range(1, m // 2 + 1):
        for packed in range(p ** t):
            g = [(packed // p**i) % p for i in range(t)] + [1]
            if not _poly_rem(coeffs, g, p):
                return False
    return True


@lru_cache(maxsize=None)
def default_irreducible(p: int, m: int) -> tuple[int, ...]:
    """The pinned default modulus for GF(p^m): the monic irreducible of
    degree m whose low-coefficient encoding sum(c_i * p^i) is smallest."""
    for packed in range(p ** m):
        coeffs = [(packed // p**i) % p for i in range(m)] + [1]
        if _is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError(f"no irreducible polynomial of degree {m} over GF({p})")


class GF:
    """The finite field GF(p^m) operating on canonical integer labels."""

    def __init__(self, p: int, m: int = 1, poly: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if m < 1:
            raise ValueError(f"extension degree must be >= 1, got {m}")
        q = p ** m
        if q > MAX_FIELD_ORDER:
            raise ValueError(f"field order {q} exceeds the configured maximum {MAX_FIELD_ORDER}")
        self.p = p
        self.m = m
        self.q = q
        self._ppow = [p ** i for i in range(m)]
        if m == 1:
            if poly is not None:
                raise ValueError("a modulus polynomial only applies to extension fields")
            self.poly: tuple[int, ...] | None = None
        else:
            coeffs = tuple(poly) if poly is not None else default_irreducible(p, m)
            if len(coeffs) != m + 1 or coeffs[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {m}, got {coeffs}")
            if any(not 0 <= c < p for c in coeffs):
                raise ValueError(f"modulus coefficients must lie in [0, {p})")
            if not _is_irreducible(list(coeffs), p):
                raise ValueError(f"modulus {coeffs} is reducible over GF({p})")
            self.poly = coeffs
        self._build_tables()
        self._add_table: np.ndarray | None = None

    # -- raw ops on packed coefficient vectors, used to build the tables --

    def _raw_add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        acc = 0
        for pp in self._ppow:
            acc += (((a // pp) + (b // pp)) % self.p) * pp
        return acc

    def _raw_mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        p, m = self.p, self.m
        da = [(a // pp) % p for pp in self._ppow]
        db = [(b // pp) % p for pp in self._ppow]
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        assert self.poly is not None
        for deg in range(2 * m - 2, m - 1, -1):
            c = prod[deg]
            if c:
                for t in range(m + 1):
                    prod[deg - m + t] = (prod[deg - m + t] - c * self.poly[t]) % p
        return sum(prod[i] * self._ppow[i] for i in range(m))

    def _raw_pow(self, a: int, e: int) -> int:
        out, base = 1, a
        while e:
            if e & 1:
                out = self._raw_mul(out, base)
            base = self._raw_mul(base, base)
            e >>= 1
        return out

    def _build_tables(self) -> None:
        q = self.q
        if q == 2:
            self.generator = 1
        else:
            fac = _factorize(q - 1)
            gen = None
            for g in range(2, q):
                if all(self._raw_pow(g, (q - 1) // ell) != 1 for ell in fac):
                    gen = g
                    break
            if gen is None:
                raise AssertionError(f"no generator found for GF({q})")
            self.generator = gen
        alog = [1] * (q - 1)
        for i in range(1, q - 1):
            alog[i] = self._raw_mul(alog[i - 1], self.generator)
        if sorted(alog) != list(range(1, q)):
            raise AssertionError(f"generator {self.generator} does not have order {q - 1}")
        log = [0] * q
        for i, a in enumerate(alog):
            log[a] = i
        self._alog = alog
        self._log = log
        for a in range(1, q):
            if self.mul(a, self.inv(a)) != 1:
                raise AssertionError(f"element {a} of GF({q}) lacks an inverse")

    # -- public element operations --

    def check(self, a: int) -> int:
        if not isinstance(a, (int, np.integer)) or not 0 <= a < self.q:
            raise ValueError(f"{a!r} is not an element label of GF({self.q})")
        return int(a)

    def add(self, a: int, b: int) -> int:
        return self._raw_add(self.check(a), self.check(b))

    def neg(self, a: int) -> int:
        a = self.check(a)
        if self.m == 1:
            return (-a) % self.p
        acc = 0
        for pp in self._ppow:
            acc += ((-(a // pp)) % self.p) * pp
        return acc

    def sub(self, a: int, b: int) -> int:
        return self._raw_add(self.check(a), self.neg(b))

    def mul(self, a: int, b: int) -> int:
        a, b = self.check(a), self.check(b)
        if a == 0 or b == 0:
            return 0
        if self.m == 1:
            return (a * b) % self.p
        return self._alog[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        a = self.check(a)
        if a == 0:
            raise ZeroDivisionError(f"zero has no inverse in GF({self.q})")
        return self._alog[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def power(self, a: int, e: int) -> int:
        a = self.check(a)
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 0
        e %= self.q - 1
        return self._alog[(self._log[a] * e) % (self.q - 1)]

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def add_table(self) -> np.ndarray:
        """Cached (q, q) numpy addition table; backs the vectorized censuses."""
        if self._add_table is None:
            dtype = np.uint8 if self.q <= 256 else np.uint16
            idx = np.arange(self.q, dtype=np.int64)
            tab = np.zeros((self.q, self.q), dtype=np.int64)
            for pp in self._ppow:
                da, db = (idx // pp) % self.p, (idx // pp) % self.p
                tab += ((da[:, None] + db[None, :]) % self.p) * pp
            self._add_table = tab.astype(dtype)
        return self._add_table

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.q})"
        return f"GF({self.q}={self.p}^{self.m}, poly={self.poly})"


@lru_cache(maxsize=None)
def field_of_order(q: int, poly: tuple[int, ...] | None = None) -> GF:
    """GF(q) for a prime power q, shared per (q, modulus)."""
    fac = _factorize(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    (p, m), = fac.items()
    return GF(p, m, poly)
