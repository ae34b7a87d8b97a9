"""Field Specification Module

This module defines finite fields F_q with q = p^k, p an odd prime, in a
fixed polynomial basis. The modulus is the lexicographically least monic
irreducible polynomial of degree k over F_p, so element encodings are
reproducible across runs.

Elements are encoded as integers in [0, q): the coefficient vector
(c_0, ..., c_{k-1}) encodes to sum(c_i * p**i).
"""

from typing import Iterator, Optional, Tuple
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
import logging

import galois
import numpy as np
from sympy import factorint, isprime

from src.errors import (
    DivisionByZeroError,
    EvenCharacteristicError,
    NotPrimeError,
    TooLargeError,
)

logger = logging.getLogger(__name__)

DEFAULT_MAX_ORDER = 2 ** 20
DEFAULT_TABLE_MAX_ORDER = 1024


@dataclass(frozen=True)
class FieldSpec:
    """A finite field of odd characteristic in a fixed polynomial basis"""
    p: int
    k: int
    modulus: Tuple[int, ...]
    table_max_order: int = field(default=DEFAULT_TABLE_MAX_ORDER, compare=False)

    @property
    def q(self) -> int:
        return self.p ** self.k

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def __str__(self) -> str:
        if self.k == 1:
            return f"F_{self.p}"
        return f"F_{self.q} (p={self.p}, k={self.k})"

    # -- encodings ---------------------------------------------------------

    def encode(self, coeffs) -> int:
        """Encode a little-endian coefficient vector

        Args:
            coeffs: Coefficients over Z_p, lowest degree first

        Returns:
            Canonical integer encoding in [0, q)
        """
        if len(coeffs) > self.k:
            raise ValueError(f"Expected at most {self.k} coefficients")
        value = 0
        for c in reversed(list(coeffs)):
            value = value * self.p + (int(c) % self.p)
        return value

    def decode(self, value: int) -> Tuple[int, ...]:
        """Decode an integer encoding into its coefficient vector"""
        self._check_range(value)
        coeffs = []
        for _ in range(self.k):
            value, c = divmod(value, self.p)
            coeffs.append(c)
        return tuple(coeffs)

    def embed(self, n: int) -> int:
        """Encoding of the integer n viewed in the prime subfield"""
        return n % self.p

    def elements(self) -> Iterator[int]:
        return iter(range(self.q))

    def element(self, value: int):
        """Wrap an encoding as a FieldElement"""
        from .element import FieldElement
        return FieldElement(self, self._check_range(value))

    # -- scalar arithmetic on encodings -----------------------------------

    def add(self, a: int, b: int) -> int:
        if self.has_tables:
            return int(self.add_table[a, b])
        if self.k == 1:
            return (a + b) % self.p
        gf = self.galois_field
        return int(gf(a) + gf(b))

    def neg(self, a: int) -> int:
        if self.has_tables:
            return int(self.neg_table[a])
        if self.k == 1:
            return (-a) % self.p
        return int(-self.galois_field(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.has_tables:
            return int(self.mul_table[a, b])
        if self.k == 1:
            return (a * b) % self.p
        gf = self.galois_field
        return int(gf(a) * gf(b))

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZeroError(f"Zero has no inverse in {self}")
        if self.has_tables:
            return int(self.inv_table[a])
        if self.k == 1:
            return pow(a, -1, self.p)
        return int(np.reciprocal(self.galois_field(a)))

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        """Square-and-multiply exponentiation of an encoding"""
        if n < 0:
            a, n = self.inv(a), -n
        result = self.one
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    # -- lookup tables used by the vectorised kernels -----------------------

    @property
    def has_tables(self) -> bool:
        return self.q <= self.table_max_order

    @cached_property
    def galois_field(self):
        """The galois field class realising this spec"""
        if self.k == 1:
            return galois.GF(self.p)
        prime_field = galois.GF(self.p)
        poly = galois.Poly(list(reversed(self.modulus)), field=prime_field)
        return galois.GF(self.q, irreducible_poly=poly)

    @cached_property
    def add_table(self) -> np.ndarray:
        self._require_tables()
        if self.k == 1:
            a = np.arange(self.q, dtype=np.int64)
            return ((a[:, None] + a[None, :]) % self.p).astype(np.int32)
        x = self.galois_field.elements
        return (x[:, None] + x[None, :]).view(np.ndarray).astype(np.int32)

    @cached_property
    def mul_table(self) -> np.ndarray:
        self._require_tables()
        if self.k == 1:
            a = np.arange(self.q, dtype=np.int64)
            return ((a[:, None] * a[None, :]) % self.p).astype(np.int32)
        x = self.galois_field.elements
        return (x[:, None] * x[None, :]).view(np.ndarray).astype(np.int32)

    @cached_property
    def neg_table(self) -> np.ndarray:
        # each row of the addition table holds 0 exactly once, at column -a
        return np.argmin(self.add_table, axis=1).astype(np.int32)

    @cached_property
    def inv_table(self) -> np.ndarray:
        """Multiplicative inverses; entry 0 holds 0 as a sentinel"""
        table = np.zeros(self.q, dtype=np.int32)
        rows, cols = np.nonzero(self.mul_table == 1)
        table[rows] = cols
        return table

    @cached_property
    def square_mask(self) -> np.ndarray:
        """Boolean mask of squares (0 included), by enumerating b*b"""
        mask = np.zeros(self.q, dtype=bool)
        mask[np.diagonal(self.mul_table)] = True
        return mask

    def _require_tables(self) -> None:
        if not self.has_tables:
            raise TooLargeError(
                f"Lookup tables for {self} exceed table_max_order="
                f"{self.table_max_order}"
            )

    def _check_range(self, value: int) -> int:
        value = int(value)
        if not 0 <= value < self.q:
            raise ValueError(f"Encoding {value} outside [0, {self.q})")
        return value


def minimal_irreducible(p: int, k: int) -> Tuple[int, ...]:
    """Lexicographically least monic irreducible polynomial of degree k

    Args:
        p: Odd prime
        k: Degree

    Returns:
        Little-endian coefficient tuple of length k + 1 (leading 1 last)
    """
    if k == 1:
        return (0, 1)
    poly = galois.irreducible_poly(p, k, method="min")
    if not poly.is_irreducible():
        raise ValueError(f"Modulus {poly} over F_{p} is reducible")
    coeffs = [int(c) for c in poly.coeffs]
    return tuple(reversed(coeffs))


@lru_cache(maxsize=None)
def field_new(
    p: int,
    k: int = 1,
    max_order: int = DEFAULT_MAX_ORDER,
    table_max_order: int = DEFAULT_TABLE_MAX_ORDER,
) -> FieldSpec:
    """Create the field F_{p^k}

    Args:
        p: Characteristic, an odd prime
        k: Extension degree, at least 1
        max_order: Upper bound on q = p^k
        table_max_order: Largest q for which lookup tables are built

    Returns:
        FieldSpec with the deterministic modulus
    """
    if not isprime(p):
        raise NotPrimeError(f"{p} is not prime")
    if p == 2:
        raise EvenCharacteristicError("Characteristic 2 is not supported")
    if k < 1:
        raise ValueError(f"Extension degree must be >= 1, got {k}")
    if p ** k > max_order:
        raise TooLargeError(f"q = {p}^{k} exceeds the bound {max_order}")

    modulus = minimal_irreducible(p, k)
    spec = FieldSpec(p=p, k=k, modulus=modulus, table_max_order=table_max_order)
    logger.debug(f"Created {spec} with modulus {modulus}")
    return spec


def prime_power(q: int) -> Optional[Tuple[int, int]]:
    """Split q into (p, k) with q = p^k, or None if q is not a prime power"""
    if q < 2:
        return None
    factors = factorint(q)
    if len(factors) != 1:
        return None
    ((p, k),) = factors.items()
    return int(p), int(k)


def field_for_order(q: int, **kwargs) -> FieldSpec:
    """Create the field with q elements

    Args:
        q: Odd prime power

    Returns:
        FieldSpec of order q
    """
    split = prime_power(q)
    if split is None:
        raise NotPrimeError(f"{q} is not a prime power")
    p, k = split
    return field_new(p, k, **kwargs)
