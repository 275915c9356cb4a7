"""Exact Cayley-Dickson algebras A_0 (reals) through A_5 (trigintaduonions).

An element of A_n is stored as a flat tuple of 2**n scalars.  The pair
structure (a, b) of A_n = A_{n-1} x A_{n-1} is the split into low and high
halves, so e_i = (e_i, 0) for i < 2**(n-1) and e_i = (0, e_{i - 2**(n-1)})
otherwise.  With the doubling rules

    conj((a, b)) = (conj(a), -b)
    (a, b)(c, d) = (ac - conj(d) b, da + b conj(c))

this encoding makes both of the classical sedenion zero-divisor pairs
(e3 + e10)(e6 - e15) and (e2 - e14)(e3 + e15) vanish.

Scalars are either exact (``int``/``Fraction``) or floating (``float``/
``complex``); an element never mixes the two kinds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Number
from typing import Sequence

MAX_LEVEL = 5

LEVEL_NAMES = {
    0: "reals",
    1: "complexes",
    2: "quaternions",
    3: "octonions",
    4: "sedenions",
    5: "trigintaduonions",
}

EXACT = "exact"
FLOAT = "float"


class CdError(ValueError):
    """Raised for malformed elements or incompatible operands."""


def scalar_kind(value) -> str:
    if isinstance(value, bool):
        raise CdError(f"booleans are not scalars: {value!r}")
    if isinstance(value, (int, Fraction)):
        return EXACT
    if isinstance(value, (float, complex)):
        return FLOAT
    raise CdError(f"unsupported scalar type {type(value).__name__}")


def _check_level(level: int) -> None:
    if not isinstance(level, int) or not 0 <= level <= MAX_LEVEL:
        raise CdError(f"level must be an integer in 0..{MAX_LEVEL}, got {level!r}")


@dataclass(frozen=True)
class CdElement:
    level: int
    coeffs: tuple

    def __post_init__(self):
        _check_level(self.level)
        coeffs = tuple(self.coeffs)
        if len(coeffs) != 1 << self.level:
            raise CdError(
                f"level {self.level} needs {1 << self.level} coefficients, got {len(coeffs)}"
            )
        kinds = {scalar_kind(c) for c in coeffs}
        if len(kinds) > 1:
            raise CdError("element mixes exact and floating scalars")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def kind(self) -> str:
        return scalar_kind(self.coeffs[0])

    @property
    def dim(self) -> int:
        return 1 << self.level

    @property
    def real(self):
        return self.coeffs[0]

    def halves(self) -> tuple[CdElement, CdElement]:
        """Return the pair (a, b) with self = (a, b) in A_{n-1} x A_{n-1}."""
        if self.level == 0:
            raise CdError("a real number has no pair structure")
        h = self.dim // 2
        return (
            CdElement(self.level - 1, self.coeffs[:h]),
            CdElement(self.level - 1, self.coeffs[h:]),
        )

    @classmethod
    def from_pair(cls, a: CdElement, b: CdElement) -> CdElement:
        _require_compatible(a, b)
        return cls(a.level + 1, a.coeffs + b.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def conjugate(self) -> CdElement:
        return cd_conjugate(self)

    def norm_sq(self):
        return cd_norm_sq(self)

    def scale(self, c) -> CdElement:
        return CdElement(self.level, tuple(c * x for x in self.coeffs))

    def __add__(self, other):
        if not isinstance(other, CdElement):
            return NotImplemented
        return cd_add(self, other)

    def __sub__(self, other):
        if not isinstance(other, CdElement):
            return NotImplemented
        return cd_add(self, -other)

    def __neg__(self):
        return CdElement(self.level, tuple(-x for x in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, CdElement):
            return cd_multiply(self, other)
        if isinstance(other, Number) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        # Real and complex scalars are central, so left and right scaling agree.
        if isinstance(other, Number) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, int):
            other = Fraction(other)
        return self.scale(1 / other)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c != 0:
                terms.append(f"{c}*e{i}")
        return " + ".join(terms) if terms else "0"


def _require_compatible(x: CdElement, y: CdElement) -> None:
    if x.level != y.level:
        raise CdError(f"incompatible levels: {x.level} and {y.level}")
    if x.kind != y.kind:
        raise CdError(f"incompatible scalar kinds: {x.kind} and {y.kind}")


def element(coeffs: Sequence, level: int | None = None) -> CdElement:
    """Build an element from a coefficient list, inferring the level."""
    coeffs = tuple(coeffs)
    if level is None:
        level = max(len(coeffs) - 1, 0).bit_length()
    return CdElement(level, coeffs)


def zero(level: int, kind: str = EXACT) -> CdElement:
    _check_level(level)
    z = 0 if kind == EXACT else 0.0
    return CdElement(level, (z,) * (1 << level))


def cd_basis(level: int, i: int, kind: str = EXACT) -> CdElement:
    _check_level(level)
    n = 1 << level
    if not 0 <= i < n:
        raise CdError(f"basis index {i} out of range 0..{n - 1} at level {level}")
    z, one = (0, 1) if kind == EXACT else (0.0, 1.0)
    return CdElement(level, tuple(one if k == i else z for k in range(n)))


def cd_add(x: CdElement, y: CdElement) -> CdElement:
    _require_compatible(x, y)
    return CdElement(x.level, tuple(a + b for a, b in zip(x.coeffs, y.coeffs)))


def cd_conjugate(x: CdElement) -> CdElement:
    if x.level == 0:
        return x
    a, b = x.halves()
    return CdElement.from_pair(cd_conjugate(a), -b)


# Flat-tuple kernels used by the recursive product.  Conjugation on the flat
# representation negates every non-real coefficient.

def _conj(a: tuple) -> tuple:
    return (a[0],) + tuple(-x for x in a[1:])


def _add(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def _mul(a: tuple, b: tuple) -> tuple:
    n = len(a)
    if n == 1:
        return (a[0] * b[0],)
    h = n // 2
    p, q = a[:h], a[h:]
    c, d = b[:h], b[h:]
    # (p, q)(c, d) = (pc - conj(d) q, d p + q conj(c))
    return _sub(_mul(p, c), _mul(_conj(d), q)) + _add(_mul(d, p), _mul(q, _conj(c)))


@dataclass
class OpCount:
    """Scalar operation tally; subtraction counts as an addition, negation is free."""

    multiplications: int = 0
    additions: int = 0

    def __str__(self):
        return f"multiplications: {self.multiplications}, additions: {self.additions}"


def cd_multiply(x: CdElement, y: CdElement, counter: OpCount | None = None) -> CdElement:
    """Product in A_n.

    Without a counter the doubling rule is applied recursively.  With a
    counter the product is expanded over the basis multiplication table,
    sum_{i,j} x_i y_j (e_i e_j), and every scalar multiply and add performed
    is tallied into ``counter``.
    """
    _require_compatible(x, y)
    if counter is None:
        return CdElement(x.level, _mul(x.coeffs, y.coeffs))
    return _table_product(x, y, counter)


def _table_product(x: CdElement, y: CdElement, counter: OpCount) -> CdElement:
    table = cd_mul_table(x.level)
    acc: list = [None] * x.dim
    for i, a in enumerate(x.coeffs):
        row = table[i]
        for j, b in enumerate(y.coeffs):
            sign, k = row[j]
            term = a * b
            counter.multiplications += 1
            if acc[k] is None:
                acc[k] = term if sign > 0 else -term
            else:
                acc[k] = acc[k] + term if sign > 0 else acc[k] - term
                counter.additions += 1
    return CdElement(x.level, tuple(acc))


def cd_norm_sq(x: CdElement):
    """Squared norm, the sum of squared coefficients (= real part of x conj(x))."""
    return sum((c * c for c in x.coeffs), 0 if x.kind == EXACT else 0.0)


@lru_cache(maxsize=None)
def cd_mul_table(level: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Signed basis products: ``table[i][j] == (sign, k)`` means e_i e_j = sign * e_k."""
    _check_level(level)
    n = 1 << level
    basis = [cd_basis(level, i).coeffs for i in range(n)]
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            prod = _mul(basis[i], basis[j])
            (k,) = [idx for idx, c in enumerate(prod) if c != 0]
            if prod[k] not in (1, -1):
                raise AssertionError(f"e{i}e{j} is not a signed basis element")
            row.append((int(prod[k]), k))
        rows.append(tuple(row))
    return tuple(rows)


def format_mul_table(level: int) -> list[list[str]]:
    return [
        [f"{'+' if sign > 0 else '-'}e{k}" for sign, k in row]
        for row in cd_mul_table(level)
    ]


def cd_count_naive_ops(level: int) -> OpCount:
    """Measure one naive table-expansion product of two dense elements."""
    _check_level(level)
    n = 1 << level
    x = CdElement(level, tuple(range(1, n + 1)))
    y = CdElement(level, tuple(range(n + 1, 2 * n + 1)))
    counter = OpCount()
    _table_product(x, y, counter)
    return counter
