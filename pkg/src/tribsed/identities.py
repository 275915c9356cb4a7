"""Catalog of sedenion identities I1..I15 and a uniform checker.

Each entry evaluates a left and a right side as lists of elements (or
scalars) and reports the largest componentwise residual.  Exact entries
pass only on a residual of exactly zero; float entries pass when every
component satisfies |lhs - rhs| <= tol * max(1, |lhs|, |rhs|, scale), where
``scale`` is the magnitude of the summands an entry combines (only the
quadratic-approximation entries I7/I8, whose right sides cancel terms of
size ~V_{n+17} down to the size of beta^n, supply one).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable

from .cdalg import CdElement, cd_conjugate, zero
from .sedseq import (
    SEDENION_LEVEL,
    as_complex,
    root_sedenions,
    sed_value,
)
from .triseq import (
    Matrix3,
    SequenceError,
    TriParams,
    companion_matrix,
    cubic_roots,
    named_params,
    seq_term,
    u_term,
)

DEFAULT_TOLERANCE = 1e-8


class DomainError(SequenceError):
    """Raised when an identity is evaluated outside its stated index domain."""


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    indices: tuple
    residual: object
    passed: bool
    exact: bool
    tolerance: float | None = None
    scaled_residual: float | None = None
    in_domain: bool = True


@dataclass(frozen=True)
class Identity:
    identity_id: str
    title: str
    exact: bool
    domain: str
    in_domain: Callable[[int, int | None], bool]
    sides: Callable[[TriParams, int, int | None], tuple[list, list]]
    uses_params: bool = True
    uses_m: bool = False
    needs_roots: bool = False
    needs_t: bool = False
    notes: str = field(default="")


_T = named_params("tribonacci")
_K = named_params("tribonacci-lucas")


def _S(params: TriParams, n: int) -> CdElement:
    return sed_value(params, n)


def _C(params: TriParams, n: int) -> CdElement:
    return as_complex(sed_value(params, n))


def _i1(params, n, m):
    lhs = _S(_K, n)
    rhs = _S(_T, n + 1).scale(3) - _S(_T, n).scale(2) - _S(_T, n - 1)
    return [lhs], [rhs]


def _i2(params, n, m):
    v = _S(params, n)
    e0 = [0] * 16
    e0[0] = 2 * seq_term(params, n)
    return [v + cd_conjugate(v)], [CdElement(SEDENION_LEVEL, tuple(e0))]


def _root_terms(params):
    roots = cubic_roots(params)
    return roots, list(zip(roots.weights(), roots.roots, root_sedenions(roots), roots.coeffs))


def _zero_c():
    return as_complex(zero(SEDENION_LEVEL))


def _i3(params, n, m):
    _, terms = _root_terms(params)
    rhs = _zero_c()
    for w, x, xh, _k in terms:
        rhs = rhs + xh.scale(w * (x + 1) * x ** n)
    return [_C(params, n + 1) + _C(params, n)], [rhs]


def _i4(params, n, m):
    _, terms = _root_terms(params)
    lhs = zero(SEDENION_LEVEL)
    for i in range(n + 1):
        lhs = lhs + _S(params, i).scale(comb(n, i))
    rhs = _zero_c()
    for w, x, xh, _k in terms:
        rhs = rhs + xh.scale(w * (1 + x) ** n)
    return [as_complex(lhs)], [rhs]


def _i5(params, n, m):
    k = lambda i: seq_term(_K, i)
    lhs = _S(_K, m + n)
    rhs = (_S(_T, m + 2).scale(k(n - 1)) + (_S(_T, m + 1) + _S(_T, m)).scale(k(n - 2))
           + _S(_T, m + 1).scale(k(n - 3)))
    return [lhs], [rhs]


def _i6(params, n, m):
    k = lambda i: seq_term(_K, i)
    lhs = _S(_K, m + n)
    rhs = (_S(_T, n - 1).scale(k(m + 2)) + _S(_T, n - 2).scale(k(m + 1) + k(m))
           + _S(_T, n - 3).scale(k(m + 1)))
    return [lhs], [rhs]


def _quad(x, s, t, v2, v1, v0):
    value = x * x * v2 + x * (s * v1 + t * v0) + t * v1
    scale = abs(x * x * v2) + abs(x) * (abs(s * v1) + abs(t * v0)) + abs(t * v1)
    return value, scale


def _i7(params, n, m):
    _, terms = _root_terms(params)
    _, s, t = (float(c) for c in params.coefficients)
    v = lambda i: float(seq_term(params, i))
    lhs, rhs, scales = [], [], []
    for _w, x, _xh, k in terms:
        lhs.append(k * x ** (n + 2))
        value, scale = _quad(x, s, t, v(n + 2), v(n + 1), v(n))
        rhs.append(value)
        scales.append(scale)
    return lhs, rhs, scales


def _i8(params, n, m):
    _, terms = _root_terms(params)
    _, s, t = (float(c) for c in params.coefficients)
    window = [[float(c) for c in _S(params, n + j).coeffs] for j in range(3)]
    lhs, rhs, scales = [], [], []
    for _w, x, xh, k in terms:
        lhs.append(xh.scale(k * x ** (n + 2)))
        parts = [_quad(x, s, t, window[2][i], window[1][i], window[0][i]) for i in range(16)]
        rhs.append(CdElement(SEDENION_LEVEL, tuple(complex(p[0]) for p in parts)))
        scales.append(CdElement(SEDENION_LEVEL, tuple(float(p[1]) for p in parts)))
    return lhs, rhs, scales


def _i9(params, n, m):
    _, terms = _root_terms(params)
    r, _, t = (float(c) for c in params.coefficients)
    v0, v1, vm1 = _C(params, 0), _C(params, 1), _C(params, -1)
    lhs, rhs = [], []
    for _w, x, xh, k in terms:
        lhs.append(v0.scale(x * x - r * x) + v1.scale(x) + vm1.scale(t))
        rhs.append(xh.scale(k))
    return lhs, rhs


def _i10(params, n, m):
    roots, _ = _root_terms(params)
    a, b, c = roots.roots
    p, q, rr = roots.coeffs
    ah, bh, ch = root_sedenions(roots)
    r, _, t = (float(x) for x in params.coefficients)
    vm1 = (ah.scale(p * b * c * (c - b)) + bh.scale(q * a * c * (a - c))
           + ch.scale(rr * a * b * (b - a))).scale(1 / (t * (c - b) * (a - c) * (a - b)))
    v0 = (ah.scale(p * (b - c)) + bh.scale(q * (c - a)) + ch.scale(rr * (a - b))
          ).scale(1 / ((b - c) * (a - c) * (a - b)))
    e1 = p * (b - c) * (-r + b + c)
    e2 = q * (c - a) * (-r + a + c)
    e3 = rr * (a - b) * (-r + a + b)
    v1 = (ah.scale(e1) + bh.scale(e2) + ch.scale(e3)).scale(1 / ((c - b) * (a - c) * (a - b)))
    return [_C(params, -1), _C(params, 0), _C(params, 1)], [vm1, v0, v1]


def _i11(params, n, m):
    roots, _ = _root_terms(params)
    a, b, c = roots.roots
    p, q, rr = roots.coeffs
    ah, bh, ch = root_sedenions(roots)
    r, s, _ = (float(x) for x in params.coefficients)
    c1 = p * (b - c) * (s - r * b - r * c + b * c + r * r)
    c2 = q * (c - a) * (s - r * a - r * c + a * c + r * r)
    c3 = rr * (a - b) * (s - r * a - r * b + a * b + r * r)
    v2 = (ah.scale(c1) + bh.scale(c2) + ch.scale(c3)).scale(1 / ((b - c) * (a - c) * (a - b)))
    return [_C(params, 2)], [v2]


def _i12(params, n, m):
    lhs = _S(_T, n).scale(44)
    rhs = _S(_K, n + 2).scale(10) - _S(_K, n + 1).scale(6) - _S(_K, n).scale(8)
    return [lhs], [rhs]


def _i13(params, n, m):
    lhs = _S(_K, n)
    rhs = -_S(_T, n + 2) + _S(_T, n + 1).scale(4) - _S(_T, n)
    return [lhs], [rhs]


def sedenion_matrix(params: TriParams, n: int = 0) -> list[list[CdElement]]:
    """Rows (V^_{k+2}, s V^_{k+1} + t V^_k, t V^_{k+1}) for k = n+2, n+1, n.

    At n = 0 this is the generalized Tribonacci sedenion matrix M_V; for
    s = t = 1 it is (V^_4, V^_3 + V^_2, V^_3; ...; V^_2, V^_1 + V^_0, V^_1).
    """
    _, s, t = params.coefficients
    rows = []
    for k in (n + 2, n + 1, n):
        rows.append([
            _S(params, k + 2),
            _S(params, k + 1).scale(s) + _S(params, k).scale(t),
            _S(params, k + 1).scale(t),
        ])
    return rows


def sedenion_matrix_times(mv: list[list[CdElement]], mat: Matrix3) -> list[list[CdElement]]:
    """Product of a 3x3 sedenion matrix with a 3x3 scalar matrix (scalars are central)."""
    out = []
    for i in range(3):
        row = []
        for j in range(3):
            acc = zero(SEDENION_LEVEL)
            for k in range(3):
                if mat[k, j] != 0:
                    acc = acc + mv[i][k].scale(mat[k, j])
            row.append(acc)
        out.append(row)
    return out


def _i14(params, n, m):
    mn = companion_matrix(*params.coefficients) ** n
    lhs = sedenion_matrix_times(sedenion_matrix(params, 0), mn)
    rhs = sedenion_matrix(params, n)
    return [x for row in lhs for x in row], [x for row in rhs for x in row]


def _i15(params, n, m):
    r, s, t = params.coefficients
    u = lambda k: u_term(r, s, t, k)
    v0, v1, v2 = (_S(params, k) for k in range(3))
    rhs = v2.scale(u(n + 2)) + (v1.scale(s) + v0.scale(t)).scale(u(n + 1)) + v1.scale(t * u(n))
    return [_S(params, n + 2)], [rhs]


def _any(n, m):
    return True


def _n_ge(k):
    return lambda n, m: n >= k


CATALOG: dict[str, Identity] = {
    e.identity_id: e
    for e in [
        Identity("I1", "K^_n = 3T^_{n+1} - 2T^_n - T^_{n-1}", True, "n >= 1", _n_ge(1), _i1,
                 uses_params=False),
        Identity("I2", "V^_n + conj(V^_n) = 2V_n", True, "all integers n", _any, _i2),
        Identity("I3", "V^_{n+1} + V^_n = sum P a^ (a+1) a^n / ((a-b)(a-c))", False, "n >= 0",
                 _n_ge(0), _i3, needs_roots=True),
        Identity("I4", "sum_i C(n,i) V^_i = sum P a^ (1+a)^n / ((a-b)(a-c))", False, "n >= 0",
                 _n_ge(0), _i4, needs_roots=True,
                 notes="a variant right side with an extra root factor is sometimes quoted; it "
                       "equals sum_i C(n,i) V^_{i+1}"),
        Identity("I5", "K^_{m+n} = K_{n-1}T^_{m+2} + (T^_{m+1}+T^_m)K_{n-2} + K_{n-3}T^_{m+1}",
                 True, "n >= 0, m >= 3", lambda n, m: n >= 0 and m >= 3, _i5,
                 uses_params=False, uses_m=True),
        Identity("I6", "K^_{m+n} = K_{m+2}T^_{n-1} + (K_{m+1}+K_m)T^_{n-2} + K_{m+1}T^_{n-3}",
                 True, "n >= 0, m >= 3", lambda n, m: n >= 0 and m >= 3, _i6,
                 uses_params=False, uses_m=True),
        Identity("I7", "P a^{n+2} = a^2 V_{n+2} + a(sV_{n+1} + tV_n) + tV_{n+1} (and b, c)", False,
                 "all integers n", _any, _i7, needs_roots=True),
        Identity("I8", "P a^ a^{n+2} = a^2 V^_{n+2} + a(sV^_{n+1} + tV^_n) + tV^_{n+1} (and b, c)",
                 False, "n >= 0", _n_ge(0), _i8, needs_roots=True),
        Identity("I9", "(a^2 - r a)V^_0 + a V^_1 + t V^_{-1} = P a^ (and b, c)", False,
                 "independent of n", _any, _i9, needs_roots=True, needs_t=True),
        Identity("I10", "V^_{-1}, V^_0, V^_1 in terms of a^, b^, c^", False, "independent of n",
                 _any, _i10, needs_roots=True, needs_t=True),
        Identity("I11", "V^_2 = (a^ c1 + b^ c2 + c^ c3) / ((b-c)(a-c)(a-b))", False,
                 "independent of n", _any, _i11, needs_roots=True),
        Identity("I12", "44 T^_n = 10 K^_{n+2} - 6 K^_{n+1} - 8 K^_n", True, "all integers n",
                 _any, _i12, uses_params=False),
        Identity("I13", "K^_n = -T^_{n+2} + 4 T^_{n+1} - T^_n", True, "all integers n", _any, _i13,
                 uses_params=False),
        Identity("I14", "M_V M^n = [[V^_{n+4}, sV^_{n+3}+tV^_{n+2}, tV^_{n+3}], ...]", True,
                 "n >= 0", _n_ge(0), _i14),
        Identity("I15", "V^_{n+2} = V^_2 U_{n+2} + (sV^_1 + tV^_0) U_{n+1} + tV^_1 U_n", True,
                 "n >= 0", _n_ge(0), _i15),
    ]
}

EXACT_IDS = tuple(k for k, e in CATALOG.items() if e.exact)
FLOAT_IDS = tuple(k for k, e in CATALOG.items() if not e.exact)


def _components(x) -> list:
    if isinstance(x, CdElement):
        return list(x.coeffs)
    return [x]


def _is_exact_value(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def check_identity(
    identity_id: str,
    params: TriParams | None = None,
    n: int = 0,
    m: int | None = None,
    tolerance: float = DEFAULT_TOLERANCE,
    allow_outside: bool = False,
) -> IdentityReport:
    try:
        entry = CATALOG[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity {identity_id!r}; known: {', '.join(CATALOG)}") from None
    if entry.uses_m and m is None:
        raise DomainError(f"{identity_id} needs m ({entry.domain})")
    inside = entry.in_domain(n, m)
    if not inside and not allow_outside:
        raise DomainError(f"{identity_id} is stated for {entry.domain}; got n={n}, m={m}")
    if params is None:
        if entry.uses_params:
            raise ValueError(f"{identity_id} needs sequence parameters")
        params = _T
    if entry.needs_t and params.t == 0:
        raise SequenceError(f"{identity_id} needs t != 0")
    sides = entry.sides(params, n, m)
    lhs, rhs = sides[0], sides[1]
    scales = sides[2] if len(sides) > 2 else [None] * len(lhs)
    diffs: list = []
    scaled = 0.0
    for left, right, scale in zip(lhs, rhs, scales):
        comps = _components(scale) if scale is not None else [0.0] * len(_components(left))
        for a, b, w in zip(_components(left), _components(right), comps):
            if entry.exact:
                diffs.append(abs(a - b))
            else:
                d = abs(complex(a) - complex(b))
                diffs.append(d)
                scaled = max(scaled, d / max(1.0, abs(complex(a)), abs(complex(b)), w))
    residual = max(diffs)
    indices = (n, m) if entry.uses_m else (n,)
    if entry.exact:
        if not _is_exact_value(residual):
            raise TypeError(f"{identity_id} produced a non-exact residual")
        if isinstance(residual, Fraction) and residual.denominator == 1:
            residual = residual.numerator
        return IdentityReport(identity_id, indices, residual, residual == 0, True, in_domain=inside)
    return IdentityReport(identity_id, indices, residual, scaled <= tolerance, False,
                          tolerance=tolerance, scaled_residual=scaled, in_domain=inside)
