"""Generalized Tribonacci sedenions V^_n = sum_{s=0}^{15} V_{n+s} e_s.

Exact terms, conjugates and norms live in the rationals; the Binet forms and
the closed-form norm are evaluated in complex doubles from ``cubic_roots``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cdalg import CdElement, cd_conjugate, cd_multiply, cd_norm_sq, zero
from .triseq import (
    RootData,
    SequenceError,
    TriParams,
    cubic_roots,
    seq_term,
    seq_terms,
)

SEDENION_LEVEL = 4
DIM = 16


@dataclass(frozen=True)
class SedenionTerm:
    n: int
    value: CdElement

    @property
    def coeffs(self) -> tuple:
        return self.value.coeffs


def sed_term(params: TriParams, n: int) -> SedenionTerm:
    return SedenionTerm(n, CdElement(SEDENION_LEVEL, tuple(seq_terms(params, n, n + DIM - 1))))


def sed_value(params: TriParams, n: int) -> CdElement:
    return sed_term(params, n).value


def sed_conjugate(x: SedenionTerm) -> CdElement:
    return cd_conjugate(x.value)


def sed_norm_direct(x: SedenionTerm):
    """||V^_n||^2 = V_n^2 + ... + V_{n+15}^2, exact."""
    return cd_norm_sq(x.value)


def sed_norm_via_product(x: SedenionTerm):
    """Real part of V^_n conj(V^_n), computed through the sedenion product."""
    return cd_multiply(x.value, cd_conjugate(x.value)).real


def complex_element(coeffs: Sequence) -> CdElement:
    return CdElement(SEDENION_LEVEL, tuple(complex(c) for c in coeffs))


def as_complex(x: CdElement) -> CdElement:
    return CdElement(x.level, tuple(complex(c) for c in x.coeffs))


def imag_residue(x: CdElement) -> float:
    """Largest |Im c| / max(1, |Re c|) over the coefficients."""
    return max(abs(complex(c).imag) / max(1.0, abs(complex(c).real)) for c in x.coeffs)


def real_part(x: CdElement) -> CdElement:
    return CdElement(x.level, tuple(complex(c).real for c in x.coeffs))


# --- root sedenions and Binet ---------------------------------------------


@dataclass(frozen=True)
class RootSedenions:
    alpha_hat: CdElement
    beta_hat: CdElement
    gamma_hat: CdElement

    def __iter__(self):
        return iter((self.alpha_hat, self.beta_hat, self.gamma_hat))


def hat(x: complex) -> CdElement:
    """x^ = sum_{s=0}^{15} x^s e_s."""
    x = complex(x)
    return complex_element([x ** s for s in range(DIM)])


def root_sedenions(roots: RootData) -> RootSedenions:
    return RootSedenions(*(hat(x) for x in roots.roots))


def _check_imag(x: CdElement, what: str) -> CdElement:
    res = imag_residue(x)
    if res > 1e-8:
        raise ArithmeticError(f"{what} has imaginary residue {res:.3e}")
    return x


def sed_binet(
    params: TriParams,
    n: int,
    form: str = "main",
    roots: RootData | None = None,
) -> CdElement:
    """Binet evaluation of V^_n with complex-double coefficients.

    ``form="main"`` uses P alpha^ alpha^n / ((alpha-beta)(alpha-gamma)) + ...
    (and the (x^2 - r x - s)/t rewriting for n < 0); ``form="alternative"``
    uses the generating-function coefficients (x^2 - r x) V^_0 + x V^_1 + t V^_{-1}.
    """
    if roots is None:
        roots = cubic_roots(params)
    r, s, t = (float(c) for c in params.coefficients)
    hats = root_sedenions(roots)
    acc = zero(SEDENION_LEVEL, "float").scale(0j)
    if form == "main":
        for w, x, xh in zip(roots.weights(), roots.roots, hats):
            if n >= 0:
                factor = w * x ** n
            else:
                if t == 0:
                    raise SequenceError("negative-index Binet form needs t != 0")
                factor = (x * x - r * x - s) / t * w * x ** (1 + n)
            acc = acc + xh.scale(factor)
    elif form == "alternative":
        if t == 0:
            raise SequenceError("alternative Binet form needs t != 0 (uses V^_{-1})")
        v0, v1, vm1 = (as_complex(sed_value(params, k)) for k in (0, 1, -1))
        for d, x in zip(roots.denominators(), roots.roots):
            coeff = v0.scale(x * x - r * x) + v1.scale(x) + vm1.scale(t)
            acc = acc + coeff.scale(x ** n / d)
    else:
        raise ValueError(f"unknown Binet form {form!r}; use 'main' or 'alternative'")
    return _check_imag(acc, f"sedenion Binet ({form}) at n={n}")


# --- generating function ---------------------------------------------------


def series_divide(numerator: Sequence[CdElement], denominator: Sequence, count: int) -> list[CdElement]:
    """First ``count`` coefficients of numerator(x) / denominator(x).

    ``numerator`` has element coefficients, ``denominator`` exact scalar
    coefficients with a nonzero constant term.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    d0 = Fraction(denominator[0])
    if d0 == 0:
        raise ZeroDivisionError("denominator has zero constant term")
    level = numerator[0].level
    out: list[CdElement] = []
    for k in range(count):
        acc = numerator[k] if k < len(numerator) else zero(level)
        for j in range(1, min(k, len(denominator) - 1) + 1):
            if denominator[j] != 0:
                acc = acc - out[k - j].scale(denominator[j])
        out.append(acc if d0 == 1 else acc.scale(1 / d0))
    return out


def gf_numerator(params: TriParams) -> list[CdElement]:
    """V^_0, V^_1 - r V^_0, V^_2 - r V^_1 - s V^_0 (the last equals t V^_{-1})."""
    r, s, _ = params.coefficients
    v0, v1, v2 = (sed_value(params, k) for k in range(3))
    return [v0, v1 - v0.scale(r), v2 - v1.scale(r) - v0.scale(s)]


def gf_denominator(params: TriParams) -> list[Fraction]:
    r, s, t = params.coefficients
    return [Fraction(1), -r, -s, -t]


def gf_coefficients(params: TriParams, count: int) -> list[SedenionTerm]:
    """Power-series coefficients of the sedenion generating function, exactly."""
    coeffs = series_divide(gf_numerator(params), gf_denominator(params), count)
    return [SedenionTerm(k, _normalize(c)) for k, c in enumerate(coeffs)]


def _normalize(x: CdElement) -> CdElement:
    return CdElement(x.level, tuple(
        c.numerator if isinstance(c, Fraction) and c.denominator == 1 else c for c in x.coeffs
    ))


# --- summation -------------------------------------------------------------


def summation_constants(params: TriParams) -> tuple[Fraction, Fraction, CdElement]:
    """(eps, mu, phi) for the sedenion summation formula."""
    r, s, t = params.coefficients
    v0, v1, v2 = params.initial
    eps = r + s + t - 1
    mu = (r + s - 1) * v0 + (r - 1) * v1 - v2
    partial = Fraction(0)
    phi = []
    for k in range(DIM):
        phi.append(mu - eps * partial)
        partial += seq_term(params, k)
    return eps, mu, CdElement(SEDENION_LEVEL, tuple(phi))


def sed_sum(params: TriParams, n: int) -> CdElement:
    """V^_0 + ... + V^_n = (V^_{n+2} + (1-r) V^_{n+1} + t V^_n + phi) / eps."""
    if n < 0:
        raise SequenceError("summation index must be non-negative")
    r, _, t = params.coefficients
    eps, _, phi = summation_constants(params)
    if eps == 0:
        raise SequenceError("summation formula singular: eps = r + s + t - 1 = 0")
    total = sed_value(params, n + 2) + sed_value(params, n + 1).scale(1 - r) \
        + sed_value(params, n).scale(t) + phi
    return _normalize(total.scale(1 / eps))


def sed_sum_direct(params: TriParams, n: int) -> CdElement:
    acc = zero(SEDENION_LEVEL)
    for i in range(n + 1):
        acc = acc + sed_value(params, i)
    return acc


# --- closed-form norm ------------------------------------------------------


def _geom(x: complex, terms: int = DIM) -> complex:
    return sum(x ** k for k in range(terms))


def sed_norm_closed(
    params: TriParams,
    n: int,
    roots: RootData | None = None,
    form: str = "proof",
) -> float:
    """||V^_n||^2 from the roots.

    ``form="proof"`` squares psi V_n = (b-c) P a^n + (c-a) Q b^n + (a-b) R c^n
    and sums over the sixteen shifts, giving cross terms in PQ, PR and QR.
    ``form="statement"`` evaluates the commonly quoted closed form, whose
    coefficients ((b-a)^2 P^2, and PQ in all three cross terms) disagree with
    the derivation; it is kept only to demonstrate that disagreement.
    """
    if roots is None:
        roots = cubic_roots(params)
    a, b, c = roots.roots
    p, q, rr = roots.coeffs
    psi = (a - b) * (a - c) * (b - c)
    ta, tb, tc = _geom(a * a), _geom(b * b), _geom(c * c)
    tab, tac, tbc = _geom(a * b), _geom(a * c), _geom(b * c)
    if form == "proof":
        total = (
            (b - c) ** 2 * p * p * ta * a ** (2 * n)
            + (c - a) ** 2 * q * q * tb * b ** (2 * n)
            + (a - b) ** 2 * rr * rr * tc * c ** (2 * n)
            + 2 * (b - c) * (c - a) * p * q * tab * (a * b) ** n
            + 2 * (b - c) * (a - b) * p * rr * tac * (a * c) ** n
            + 2 * (c - a) * (a - b) * q * rr * tbc * (b * c) ** n
        )
    elif form == "statement":
        big_m = (
            (a - c) * (b - c) * p * q * tab * (a * b) ** n
            + (a - b) * (b - c) * p * q * tac * (a * c) ** n
            + (a - b) * (a - c) * p * q * tbc * (b * c) ** n
        )
        total = (
            (b - a) ** 2 * p * p * ta * a ** (2 * n)
            + (a - c) ** 2 * q * q * tb * b ** (2 * n)
            + (a - b) ** 2 * rr * rr * tc * c ** (2 * n)
            - 2 * big_m
        )
    else:
        raise ValueError(f"unknown norm form {form!r}")
    value = total / psi ** 2
    if form == "proof" and abs(value.imag) > 1e-8 * max(1.0, abs(value.real)):
        raise ArithmeticError(f"closed-form norm has imaginary residue {value.imag:.3e}")
    return value.real
