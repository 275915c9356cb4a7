"""Verification suites: each suite yields ``Check`` records in a fixed order.

Suites run against a list of selected sequences (all twelve named ones by
default).  A check whose formula hypotheses fail for a sequence (Delta <= 0,
t = 0, eps = 0) is reported as SKIP with the violated hypothesis named.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from . import cdalg
from .cdalg import CdElement, cd_basis, cd_conjugate, cd_multiply, cd_norm_sq
from .identities import CATALOG, check_identity
from .sedseq import (
    gf_coefficients,
    sed_binet,
    sed_norm_closed,
    sed_norm_direct,
    sed_norm_via_product,
    sed_sum,
    sed_sum_direct,
    sed_term,
    sed_value,
)
from .triseq import (
    SEQUENCE_NAMES,
    TriParams,
    binet_scalar,
    companion_matrix,
    cubic_roots,
    delta,
    det_D,
    howard_addition_check,
    matrix_n,
    matrix_o,
    matrix_power_entries,
    matrix_power_formula,
    named_params,
    poly_residuals,
    seq_term,
    seq_term_matrix,
    seq_terms,
    sum_scalar,
    u_term,
    vieta_residuals,
)

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"

SCALAR_TOLERANCE = 1e-9
SEDENION_TOLERANCE = 1e-8

# Reference value tables (n = 0..10) for the named sequences.
POSITIVE_TABLE = {
    "tribonacci": [0, 1, 1, 2, 4, 7, 13, 24, 44, 81, 149],
    "tribonacci-lucas": [3, 1, 3, 7, 11, 21, 39, 71, 131, 241, 443],
    "padovan": [1, 1, 1, 2, 2, 3, 4, 5, 7, 9, 12],
    "perrin": [3, 0, 2, 3, 2, 5, 5, 7, 10, 12, 17],
    "padovan-perrin": [0, 0, 1, 0, 1, 1, 1, 2, 2, 3, 4],
    "narayana": [0, 1, 1, 1, 2, 3, 4, 6, 9, 13, 19],
    "third-order-jacobsthal": [0, 1, 1, 2, 5, 9, 18, 37, 73, 146, 293],
    "third-order-jacobsthal-lucas": [2, 1, 5, 10, 17, 37, 74, 145, 293, 586, 1169],
}

# V_{-n} for n = 0..10.
NEGATIVE_TABLE = {
    "tribonacci": [0, 0, 1, -1, 0, 2, -3, 1, 4, -8, 5],
    "tribonacci-lucas": [3, -1, -1, 5, -5, -1, 11, -15, 3, 23, -41],
    "padovan": [1, 0, 1, 0, 0, 1, -1, 1, 0, -1, 2],
    "perrin": [3, -1, 1, 2, -3, 4, -2, -1, 5, -7, 6],
}

SUITES = ("tables", "cdalg", "binet", "gf", "sum", "norm", "identities", "matrix")


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    status: str
    residual: str = ""
    detail: str = ""

    def line(self) -> str:
        if self.status == SKIP:
            return f"{self.name}: SKIP {self.detail}"
        text = f"{self.name}: {self.status} residual {self.residual}"
        return f"{text} ({self.detail})" if self.detail else text

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "name": self.name,
            "status": self.status,
            "residual": self.residual,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class Selection:
    label: str
    params: TriParams


def fmt_exact(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def fmt_float(x: float) -> str:
    return "0" if x == 0 else f"{x:.3e}"


def _exact_check(suite, name, residual, detail="") -> Check:
    return Check(suite, name, PASS if residual == 0 else FAIL, fmt_exact(residual), detail)


def _float_check(suite, name, residual: float, tol: float, detail="") -> Check:
    status = PASS if residual <= tol else FAIL
    return Check(suite, name, status, fmt_float(residual), detail or f"tol {tol:g}")


def _rel(a: complex, b: complex) -> float:
    return abs(complex(a) - complex(b)) / max(1.0, abs(complex(b)))


def _elem_rel(x: CdElement, y: CdElement) -> float:
    return max(_rel(a, b) for a, b in zip(x.coeffs, y.coeffs))


def default_selection() -> list[Selection]:
    return [Selection(name, named_params(name)) for name in SEQUENCE_NAMES]


def _hypothesis_failure(params: TriParams, need_roots=False, need_t=False, need_eps=False):
    r, s, t = params.coefficients
    if need_roots:
        d = delta(r, s, t)
        if d <= 0:
            return f"Δ = {fmt_exact(d)} ≤ 0"
    if need_t and t == 0:
        return "t = 0"
    if need_eps and r + s + t - 1 == 0:
        return "ε = r+s+t-1 = 0"
    return None


# --- tables -------------------------------------------------------------------


def suite_tables(selection, tol) -> Iterator[Check]:
    for name, expected in POSITIVE_TABLE.items():
        got = seq_terms(named_params(name), 0, 10)
        bad = sum(1 for a, b in zip(got, expected) if a != b)
        yield Check("tables", f"table {name} n=0..10", PASS if bad == 0 else FAIL, str(bad),
                    "" if bad == 0 else f"got {got}")
    for name, expected in NEGATIVE_TABLE.items():
        p = named_params(name)
        got = [seq_term(p, -k) for k in range(11)]
        bad = sum(1 for a, b in zip(got, expected) if a != b)
        yield Check("tables", f"table {name} n=0..-10", PASS if bad == 0 else FAIL, str(bad),
                    "" if bad == 0 else f"got {got}")


# --- Cayley-Dickson structure -------------------------------------------------


def _basis(level):
    return [cd_basis(level, i) for i in range(1 << level)]


def _random_element(rng: random.Random, level: int) -> CdElement:
    return CdElement(level, tuple(
        Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(1 << level)
    ))


def _find_commutator_witness(level):
    b = _basis(level)
    for x, y in itertools.product(b, repeat=2):
        if x * y != y * x:
            return x, y
    return None


def _find_associator_witness(level):
    b = _basis(level)
    for x, y, z in itertools.product(b, repeat=3):
        if (x * y) * z != x * (y * z):
            return x, y, z
    return None


def _label(x: CdElement) -> str:
    terms = []
    for i, c in enumerate(x.coeffs):
        if c:
            sign = "-" if c < 0 else ("+" if terms else "")
            mag = "" if abs(c) == 1 else str(abs(c))
            terms.append(f"{sign}{mag}e{i}")
    return "".join(terms) or "0"


def suite_cdalg(selection, tol) -> Iterator[Check]:
    rng = random.Random(20190101)
    s = "cdalg"
    e = lambda i: cd_basis(4, i)
    for x, y in [(e(3) + e(10), e(6) - e(15)), (e(2) - e(14), e(3) + e(15))]:
        prod = x * y
        nz = max(abs(c) for c in prod.coeffs)
        yield _exact_check(s, f"zero-divisor ({_label(x)})({_label(y)})", nz)
    ops = cdalg.cd_count_naive_ops(4)
    ok = (ops.multiplications, ops.additions) == (256, 240)
    yield Check(s, "naive sedenion product op count", PASS if ok else FAIL, "0" if ok else "1",
                str(ops))
    for level in range(cdalg.MAX_LEVEL + 1):
        worst = 0
        for _ in range(10):
            x = _random_element(rng, level)
            worst = max(worst, 0 if cd_conjugate(cd_conjugate(x)) == x else 1)
        yield _exact_check(s, f"involution level {level}", worst, "10 random exact elements")
    for level in range(5):
        b = _basis(level)
        bad = sum(1 for x, y in itertools.product(b, repeat=2)
                  if cd_conjugate(x * y) != cd_conjugate(y) * cd_conjugate(x))
        yield _exact_check(s, f"anti-automorphism level {level}", bad, "all basis pairs")
    for level in range(cdalg.MAX_LEVEL + 1):
        worst = Fraction(0)
        for _ in range(5):
            x = _random_element(rng, level)
            n2 = cd_norm_sq(x)
            target = cd_basis(level, 0).scale(n2)
            for prod in (x * cd_conjugate(x), cd_conjugate(x) * x):
                worst = max(worst, max(abs(a - b) for a, b in zip(prod.coeffs, target.coeffs)))
        yield _exact_check(s, f"norm identity x conj(x) = |x|^2 level {level}", worst,
                           "5 random exact elements")
    for level in range(5):
        b = _basis(level)
        bad = sum(1 for x, y in itertools.product(b, repeat=2)
                  if (x * y) * x != x * (y * x))
        yield _exact_check(s, f"flexibility level {level}", bad, "all basis triples (x,y,x)")
    for level in range(2):
        b = _basis(level)
        bad = sum(1 for x, y in itertools.product(b, repeat=2) if x * y != y * x)
        yield _exact_check(s, f"commutativity level {level}", bad, "all basis pairs")
    for level in range(2, cdalg.MAX_LEVEL + 1):
        w = _find_commutator_witness(level)
        yield Check(s, f"non-commutativity witness level {level}", PASS if w else FAIL,
                    "0" if w else "1", f"{_label(w[0])}, {_label(w[1])}" if w else "none found")
    for level in range(3):
        b = _basis(level)
        bad = sum(1 for x, y, z in itertools.product(b, repeat=3)
                  if (x * y) * z != x * (y * z))
        yield _exact_check(s, f"associativity level {level}", bad, "all basis triples")
    for level in range(3, cdalg.MAX_LEVEL + 1):
        w = _find_associator_witness(level)
        yield Check(s, f"non-associativity witness level {level}", PASS if w else FAIL,
                    "0" if w else "1", ", ".join(map(_label, w)) if w else "none found")
    for level in range(4):
        b = _basis(level)
        bad = sum(1 for x, y in itertools.product(b, repeat=2)
                  if cd_norm_sq(x * y) != cd_norm_sq(x) * cd_norm_sq(y))
        for _ in range(10):
            x, y = _random_element(rng, level), _random_element(rng, level)
            if cd_norm_sq(x * y) != cd_norm_sq(x) * cd_norm_sq(y):
                bad += 1
        yield _exact_check(s, f"norm multiplicativity level {level}", bad,
                           "all basis pairs + 10 random pairs")
    x, y = e(3) + e(10), e(6) - e(15)
    gap = cd_norm_sq(x) * cd_norm_sq(y) - cd_norm_sq(x * y)
    yield Check(s, "norm multiplicativity fails at level 4", PASS if gap != 0 else FAIL,
                "0" if gap != 0 else "1", f"|x|^2|y|^2 - |xy|^2 = {gap} for a zero-divisor pair")
    for level in range(5):
        bad = 0
        for _ in range(5):
            x, y = _random_element(rng, level), _random_element(rng, level)
            if cd_multiply(x, y, cdalg.OpCount()) != cd_multiply(x, y):
                bad += 1
        yield _exact_check(s, f"table product = doubling product level {level}", bad,
                           "5 random exact pairs")
    for level in range(cdalg.MAX_LEVEL + 1):
        n = 1 << level
        table = cdalg.cd_mul_table(level)
        rows_ok = all(sorted(k for _, k in row) == list(range(n)) for row in table)
        cols_ok = all(sorted(table[i][j][1] for i in range(n)) == list(range(n)) for j in range(n))
        ok = rows_ok and cols_ok
        yield Check(s, f"multiplication table level {level} is a signed permutation",
                    PASS if ok else FAIL, "0" if ok else "1")


# --- per-sequence suites -----------------------------------------------------


def suite_binet(selection, tol) -> Iterator[Check]:
    s = "binet"
    scalar_tol = tol if tol is not None else SCALAR_TOLERANCE
    sed_tol = tol if tol is not None else SEDENION_TOLERANCE
    for sel in selection:
        p = sel.params
        why = _hypothesis_failure(p, need_roots=True)
        if why:
            yield Check(s, f"binet {sel.label}", SKIP, detail=why)
            continue
        roots = cubic_roots(p)
        yield _float_check(s, f"vieta {sel.label}", max(vieta_residuals(p, roots)), 1e-12)
        yield _float_check(s, f"characteristic residual {sel.label}",
                           max(poly_residuals(p, roots)), 1e-10)
        lo = -20 if p.t != 0 else 0
        worst = max(_rel(binet_scalar(p, n, roots), seq_term(p, n)) for n in range(lo, 41))
        yield _float_check(s, f"scalar binet {sel.label} n={lo}..40", worst, scalar_tol)
        lo = -10 if p.t != 0 else 0
        worst = max(_elem_rel(sed_binet(p, n, "main", roots), sed_value(p, n))
                    for n in range(lo, 31))
        yield _float_check(s, f"sedenion binet (main) {sel.label} n={lo}..30", worst, sed_tol)
        if p.t == 0:
            yield Check(s, f"sedenion binet (alternative) {sel.label}", SKIP, detail="t = 0")
            continue
        worst = 0.0
        for n in range(-10, 31):
            alt = sed_binet(p, n, "alternative", roots)
            worst = max(worst, _elem_rel(alt, sed_value(p, n)),
                        _elem_rel(alt, sed_binet(p, n, "main", roots)))
        yield _float_check(s, f"sedenion binet (alternative) {sel.label} n=-10..30", worst,
                           sed_tol)


def suite_gf(selection, tol) -> Iterator[Check]:
    for sel in selection:
        coeffs = gf_coefficients(sel.params, 31)
        bad = sum(1 for k, c in enumerate(coeffs) if c.value != sed_value(sel.params, k))
        yield _exact_check("gf", f"generating function {sel.label} orders 0..30", bad)


def suite_sum(selection, tol) -> Iterator[Check]:
    for sel in selection:
        p = sel.params
        why = _hypothesis_failure(p, need_eps=True)
        if why:
            yield Check("sum", f"summation {sel.label}", SKIP, detail=why)
            continue
        terms = seq_terms(p, 0, 50)
        worst = max(abs(sum_scalar(p, n) - sum(terms[: n + 1])) for n in range(51))
        yield _exact_check("sum", f"scalar summation {sel.label} n=0..50", worst)
        worst = 0
        for n in range(31):
            diff = sed_sum(p, n) - sed_sum_direct(p, n)
            worst = max(worst, max(abs(c) for c in diff.coeffs))
        yield _exact_check("sum", f"sedenion summation {sel.label} n=0..30", worst)


def suite_norm(selection, tol) -> Iterator[Check]:
    s = "norm"
    sed_tol = tol if tol is not None else SEDENION_TOLERANCE
    for sel in selection:
        p = sel.params
        lo = -10 if p.t != 0 else 0
        worst = 0
        for n in range(lo, 21):
            term = sed_term(p, n)
            worst = max(worst, abs(sed_norm_direct(term) - sed_norm_via_product(term)))
        yield _exact_check(s, f"norm = Re(V conj V) {sel.label} n={lo}..20", worst)
        why = _hypothesis_failure(p, need_roots=True)
        if why:
            yield Check(s, f"closed-form norm {sel.label}", SKIP, detail=why)
            continue
        roots = cubic_roots(p)
        worst = max(_rel(sed_norm_closed(p, n, roots), sed_norm_direct(sed_term(p, n)))
                    for n in range(21))
        yield _float_check(s, f"closed-form norm {sel.label} n=0..20", worst, sed_tol)


def _same_rst(a: TriParams, b: TriParams) -> bool:
    return a.coefficients == b.coefficients


def suite_identities(selection, tol) -> Iterator[Check]:
    s = "identities"
    ftol = tol if tol is not None else SEDENION_TOLERANCE
    for iid, entry in CATALOG.items():
        if entry.uses_params:
            targets = selection
        else:
            targets = [Selection("tribonacci/tribonacci-lucas", None)]
        ms = list(range(3, 11)) if entry.uses_m else [None]
        for sel in targets:
            name = f"{iid} {sel.label}"
            ns = range(-5, 21) if entry.exact else range(0, 21)
            if sel.params is not None:
                why = _hypothesis_failure(sel.params, need_roots=entry.needs_roots,
                                          need_t=entry.needs_t)
                if why:
                    yield Check(s, name, SKIP, detail=why)
                    continue
                if sel.params.t == 0:
                    ns = range(0, 21)
            worst, worst_scaled, count, failed = 0, 0.0, 0, 0
            for n in ns:
                for m in ms:
                    if not entry.in_domain(n, m):
                        continue
                    rep = check_identity(iid, sel.params, n, m, tolerance=ftol)
                    count += 1
                    failed += not rep.passed
                    if entry.exact:
                        worst = max(worst, rep.residual)
                    else:
                        worst_scaled = max(worst_scaled, rep.scaled_residual)
            status = PASS if failed == 0 else FAIL
            residual = fmt_exact(worst) if entry.exact else fmt_float(worst_scaled)
            yield Check(s, name, status, residual, f"{count} cases, domain {entry.domain}")
    # determinant and addition-formula identities from the scalar engine
    pool = default_selection()
    for sel in selection:
        partners = [o for o in pool if _same_rst(o.params, sel.params)]
        if sel.params.t == 0:
            yield Check(s, f"D_n = 0 {sel.label}", SKIP, detail="t = 0")
        else:
            worst = 0
            for other in partners:
                for n in range(-20, 21):
                    worst = max(worst, abs(det_D(sel.params, other.params, n)),
                                abs(det_D(other.params, sel.params, n)))
            yield _exact_check(s, f"D_n = 0 {sel.label}", worst,
                               f"with {len(partners)} partner(s), n=-20..20")
        if sel.params.t == 0:
            yield Check(s, f"addition formula {sel.label}", SKIP, detail="t = 0")
        else:
            worst = max(abs(howard_addition_check(sel.params, n, m))
                        for n in range(-5, 16) for m in range(0, 9))
            yield _exact_check(s, f"addition formula {sel.label}", worst, "n=-5..15, m=0..8")


def suite_matrix(selection, tol) -> Iterator[Check]:
    s = "matrix"
    for sel in selection:
        p = sel.params
        r, s_, t = p.coefficients
        bad = sum(1 for n in range(61) if seq_term_matrix(p, n) != seq_term(p, n))
        yield _exact_check(s, f"matrix formulation {sel.label} n=0..60", bad)
        lo = 0 if t != 0 else 2
        bad = sum(1 for n in range(lo, 31)
                  if matrix_power_entries(r, s_, t, n) != matrix_power_formula(r, s_, t, n))
        yield _exact_check(s, f"M^n entries from U {sel.label} n={lo}..30", bad)
        bad = sum(1 for n in range(11) if matrix_power_entries(r, s_, t, n).det() != t ** n)
        yield _exact_check(s, f"det M^n = t^n {sel.label} n=0..10", bad)
        target = (1, -r, -s_, -t)
        bad = sum(1 for mat in (companion_matrix(r, s_, t), matrix_n(r, s_, t), matrix_o(r, s_, t))
                  if tuple(mat.charpoly()) != target)
        yield _exact_check(s, f"charpoly of M, N, O {sel.label}", bad)
        v0, v1, v2 = p.initial
        nm, om = matrix_n(r, s_, t), matrix_o(r, s_, t)
        bad = 0
        for n in range(21):
            nn, on = nm ** n, om ** n
            row = tuple(sum(vec * nn[k, j] for k, vec in enumerate((v2, v1, v0)))
                        for j in range(3))
            col = on.apply((v0, v1, v2))
            want = (seq_term(p, n + 2), seq_term(p, n + 1), seq_term(p, n))
            bad += row != want
            bad += col != want[::-1]
        yield _exact_check(s, f"N^n and O^n generate {sel.label} n=0..20", bad)
        if (r, s_, t) == (1, 1, 1):
            bad = sum(1 for n in range(1, 21)
                      if u_term(1, 1, 1, -n)
                      != u_term(1, 1, 1, n + 1) ** 2 - u_term(1, 1, 1, n + 2) * u_term(1, 1, 1, n))
            yield _exact_check(s, f"U_-n = U_n+1^2 - U_n+2 U_n {sel.label} n=1..20", bad)
        for iid in ("I14", "I15"):
            worst = max(check_identity(iid, p, n).residual for n in range(31))
            yield _exact_check(s, f"{iid} {sel.label} n=0..30", worst)


_SUITE_FUNCS: dict[str, Callable] = {
    "tables": suite_tables,
    "cdalg": suite_cdalg,
    "binet": suite_binet,
    "gf": suite_gf,
    "sum": suite_sum,
    "norm": suite_norm,
    "identities": suite_identities,
    "matrix": suite_matrix,
}


def run_suite(suite: str, selection: list[Selection] | None = None,
              tolerance: float | None = None) -> list[Check]:
    if selection is None:
        selection = default_selection()
    if suite == "all":
        names = SUITES
    elif suite in _SUITE_FUNCS:
        names = (suite,)
    else:
        raise KeyError(f"unknown suite {suite!r}; choose from all, {', '.join(SUITES)}")
    checks: list[Check] = []
    for name in names:
        checks.extend(_SUITE_FUNCS[name](selection, tolerance))
    return checks


def summarize(checks: list[Check]) -> dict:
    return {
        "passed": sum(c.status == PASS for c in checks),
        "failed": sum(c.status == FAIL for c in checks),
        "skipped": sum(c.status == SKIP for c in checks),
    }
