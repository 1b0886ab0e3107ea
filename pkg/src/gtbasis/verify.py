"""Machine verification of every identity behind the basis construction.

Each check is a pure function returning pass/fail plus a first-counterexample
witness.  Checks draw their randomness from a splittable seed sequence keyed
by (seed, check name, parameters), so the report content is identical for a
given seed regardless of execution order or thread count.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .clifford import Multivector
from .gegenbauer import gegenbauer_poly, gf_value, series_oracle
from .harmonics import (FACTORIAL, PLAIN, BasisIndex, DomainBox, embedding_F,
                        enumerate_harm_indices, gf_harm_closed, gf_harm_closed_m3,
                        gf_harm_partial_sum, gf_harm_series, harm_basis,
                        iter_multi_indices)
from .hseries import HSeries, binomial_expand, power_series
from .monogenics import (MonIndex, _underline_x_em, embedding_X,
                         enumerate_mon_indices, gf_mon_closed, gf_mon_closed_m3,
                         gf_mon_partial_sum, gf_mon_series, mon_basis)
from .mvpoly import CLIFFORD, GAUSSIAN, MPoly, radius_squared
from .ballint import inner_harm, inner_mon

SUITES = ("pde", "ortho", "extract", "gf", "lemmas")

GEGENBAUER_NUS = (Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2), Fraction(5, 2))
NUM_POINTS = 20
SERIES_ORDER = 30
GF_TOL = 1e-8
RECUR_TOL = 1e-12


@dataclass
class CheckResult:
    name: str
    params: dict
    status: str
    witness: str | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "params": self.params, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Check:
    name: str
    params: dict
    fn: object = field(repr=False)

    def run(self, seed: int) -> CheckResult:
        rng = _check_rng(seed, self.name, self.params)
        ok, witness = self.fn(rng)
        return CheckResult(self.name, self.params, "pass" if ok else "fail", witness)


def _check_rng(seed: int, name: str, params: dict) -> np.random.Generator:
    key = json.dumps([name, params], sort_keys=True).encode()
    digest = hashlib.sha256(key).digest()
    words = [int.from_bytes(digest[i:i + 8], "big") for i in range(0, 32, 8)]
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed] + words)))


# -- random data -------------------------------------------------------------


def _random_ball_point(rng, m: int) -> list:
    while True:
        x = rng.uniform(-1.0, 1.0, size=m)
        if float(x @ x) <= 1.0:
            return [float(v) for v in x]


def _random_h(rng, m: int, h2_bound: float) -> list:
    box = DomainBox(m)
    h = [float(rng.uniform(-h2_bound, h2_bound))]
    for r in range(3, m + 1):
        b = float(box.bound(r)) / 2.0
        h.append(float(rng.uniform(-b, b)))
    return h


def _random_fraction(rng) -> Fraction:
    return Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 10)))


def _random_clifford_poly(rng, m: int, deg: int, nterms: int = 6) -> MPoly:
    terms: dict = {}
    for _ in range(nterms):
        exps = []
        left = deg
        for _ in range(m):
            e = int(rng.integers(0, left + 1))
            exps.append(e)
            left -= e
        mask = int(rng.integers(0, 1 << m))
        coeff = Multivector.blade(m, mask, _random_fraction(rng))
        key = tuple(exps)
        terms[key] = terms.get(key, Multivector.zero(m)) + coeff
    return MPoly(m, CLIFFORD, terms)


# -- pde suite ---------------------------------------------------------------


def _check_harm_kernel(m: int, deg: int, norm: str):
    def run(rng):
        for idx in enumerate_harm_indices(m, deg, norm):
            poly = harm_basis(idx)
            if not poly.laplacian().is_zero():
                return False, f"laplacian(harm {idx}) != 0"
            if not poly.is_homogeneous(idx.degree()):
                return False, f"harm {idx} not homogeneous of degree {idx.degree()}"
        return True, None
    return run

def _check_mon_kernel(m: int, deg: int, norm: str):
    def run(rng):
        for idx in enumerate_mon_indices(m, deg, norm):
            poly = mon_basis(idx)
            if not poly.dirac().is_zero():
                return False, f"dirac(mon {idx}) != 0"
            if not poly.is_homogeneous(idx.degree()):
                return False, f"mon {idx} not homogeneous of degree {idx.degree()}"
        return True, None
    return run

def _check_factorization(m_max: int, count: int):
    def run(rng):
        for i in range(count):
            m = int(rng.integers(2, m_max + 1))
            deg = int(rng.integers(0, 6))
            poly = _random_clifford_poly(rng, m, deg)
            if -poly.dirac().dirac() != poly.laplacian():
                return False, f"sample {i}: -dirac^2 != laplacian (m={m}, deg={deg})"
        return True, None
    return run


# -- ortho suite -------------------------------------------------------------


def _check_harm_orthogonality(m: int, deg: int, norm: str):
    def run(rng):
        basis = [(idx, harm_basis(idx)) for idx in enumerate_harm_indices(m, deg, norm)]
        for i, (idx_a, a) in enumerate(basis):
            self_prod = inner_harm(a, a)
            if not self_prod > 0:
                return False, f"<{idx_a},{idx_a}> = {self_prod} not positive"
            for idx_b, b in basis[i + 1:]:
                prod = inner_harm(a, b)
                if not prod.is_zero():
                    return False, f"<{idx_a},{idx_b}> = {prod} != 0"
        return True, None
    return run

def _check_mon_orthogonality(m: int, deg: int, norm: str):
    def run(rng):
        basis = [(idx, mon_basis(idx)) for idx in enumerate_mon_indices(m, deg, norm)]
        for i, (idx_a, a) in enumerate(basis):
            self_prod = inner_mon(a, a)
            if not self_prod > 0:
                return False, f"<{idx_a},{idx_a}> = {self_prod} not positive"
            for idx_b, b in basis[i + 1:]:
                prod = inner_mon(a, b)
                if not prod.is_zero():
                    return False, f"<{idx_a},{idx_b}> = {prod} != 0"
        return True, None
    return run


# -- extract suite -----------------------------------------------------------


def _check_harm_extraction(m: int, order: int, sign: int, norm: str):
    def run(rng):
        series = gf_harm_series(m, order, sign, norm)
        for k in iter_multi_indices(m - 1, order):
            expected = harm_basis(BasisIndex(k, sign, norm))
            if series.coefficient(k) != expected:
                return False, f"coefficient at k={k} differs from harm_basis"
        return True, None
    return run

def _check_mon_extraction(m: int, order: int, norm: str):
    def run(rng):
        series = gf_mon_series(m, order, norm)
        for k in iter_multi_indices(m - 1, order):
            expected = mon_basis(MonIndex(k, norm))
            if series.coefficient(k) != expected:
                return False, f"coefficient at k={k} differs from mon_basis"
        return True, None
    return run


# -- gf suite ----------------------------------------------------------------


def _check_gegenbauer_gf_float():
    def run(rng):
        for nu in GEGENBAUER_NUS[:4]:
            polys = [gegenbauer_poly(nu, k) for k in range(SERIES_ORDER + 1)]
            for t in (-1.0, -0.5, 0.0, 0.5, 1.0):
                for h in (0.25, -0.25, 0.125, -0.125):
                    partial = sum(p(t) * h ** k for k, p in enumerate(polys))
                    closed = gf_value(nu, t, h)
                    if abs(partial - closed) > 1e-10:
                        return False, f"nu={nu} t={t} h={h}: |{partial}-{closed}|"
        return True, None
    return run

def _h2_bound(norm: str) -> float:
    return 0.5 if norm == FACTORIAL else 0.1

def _check_harm_closed_vs_series(m: int, norm: str):
    def run(rng):
        for i in range(NUM_POINTS):
            x = _random_ball_point(rng, m)
            h = _random_h(rng, m, _h2_bound(norm))
            for sign in (+1, -1):
                closed = gf_harm_closed(m, x, h, sign, norm)
                partial = gf_harm_partial_sum(m, x, h, SERIES_ORDER, sign, norm)
                if abs(closed - partial) > GF_TOL:
                    return False, f"point {i}: |closed-series| = {abs(closed - partial)}"
        return True, None
    return run

def _check_mon_closed_vs_series(m: int, norm: str):
    def run(rng):
        for i in range(NUM_POINTS):
            x = _random_ball_point(rng, m)
            h = _random_h(rng, m, _h2_bound(norm))
            closed = gf_mon_closed(m, x, h, norm)
            partial = gf_mon_partial_sum(m, x, h, SERIES_ORDER, norm)
            diff = closed - partial
            err = max((abs(c) for c in diff.terms.values()), default=0.0)
            if err > GF_TOL:
                return False, f"point {i}: component error {err}"
        return True, None
    return run

def _check_harm_recurrence_step(m: int, norm: str):
    def run(rng):
        for i in range(NUM_POINTS):
            x = _random_ball_point(rng, m)
            h = _random_h(rng, m, _h2_bound(norm))
            r2 = sum(v * v for v in x)
            d = 1.0 - 2.0 * x[-1] * h[-1] + h[-1] ** 2 * r2
            whole = gf_harm_closed(m, x, h, +1, norm)
            inner = gf_harm_closed(m - 1, x[:-1], [v / d for v in h[:-1]], +1, norm,
                                   unsafe_domain=True)
            step = d ** (1.0 - m / 2.0) * inner
            if abs(whole - step) > RECUR_TOL * max(1.0, abs(whole)):
                return False, f"point {i}: |recursive-step| = {abs(whole - step)}"
        return True, None
    return run

def _check_harm_m3_formula(sign: int, norm: str):
    def run(rng):
        for i in range(NUM_POINTS):
            x = _random_ball_point(rng, 3)
            h = _random_h(rng, 3, _h2_bound(norm))
            direct = gf_harm_closed_m3(x, h, sign, norm)
            generic = gf_harm_closed(3, x, h, sign, norm)
            partial = gf_harm_partial_sum(3, x, h, SERIES_ORDER, sign, norm)
            if abs(direct - generic) > RECUR_TOL * max(1.0, abs(direct)):
                return False, f"point {i}: m3 formula vs recurrence {abs(direct - generic)}"
            if abs(direct - partial) > GF_TOL:
                return False, f"point {i}: m3 formula vs series {abs(direct - partial)}"
        return True, None
    return run

def _check_mon_m3_formula(norm: str):
    def run(rng):
        for i in range(NUM_POINTS):
            x = _random_ball_point(rng, 3)
            h = _random_h(rng, 3, _h2_bound(norm))
            direct = gf_mon_closed_m3(x, h, norm)
            generic = gf_mon_closed(3, x, h, norm)
            partial = gf_mon_partial_sum(3, x, h, SERIES_ORDER, norm)
            d1 = direct - generic
            err1 = max((abs(c) for c in d1.terms.values()), default=0.0)
            if err1 > RECUR_TOL:
                return False, f"point {i}: m3 formula vs recurrence {err1}"
            d2 = direct - partial
            err2 = max((abs(c) for c in d2.terms.values()), default=0.0)
            if err2 > GF_TOL:
                return False, f"point {i}: m3 formula vs series {err2}"
        return True, None
    return run


# -- lemmas suite ------------------------------------------------------------


def _check_gegenbauer_recurrence_vs_oracle():
    def run(rng):
        for nu in GEGENBAUER_NUS:
            oracle = series_oracle(nu, 12)
            for k in range(13):
                if gegenbauer_poly(nu, k).coeffs != oracle[k]:
                    return False, f"nu={nu} k={k}: recurrence differs from oracle"
        return True, None
    return run

def _check_gegenbauer_parity():
    def run(rng):
        for nu in GEGENBAUER_NUS:
            for k in range(13):
                coeffs = gegenbauer_poly(nu, k).coeffs
                if any(c != 0 for i, c in enumerate(coeffs) if (i - k) % 2):
                    return False, f"nu={nu} k={k}: parity violated"
        return True, None
    return run

def _check_lemma_gf_f(m: int, j: int, kmax: int = 8):
    def run(rng):
        alpha = -(Fraction(m, 2) - 1 + j)
        c1 = MPoly.variable(m, m).scale(-2)
        c2 = radius_squared(m)
        series = binomial_expand(alpha, c1, c2, m, kmax)
        for k in range(kmax + 1):
            key = tuple(k if i == m - 2 else 0 for i in range(m - 1))
            if series.coefficient(key) != embedding_F(m, j, k):
                return False, f"k={k}: expansion differs from embedding factor"
        return True, None
    return run

def _check_lemma_gf_x(m: int, j: int, kmax: int = 8):
    def run(rng):
        alpha = -(Fraction(m, 2) + j)
        c1 = MPoly.variable(m, m, CLIFFORD).scale(-2)
        c2 = radius_squared(m, ring=CLIFFORD)
        denom = binomial_expand(alpha, c1, c2, m, kmax)
        k0 = (0,) * (m - 1)
        k1 = tuple(1 if i == m - 2 else 0 for i in range(m - 1))
        xm = MPoly.variable(m, m, CLIFFORD)
        x_em = _underline_x_em(m) - xm  # x*e_m = ux*e_m - x_m
        prefactor = HSeries(m, kmax, CLIFFORD,
                            {k0: MPoly.constant(m, 1, CLIFFORD), k1: x_em})
        series = prefactor * denom
        for k in range(kmax + 1):
            key = tuple(k if i == m - 2 else 0 for i in range(m - 1))
            if series.coefficient(key) != embedding_X(m, j, k):
                return False, f"k={k}: expansion differs from embedding factor"
        return True, None
    return run

def _check_plain_base_geometric(kind: str, sign: int, order: int = 12):
    def run(rng):
        if kind == "harm":
            from .scalars import make_gaussian
            p = MPoly(2, GAUSSIAN, {(1, 0): 1, (0, 1): make_gaussian(0, sign)})
            numerator_tail = MPoly(2, GAUSSIAN,
                                   {(1, 0): -1, (0, 1): make_gaussian(0, sign)})
            ring = GAUSSIAN
        else:
            p = MPoly(2, CLIFFORD, {(1, 0): Multivector.scalar(2, 1),
                                    (0, 1): Multivector.blade(2, 0b11, -1)})
            numerator_tail = MPoly(2, CLIFFORD,
                                   {(1, 0): Multivector.scalar(2, -1),
                                    (0, 1): Multivector.blade(2, 0b11, -1)})
            ring = CLIFFORD
        c1 = MPoly.variable(2, 1, ring).scale(-2)
        c2 = MPoly.variable(2, 1, ring) ** 2 + MPoly.variable(2, 2, ring) ** 2
        geom = binomial_expand(Fraction(-1), c1, c2, 2, order)
        numerator = HSeries(2, order, ring, {
            (0,): MPoly.constant(2, 1, ring),
            (1,): numerator_tail,
        })
        closed = numerator * geom
        if closed != power_series(p, order):
            return False, "rational closed form differs from geometric series"
        return True, None
    return run


# -- suite assembly ----------------------------------------------------------


def build_checks(suites, m_max: int, deg_max: int, order: int) -> list[Check]:
    checks: list[Check] = []
    want = set(suites)

    if "pde" in want:
        for m in range(2, min(5, m_max) + 1):
            for norm in (FACTORIAL, PLAIN):
                checks.append(Check("pde.harm_laplacian_zero",
                                    {"m": m, "deg_max": deg_max, "norm": norm},
                                    _check_harm_kernel(m, deg_max, norm)))
        for m in range(2, min(4, m_max) + 1):
            for norm in (FACTORIAL, PLAIN):
                deg = min(4, deg_max)
                checks.append(Check("pde.mon_dirac_zero",
                                    {"m": m, "deg_max": deg, "norm": norm},
                                    _check_mon_kernel(m, deg, norm)))
        checks.append(Check("pde.dirac_squared_is_laplacian",
                            {"m_max": min(4, m_max), "samples": 100},
                            _check_factorization(min(4, m_max), 100)))

    if "ortho" in want:
        for m in range(2, min(4, m_max) + 1):
            deg = min(4, deg_max)
            checks.append(Check("ortho.harm_pairwise",
                                {"m": m, "deg_max": deg, "norm": FACTORIAL},
                                _check_harm_orthogonality(m, deg, FACTORIAL)))
        for m in range(2, min(3, m_max) + 1):
            deg = min(3, deg_max)
            checks.append(Check("ortho.mon_pairwise",
                                {"m": m, "deg_max": deg, "norm": FACTORIAL},
                                _check_mon_orthogonality(m, deg, FACTORIAL)))

    if "extract" in want:
        for m in range(2, min(4, m_max) + 1):
            for norm in (FACTORIAL, PLAIN):
                n = min(order, 4)
                for sign in (+1, -1):
                    checks.append(Check("extract.harm_series_equals_basis",
                                        {"m": m, "order": n, "sign": sign, "norm": norm},
                                        _check_harm_extraction(m, n, sign, norm)))
                n_mon = min(order, 3)
                checks.append(Check("extract.mon_series_equals_basis",
                                    {"m": m, "order": n_mon, "norm": norm},
                                    _check_mon_extraction(m, n_mon, norm)))

    if "gf" in want:
        checks.append(Check("gf.gegenbauer_closed_vs_partial",
                            {"order": SERIES_ORDER, "tol": 1e-10},
                            _check_gegenbauer_gf_float()))
        for m in range(2, min(4, m_max) + 1):
            for norm in (FACTORIAL, PLAIN):
                checks.append(Check("gf.harm_closed_vs_series",
                                    {"m": m, "norm": norm, "points": NUM_POINTS},
                                    _check_harm_closed_vs_series(m, norm)))
                checks.append(Check("gf.mon_closed_vs_series",
                                    {"m": m, "norm": norm, "points": NUM_POINTS},
                                    _check_mon_closed_vs_series(m, norm)))
        for m in range(3, min(4, m_max) + 1):
            for norm in (FACTORIAL, PLAIN):
                checks.append(Check("gf.harm_recurrence_step",
                                    {"m": m, "norm": norm, "points": NUM_POINTS},
                                    _check_harm_recurrence_step(m, norm)))
        if m_max >= 3:
            for norm in (FACTORIAL, PLAIN):
                for sign in (+1, -1):
                    checks.append(Check("gf.harm_m3_closed_formula",
                                        {"sign": sign, "norm": norm},
                                        _check_harm_m3_formula(sign, norm)))
                checks.append(Check("gf.mon_m3_closed_formula", {"norm": norm},
                                    _check_mon_m3_formula(norm)))

    if "lemmas" in want:
        checks.append(Check("lemmas.gegenbauer_recurrence_vs_oracle",
                            {"k_max": 12}, _check_gegenbauer_recurrence_vs_oracle()))
        checks.append(Check("lemmas.gegenbauer_parity",
                            {"k_max": 12}, _check_gegenbauer_parity()))
        for m in (3, 4, 5):
            if m > max(m_max, 3):
                continue
            for j in range(4):
                checks.append(Check("lemmas.gf_f_embedding",
                                    {"m": m, "j": j, "k_max": 8},
                                    _check_lemma_gf_f(m, j)))
        for m in (3, 4):
            if m > max(m_max, 3):
                continue
            for j in range(4):
                checks.append(Check("lemmas.gf_x_embedding",
                                    {"m": m, "j": j, "k_max": 8},
                                    _check_lemma_gf_x(m, j)))
        for sign in (+1, -1):
            checks.append(Check("lemmas.plain_base_geometric",
                                {"kind": "harm", "sign": sign, "order": 12},
                                _check_plain_base_geometric("harm", sign)))
        checks.append(Check("lemmas.plain_base_geometric",
                            {"kind": "mon", "order": 12},
                            _check_plain_base_geometric("mon", +1)))

    return checks


def thread_count() -> int:
    raw = os.environ.get("GTBASIS_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_verify(suites=("all",), m_max: int = 4, deg_max: int = 4, order: int = 3,
               seed: int = 0, threads: int | None = None):
    """Run the selected suites; returns (report dict, suite timing dict)."""
    selected = list(SUITES) if "all" in suites else [s for s in SUITES if s in suites]
    unknown = set(suites) - set(SUITES) - {"all"}
    if unknown:
        raise ValueError(f"unknown suites: {sorted(unknown)}")
    checks = build_checks(selected, m_max, deg_max, order)
    threads = thread_count() if threads is None else max(1, threads)
    timings: dict = {}
    t0 = time.perf_counter()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda c: c.run(seed), checks))
    else:
        results = [check.run(seed) for check in checks]
    timings["total"] = time.perf_counter() - t0
    results.sort(key=lambda r: (r.name, json.dumps(r.params, sort_keys=True)))
    failures = [r for r in results if r.status != "pass"]
    report = {
        "seed": seed,
        "params": {"m_max": m_max, "deg_max": deg_max, "order": order,
                   "suites": selected},
        "checks": [r.to_json() for r in results],
        "counts": {"pass": len(results) - len(failures), "fail": len(failures)},
        "overall": "fail" if failures else "pass",
    }
    return report, timings
