"""The acceptance suite: every mechanically checkable claim, one function each.

Each check returns ``(passed, detail)``; :func:`verify_all` times them and
collects failures instead of stopping at the first.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, replace
from fractions import Fraction
from math import comb
from typing import Callable, List, Optional, Tuple

from .algebra import Convention, GradedAlgebra
from .arrangement import arrangement
from .chambers import enumerate_chambers
from .charpoly import (all_hyperplanes_char_poly, betti_numbers, chamber_count, char_poly_finite_field,
                       char_poly_nbc, count_all_hyperplanes_complement, nbc_counts)
from .equivariant import DirectQuotient, chamber_character, row_bound_report, total_character
from .fsop import (BettiModule, certify_generation, check_functoriality, enumerate_surjections,
                   minimal_generation_degree, tensor_generators)
from .genfun import (elementary_symmetric, fit_exp_poly, fq_betti, fq_hilbert_series, gaussian_binomial,
                     to_rational_function)
from .symmetric import inverse, partitions, representative
from .symmetric import compose as perm_compose

RESONANCE = "0,1"
THRESHOLD = "-1,1"
FULL = "-1,0,1"
CONVENTIONS = (Convention.OS, Convention.CORDOVIL)


@dataclass
class Limits:
    fq_q: Tuple[int, ...] = (2, 3, 5)
    fq_n: int = 8
    chi_n: int = 5
    chambers_resonance_n: int = 4
    chambers_threshold_n: int = 5
    moseley_n: int = 4
    rowbound_n: int = 5
    rowbound_i: int = 2
    fsgen_E: int = 5
    tensor_E: int = 4
    tensor_m: int = 2
    fit_n: int = 9
    oracle_hyperplanes: int = 7
    oracle_i: int = 2
    random_instances: int = 50
    random_E: int = 5
    seed: int = 20201

    @classmethod
    def tiny(cls) -> "Limits":
        return cls(fq_n=1, chi_n=1, chambers_resonance_n=1, chambers_threshold_n=1, moseley_n=1,
                   rowbound_n=1, fsgen_E=1, tensor_E=1, tensor_m=1, fit_n=6, oracle_hyperplanes=1,
                   random_instances=5, random_E=1)

    def capped(self, max_n: int) -> "Limits":
        """Every size limit capped at ``max_n``."""
        return replace(self, fq_n=min(self.fq_n, max_n), chi_n=min(self.chi_n, max_n),
                       chambers_resonance_n=min(self.chambers_resonance_n, max_n),
                       chambers_threshold_n=min(self.chambers_threshold_n, max_n),
                       moseley_n=min(self.moseley_n, max_n), rowbound_n=min(self.rowbound_n, max_n),
                       fsgen_E=min(self.fsgen_E, max_n), tensor_E=min(self.tensor_E, max_n),
                       random_E=min(self.random_E, max_n))


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.number:2d}. {self.name} ({self.seconds:.2f}s): {self.detail}"

    def to_json(self) -> dict:
        return {"criterion": self.number, "name": self.name, "passed": self.passed,
                "detail": self.detail, "seconds": round(self.seconds, 3)}


# ------------------------------------------------------------------ 1
def check_fq_closed_form(lim: Limits):
    checked = 0
    for q in lim.fq_q:
        for n in range(1, lim.fq_n + 1):
            chi = all_hyperplanes_char_poly(q, n)
            betti = betti_numbers(chi)
            for i in range(n + 1):
                e = elementary_symmetric([q ** j for j in range(n)], i)
                if not (fq_betti(q, n, i) == e == q ** comb(i, 2) * gaussian_binomial(n, i, q) == betti[i]):
                    return False, f"q={q} n={n} i={i}"
                checked += 1
        for i in range(lim.fq_n + 1):
            series = fq_hilbert_series(q, i, max(lim.fq_n, i))
            for n in range(max(i, 1), lim.fq_n + 1):
                if series[n] != fq_betti(q, n, i):
                    return False, f"series q={q} i={i} n={n}"
    # (t-1)(t-q)...(t-q^(n-1)) at t = q counts points off all F_q-hyperplanes
    for q, n in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)]:
        if n <= lim.fq_n and count_all_hyperplanes_complement(q, n) != all_hyperplanes_char_poly(q, n)(q):
            return False, f"point count q={q} n={n}"
    return True, f"{checked} (q,n,i) triples and series agree"


# ------------------------------------------------------------------ 2
def check_cross_oracle(lim: Limits):
    done = []
    for S in (RESONANCE, THRESHOLD, FULL):
        for n in range(1, lim.chi_n + 1):
            g = arrangement(S, n)
            a = char_poly_nbc(g)
            b = char_poly_finite_field(g)
            if a != b:
                return False, f"S={S} n={n}: nbc {a} vs finite field {b}"
            done.append(f"{S}:{n}")
    return True, f"{len(done)} arrangements agree"


# ------------------------------------------------------------------ 3
EXPECTED_RESONANCE_CHAMBERS = {1: 2, 2: 6, 3: 32, 4: 370}


def check_chambers(lim: Limits):
    rows = []
    for S, top in ((RESONANCE, lim.chambers_resonance_n), (THRESHOLD, lim.chambers_threshold_n)):
        for n in range(1, top + 1):
            g = arrangement(S, n)
            chi = char_poly_nbc(g)
            total = sum(betti_numbers(chi))
            zas = chamber_count(chi)
            bfs = len(enumerate_chambers(g))
            if not total == zas == bfs:
                return False, f"S={S} n={n}: sum b={total}, |chi(-1)|={zas}, bfs={bfs}"
            if S == RESONANCE and EXPECTED_RESONANCE_CHAMBERS.get(n, bfs) != bfs:
                return False, f"resonance n={n}: {bfs} chambers"
            rows.append(f"{S}:{n}={bfs}")
    return True, ", ".join(rows)


# ------------------------------------------------------------------ 4
def check_moseley(lim: Limits):
    rows = []
    for S in (RESONANCE, THRESHOLD):
        for n in range(1, lim.moseley_n + 1):
            g = arrangement(S, n)
            lhs = total_character(g, Convention.CORDOVIL)
            rhs = chamber_character(g)
            if lhs.values != rhs.values:
                return False, f"S={S} n={n}: {lhs.to_json()} vs {rhs.to_json()}"
            rows.append(f"{S}:{n}")
    return True, f"{len(rows)} arrangements, all cycle types equal"


# ------------------------------------------------------------------ 5
def check_row_bound(lim: Limits):
    pieces = 0
    for S in (RESONANCE, THRESHOLD):
        for n in range(1, lim.rowbound_n + 1):
            g = arrangement(S, n)
            for conv in CONVENTIONS:
                alg = GradedAlgebra(g, conv, max_degree=lim.rowbound_i)
                for i in range(min(lim.rowbound_i, n) + 1):
                    rep = row_bound_report(g, conv, i, alg)
                    if not rep.holds:
                        return False, f"S={S} n={n} {conv.value} i={i}: {rep.violators}"
                    pieces += 1
    return True, f"{pieces} graded pieces, zero violations"


# ------------------------------------------------------------------ 6
def check_generation(lim: Limits):
    rows = []
    for conv in CONVENTIONS:
        for i in (1, 2):
            module = BettiModule(RESONANCE, conv, i)
            bound = 2 ** i
            for e in range(1, lim.fsgen_E + 1):
                rep = certify_generation(RESONANCE, conv, i, e, bound, module)
                if not rep.generated:
                    return False, f"{conv.value} i={i} |E|={e}: deficit {rep.deficit}"
                m = minimal_generation_degree(RESONANCE, conv, i, e, module)
                if m > bound:
                    return False, f"{conv.value} i={i} |E|={e}: minimal degree {m} > {bound}"
                rows.append(m)
    return True, f"{len(rows)} cases generated; minimal degrees {rows}"


# ------------------------------------------------------------------ 7
def check_tensor_lemma(lim: Limits):
    count = 0
    for e in range(1, lim.tensor_E + 1):
        for m1 in range(1, lim.tensor_m + 1):
            for m2 in range(1, lim.tensor_m + 1):
                for cert in tensor_generators(m1, m2, e):
                    if not cert.verified or len(cert.image) > m1 * m2:
                        return False, f"E={e} m=({m1},{m2}) phi=({cert.phi1},{cert.phi2})"
                    count += 1
    return True, f"{count} certificates verified"


# ------------------------------------------------------------------ 8
def fit_b1(S: str, top: int):
    seq = [(n, nbc_counts(arrangement(S, n), max_size=1)[1]) for n in range(1, top + 1)]
    form = fit_exp_poly(seq, 2)
    return seq, form, to_rational_function(form, seq)


def check_generating_functions(lim: Limits):
    out, bad = [], []
    for S, expected in ((RESONANCE, {1: [-1], 2: [1]}), (THRESHOLD, {2: [Fraction(1, 2)]})):
        seq, form, rat = fit_b1(S, lim.fit_n)
        if form.coefficients != expected or not form.held_out_verified:
            return False, f"S={S}: fitted {form.to_json()}"
        if any(form.degree(j) > 0 for j in form.coefficients) or form.valid_from != 1:
            return False, f"S={S}: non-constant coefficients or late validity"
        if rat.series(len(seq) + 1)[1:] != [Fraction(v) for _, v in seq]:
            return False, f"S={S}: rational function does not reproduce the sequence"
        num, den = len(rat.numerator) - 1, len(rat.denominator) - 1
        out.append(f"{S}: c={form.to_json()['c']} deg num/den={num}/{den}")
        if not rat.proper:
            bad.append(f"S={S}: numerator degree {num} not below denominator degree {den}")
    if bad:
        return False, "; ".join(bad) + " (fits themselves verified: " + "; ".join(out) + ")"
    return True, "; ".join(out)


# ------------------------------------------------------------------ 9
ORACLE_FAMILIES = (RESONANCE, THRESHOLD, FULL, "1,2", "0,1,2")


def oracle_arrangements(max_hyperplanes: int):
    for S in ORACLE_FAMILIES:
        n = 1
        while True:
            g = arrangement(S, n)
            if len(g) > max_hyperplanes:
                break
            yield S, g
            n += 1


def check_algebra_oracle(lim: Limits):
    cases = 0
    for S, g in oracle_arrangements(lim.oracle_hyperplanes):
        for conv in CONVENTIONS:
            alg = GradedAlgebra(g, conv, max_degree=lim.oracle_i)
            for i in range(lim.oracle_i + 1):
                direct = DirectQuotient(alg, i)
                if direct.dimension != len(alg.nbc_basis(i)):
                    return False, f"S={S} n={g.n} {conv.value} i={i}: dims {direct.dimension} vs {len(alg.nbc_basis(i))}"
                for mu in partitions(g.n):
                    sigma = representative(mu)
                    if direct.trace(sigma) != alg.trace(sigma, i):
                        return False, f"S={S} n={g.n} {conv.value} i={i} mu={mu}: traces differ"
                cases += 1
    return True, f"{cases} (arrangement, convention, degree) cases agree"


# ----------------------------------------------------------------- 10
def _random_perm(rng, n):
    p = list(range(n))
    rng.shuffle(p)
    return tuple(p)


def check_functoriality_suites(lim: Limits):
    rng = random.Random(lim.seed)
    k = lim.random_instances
    modules = {}

    def module(S, conv, i):
        key = (S, conv, i)
        if key not in modules:
            modules[key] = BettiModule(S, conv, i)
        return modules[key]

    def random_setup():
        S = rng.choice((RESONANCE, THRESHOLD))
        conv = rng.choice(CONVENTIONS)
        return S, conv

    # contravariant composition
    for _ in range(k):
        S, conv = random_setup()
        i = rng.choice((1, 2))
        e = rng.randint(1, lim.random_E)
        f = rng.randint(1, e)
        g = rng.randint(1, f)
        phi = rng.choice(enumerate_surjections(e, f))
        psi = rng.choice(enumerate_surjections(f, g))
        if not check_functoriality(module(S, conv, i), phi, psi):
            return False, f"composition S={S} {conv.value} i={i} phi={phi} psi={psi}"

    # pullbacks are algebra maps on degree-1 pairs
    for _ in range(k):
        S, conv = random_setup()
        e = rng.randint(1, lim.random_E)
        f = rng.randint(1, e)
        phi = rng.choice(enumerate_surjections(e, f))
        mod1 = module(S, conv, 1)
        mod2 = module(S, conv, 2)
        src, tgt = mod2.algebra(e), mod2.algebra(f)
        m = len(tgt.ground)
        a, b = rng.randrange(m), rng.randrange(m)
        images = mod1.generator_images(phi)

        def pull(x):
            out = {}
            for (h,), c in x.terms.items():
                j, s = images[h]
                out[(j,)] = out.get((j,), 0) + c * (s if conv is Convention.CORDOVIL else 1)
            return src.element(out)

        xa, xb = tgt.generator(a), tgt.generator(b)
        prod_then_pull = _pull_straightened(mod2, phi, tgt.straighten(tgt.multiply(xa, xb)))
        pull_then_prod = src.straighten(src.multiply(pull(xa), pull(xb)))
        if prod_then_pull != pull_then_prod:
            return False, f"algebra map S={S} {conv.value} phi={phi} ({a},{b})"

    # group action: act(st) = act(s) act(t), and act respects products
    for _ in range(k):
        S, conv = random_setup()
        n = rng.randint(1, min(lim.random_E, 4))
        alg = module(S, conv, 2).algebra(n)
        sigma, tau = _random_perm(rng, n), _random_perm(rng, n)
        i = rng.randint(0, min(2, n))
        basis = alg.nbc_basis(i)
        if basis:
            x = alg.element({rng.choice(basis): 1})
            lhs = alg.act(perm_compose(sigma, tau), x)
            rhs = alg.act(sigma, alg.act(tau, x))
            if lhs != rhs:
                return False, f"group action S={S} {conv.value} n={n}"
        m = len(alg.ground)
        a, b = rng.randrange(m), rng.randrange(m)
        xa, xb = alg.generator(a), alg.generator(b)
        lhs = alg.act(sigma, alg.straighten(alg.multiply(xa, xb)))
        rhs = alg.straighten(alg.multiply(alg.act(sigma, xa), alg.act(sigma, xb)))
        if lhs != rhs:
            return False, f"action vs product S={S} {conv.value} n={n}"

    # characters are class functions
    for _ in range(k):
        S, conv = random_setup()
        n = rng.randint(1, min(lim.random_E, 4))
        alg = module(S, conv, 2).algebra(n)
        i = rng.randint(0, min(2, n))
        sigma = _random_perm(rng, n)
        tau = _random_perm(rng, n)
        conj = perm_compose(perm_compose(tau, sigma), inverse(tau))
        if alg.trace(sigma, i) != alg.trace(conj, i):
            return False, f"class function S={S} {conv.value} n={n} i={i}"

    return True, f"{4 * k} randomized instances"


def _pull_straightened(module: BettiModule, phi, elem):
    """Apply the pullback matrix of ``phi`` to a straightened element of the target."""
    tgt = module.algebra(max(phi) + 1)
    src = module.algebra(len(phi))
    basis = tgt.nbc_basis(module.degree)
    cols = module.pullback_columns(tuple(phi))
    out = {}
    for mono, c in elem.terms.items():
        for k, v in cols[basis.index(mono)].items():
            out[k] = out.get(k, 0) + c * v
    return src.element(out)


CRITERIA: List[Tuple[int, str, Callable]] = [
    (1, "F_q closed form", check_fq_closed_form),
    (2, "cross-oracle characteristic polynomial", check_cross_oracle),
    (3, "chamber consistency", check_chambers),
    (4, "Moseley identity", check_moseley),
    (5, "row bound", check_row_bound),
    (6, "finite generation", check_generation),
    (7, "tensor lemma", check_tensor_lemma),
    (8, "generating-function structure", check_generating_functions),
    (9, "algebra oracle", check_algebra_oracle),
    (10, "functoriality and action suites", check_functoriality_suites),
]


def run_criterion(number: int, limits: Optional[Limits] = None) -> CriterionResult:
    limits = limits or Limits()
    _, name, fn = next(c for c in CRITERIA if c[0] == number)
    start = time.perf_counter()
    try:
        passed, detail = fn(limits)
    except Exception as exc:  # collected, not fail-fast
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    return CriterionResult(number, name, passed, detail, time.perf_counter() - start)


def verify_all(limits: Optional[Limits] = None, store=None, echo=None) -> List[CriterionResult]:
    results = []
    for number, _, _ in CRITERIA:
        res = run_criterion(number, limits)
        results.append(res)
        if echo:
            echo(res.line())
    if store is not None:
        start = time.perf_counter()
        problems = store.verify()
        detail = "; ".join(str(p) for p in problems) if problems else "no conflicting records"
        res = CriterionResult(11, "store consistency", not problems, detail, time.perf_counter() - start)
        results.append(res)
        if echo:
            echo(res.line())
    return results
