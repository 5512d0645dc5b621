"""Suite runner and machine-readable reports.

A suite is a list of named checks; each check returns (verdict, witness).
Records carry {check_id, params, verdict, witness, ms}; the JSON report is
deterministic apart from the timing fields.  Checks are pure and independent,
so they can be dispatched to worker processes (--jobs) without coordination.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import a22, a4, arithmetic, certify, forms, identities, partitions, sequences, series
from .pbw import UEAElement, uea_mul
from .polynomial import GradedPolynomial, binomial_poly, specialize_b, specialize_dp
from .sequences import CPOW2, HALF_ONE, HALF_ONE2, ONE, one_m
from .series import expand_hat_series, named_series

SUITES = ("commutative", "bases", "criteria", "lie22", "lie4", "uea22", "uea4")


@dataclass
class RunConfig:
    max_degree: int = 12
    uea_truncation: int = 4
    lie_window: int = 3
    suites: tuple[str, ...] = SUITES
    output: str | None = None
    jobs: int = 1

    def validate(self):
        if self.max_degree < 1 or self.uea_truncation < 1 or self.lie_window < 1:
            raise ValueError("bounds must be positive")
        for s in self.suites:
            if s not in SUITES:
                raise ValueError(f"unknown suite {s!r}")


@dataclass
class CheckRecord:
    check_id: str
    params: dict
    verdict: str  # PASS / FAIL / SKIPPED(reason)
    witness: str | None
    ms: float

    def to_json(self) -> dict:
        return {
            "check_id": self.check_id,
            "params": self.params,
            "verdict": self.verdict,
            "witness": self.witness,
            "ms": round(self.ms, 3),
        }


@dataclass
class Report:
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def failed(self) -> list[CheckRecord]:
        return [r for r in self.records if r.verdict == "FAIL"]

    @property
    def passed(self) -> bool:
        return not self.failed

    def to_json(self) -> dict:
        records = sorted(self.records, key=lambda r: (r.check_id, repr(sorted(r.params.items()))))
        return {
            "checks": [r.to_json() for r in records],
            "summary": {
                "total": len(self.records),
                "pass": sum(1 for r in self.records if r.verdict == "PASS"),
                "fail": len(self.failed),
                "skipped": sum(1 for r in self.records if r.verdict.startswith("SKIPPED")),
            },
        }

    def render(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


def _run(report: Report, check_id: str, params: dict, fn):
    t0 = time.perf_counter()
    try:
        ok, witness = fn()
        verdict = "PASS" if ok else "FAIL"
    except Exception as exc:  # a crashed check is a failure with the error as witness
        verdict, witness = "FAIL", f"exception: {exc}"
    report.records.append(
        CheckRecord(check_id, params, verdict, None if witness is None else str(witness),
                    (time.perf_counter() - t0) * 1000)
    )


# ---------------------------------------------------------------------------

def suite_commutative(cfg: RunConfig) -> Report:
    rep = Report()
    n = cfg.max_degree
    for name in series.COMM_IDENTITIES:
        bound = n // 2 if name == "HATBAR_CONVOLUTION" else n
        _run(rep, f"commutative/identity/{name}", {"n": bound},
             lambda name=name, bound=bound: _verdict(series.verify_comm_identity(name, bound)))
    for label, spec in (("ONE", ONE), ("HALF_ONE", HALF_ONE), ("HALF_ONE2", HALF_ONE2),
                        ("CPOW2", CPOW2), ("ONE_M(2)", one_m(2)), ("ONE_M(3)", one_m(3))):
        _run(rep, "commutative/homogeneity", {"seq": label},
             lambda spec=spec: (series.homogeneity_check(expand_hat_series(spec, n)), None))
    _run(rep, "commutative/grouplike_product", {"n": n}, lambda: (_grouplike_product(n), None))
    _run(rep, "commutative/lambda_functorial", {"n": min(n, 8)},
         lambda: (_lambda_functorial(min(n, 8)), None))
    _run(rep, "commutative/lambda_shift_of_family", {"m": (2, 3), "n": n},
         lambda: (_lambda_family(n), None))
    _run(rep, "commutative/specialize_binomial", {"r": 10}, lambda: (_specialize_checks(10), None))
    _run(rep, "commutative/bar_parity", {"n": n},
         lambda: (all(not named_series("BAR", n)[k] for k in range(1, n + 1, 2)), None))
    return rep


def _verdict(v) -> tuple[bool, str | None]:
    ok = bool(v)
    detail = getattr(v, "detail", None) or getattr(v, "mismatch", None)
    return ok, None if ok else str(detail)


def _grouplike_product(n: int) -> bool:
    lhs = expand_hat_series(ONE, n).mul(expand_hat_series(HALF_ONE, n))
    rhs = expand_hat_series(sequences.table([Fraction(3, 2)] * n), n)
    return lhs == rhs


def _lambda_functorial(n: int) -> bool:
    for d in range(n + 1):
        for b in forms.enumerate_basis("MONOMIAL", d):
            if b.poly.lambda_shift(2).lambda_shift(3) != b.poly.lambda_shift(6):
                return False
    return True


def _lambda_family(n: int) -> bool:
    # the index-m family is the index shift of the base family in u^m;
    # for odd m the same identity holds verbatim at negated variable
    for m in (2, 3):
        fam = expand_hat_series(one_m(m), n)
        base = expand_hat_series(ONE, n // m)
        for k in range(n + 1):
            want = base[k // m].lambda_shift(m) if k % m == 0 else GradedPolynomial.zero()
            if fam[k] != want:
                return False
        if m % 2 == 1:
            for k in range(0, n + 1, m):
                lhs = fam[k].scale(-1 if k % 2 else 1)
                rhs = base[k // m].lambda_shift(m).scale(-1 if (k // m) % 2 else 1)
                if lhs != rhs:
                    return False
    return True


def _specialize_checks(rmax: int) -> bool:
    hat = expand_hat_series(ONE, rmax)
    for r in range(rmax + 1):
        if specialize_b(hat[r]) != binomial_poly(r):
            return False
        dp = specialize_dp(hat[r])
        want = [Fraction(0)] * r + [Fraction(1, __import__("math").factorial(r))]
        if dp.coeffs != ([] if r == 0 else want) and not (r == 0 and dp.coeffs == [Fraction(1)]):
            return False
    return True


def suite_bases(cfg: RunConfig) -> Report:
    rep = Report()
    n = cfg.max_degree
    for kind in forms.BASIS_KINDS:
        _run(rep, "bases/cardinality_and_rank", {"kind": kind, "d": n},
             lambda kind=kind: (_cardinality_rank(kind, n), None))
    _run(rep, "bases/euler", {"d": 20},
         lambda: (all(partitions.euler_count(d)[0] == partitions.euler_count(d)[1]
                      for d in range(21)), None))
    _run(rep, "bases/partition_oracle_agree", {"d": n},
         lambda: (all(partitions.partition_count(d) == partitions.partition_count_recurrence(d)
                      for d in range(n + 1)), None))
    _run(rep, "bases/mixed_degree2_lattice", {}, lambda: (_notpol_witness(), None))
    _run(rep, "bases/inclusion_chain", {"d": 8}, lambda: (_inclusion_chain(8), None))
    for form in forms.FORM_KINDS:
        _run(rep, "bases/closure", {"form": form, "d": min(8, n)},
             lambda form=form: _verdict(forms.closure_check(form, min(8, n))))
    _run(rep, "bases/lambda_stability", {"mk": n}, lambda: (_lambda_stability(n), None))
    _run(rep, "bases/membership_basis_independent", {"trials": 100, "max_degree": 8},
         lambda: (_membership_battery(100, 8), None))
    return rep


def _cardinality_rank(kind: str, n: int) -> bool:
    for d in range(n + 1):
        want = partitions.partition_count(d)
        if len(forms.enumerate_basis(kind, d)) != want:
            return False
        if forms.basis_rank(kind, d) != want:
            return False
    return True


def _notpol_witness() -> bool:
    h1, h2 = GradedPolynomial.gen(1), GradedPolynomial.gen(2)
    half = Fraction(1, 2)
    mixed2 = forms.form_lattice("MIXED", 2)
    target = forms.lattice_at_degree([(h1 * h1).scale(half), h2.scale(half)], 2)
    if mixed2 != target:
        return False
    coords = mixed2.coordinates_of(h1 * h1)
    if coords is None:
        return False
    return all(c.denominator == 1 and c % 2 == 0 for c in coords)


def _inclusion_chain(dmax: int) -> bool:
    for d in range(1, dmax + 1):
        sym = forms.form_lattice("SYMMETRIC", d)
        mix = forms.form_lattice("MIXED", d)
        half = forms.form_lattice("HALF", d)
        if not (mix.contains(sym) and half.contains(mix)):
            return False
    bar2 = expand_hat_series(HALF_ONE2, 2)[2]
    check1 = expand_hat_series(HALF_ONE, 1)[1]
    strict1 = forms.membership(bar2, "MIXED").member and not forms.membership(bar2, "SYMMETRIC").member
    strict2 = forms.membership(check1, "HALF").member and not forms.membership(check1, "MIXED").member
    return strict1 and strict2


def _lambda_stability(n: int) -> bool:
    hat = expand_hat_series(ONE, n)
    for m in range(1, n + 1):
        for k in range(1, n // m + 1):
            if not forms.membership(hat[k].lambda_shift(m), "SYMMETRIC"):
                return False
    return True


def _membership_battery(trials: int, dmax: int) -> bool:
    rng = random.Random(20240817)
    for _ in range(trials):
        d = rng.randint(1, dmax)
        poly = GradedPolynomial.zero()
        for lam in partitions.partitions_of(d):
            if rng.random() < 0.4:
                poly = poly + GradedPolynomial.monomial(
                    lam, Fraction(rng.randint(-4, 4), rng.choice([1, 1, 2, 2, 3, 4]))
                )
        via_qp = forms.membership(poly, "MIXED").member
        via_lam = forms.coordinates(poly, "LAMBDA_MIXED").is_integral()
        if via_qp != via_lam:
            return False
    return True


def suite_criteria(cfg: RunConfig) -> Report:
    rep = Report()
    specs = [("ONE", ONE), ("ONE_M(2)", one_m(2)), ("ONE_M(3)", one_m(3)),
             ("HALF_ONE", HALF_ONE), ("HALF_ONE2", HALF_ONE2), ("CPOW2", CPOW2)]
    for label, spec in specs:
        _run(rep, "criteria/cross_validate", {"seq": label, "n": 10},
             lambda spec=spec: _cross(spec))
    _run(rep, "criteria/gauss_witness", {"seq": "HALF_ONE2"},
         lambda: (arithmetic.check_gauss_congruences(HALF_ONE2, 10).witness == (1, 2, 1), None))
    _run(rep, "criteria/gauss_witness", {"seq": "CPOW2"},
         lambda: (arithmetic.check_gauss_congruences(CPOW2, 10).witness == (1, 2, 1), None))
    _run(rep, "criteria/mobius_inversion", {"n": 50}, lambda: (_mobius_inversion(50), None))
    _run(rep, "criteria/doubling_divisibility", {"n": 100}, lambda: (_doubling_divisibility(100), None))
    _run(rep, "criteria/prime_power_doubling", {"bound": 6}, lambda: (_prime_power_doubling(6), None))
    _run(rep, "criteria/mix_criterion_integral", {"seq": "CPOW2", "bound": 20},
         lambda: _verdict(arithmetic.mix_criterion(CPOW2, 20)))
    return rep


def _cross(spec) -> tuple[bool, str | None]:
    report = arithmetic.cross_validate(spec, 10)
    return report.consistent, None if report.consistent else str(report.disagreements[:3])


def _mobius_inversion(n: int) -> bool:
    rng = random.Random(7)
    tab = sequences.table([rng.randint(-9, 9) for _ in range(n)])
    summed = sequences.table(
        [sum(tab.value(d) for d in arithmetic.divisors(k)) for k in range(1, n + 1)]
    )
    return all(arithmetic.mobius_convolve(summed, k) == tab.value(k) for k in range(1, n + 1))


def _doubling_divisibility(n: int) -> bool:
    # the divisibility the doubled-power integrality theorem rests on:
    # odd r divides (mu * c)(r), and r divides 2 (mu * c)(r) for even r
    for r in range(1, n + 1):
        conv = arithmetic.mobius_convolve(CPOW2, r)
        q = conv / r if r % 2 else 2 * conv / r
        if q.denominator != 1:
            return False
    return True


def _prime_power_doubling(bound: int) -> bool:
    f = sequences.table([Fraction(2) ** k for k in range(1, 2 ** bound + 1)])
    mu = sequences.table([arithmetic.mobius(j) for j in range(1, 2 ** bound + 1)])
    for p in (2, 3, 5):
        a = 1
        while p ** a <= 2 ** bound:
            want = Fraction(2) ** (p ** a) - Fraction(2) ** (p ** (a - 1))
            if arithmetic.convolve(f, mu, p ** a) != want:
                return False
            a += 1
    return True


def suite_lie22(cfg: RunConfig) -> Report:
    rep = Report()
    w = cfg.lie_window
    _run(rep, "lie22/jacobi_exhaust", {"window": w}, lambda: _verdict(a22.jacobi_exhaust(w)))
    for name in a22.MORPHISMS:
        _run(rep, "lie22/morphism", {"name": name, "window": w},
             lambda name=name: _verdict(a22.check_morphism(name, w)))
    _run(rep, "lie22/morphism_involutions", {"window": w}, lambda: (_involutions(w), None))
    _run(rep, "lie22/bracket_values", {}, lambda: (_bracket_values(), None))
    _run(rep, "lie22/tau_terminates", {"window": w}, lambda: (_tau_terminates(w), None))
    return rep


def _involutions(w: int) -> bool:
    for idx in a22.basis_window(w):
        el = a22.LieElement.basis(idx)
        if a22.morphism("T", a22.morphism("T_INV", el)) != el:
            return False
        if a22.morphism("SIGMA", a22.morphism("SIGMA", el)) != el:
            return False
        if a22.morphism("OMEGA", a22.morphism("OMEGA", el)) != el:
            return False
    return True


def _bracket_values() -> bool:
    el = a22.LieElement
    checks = [
        (a22.bracket_indices(a22.h(1), a22.h(-1)), el({a22.C: 6})),
        (a22.bracket_indices(a22.x(1, 0), a22.x(-1, 0)), el({a22.h(0): 1})),
        (a22.bracket_indices(a22.x(1, 1), a22.x(1, 0)), el({a22.xx(1, 1): 1})),
        (a22.bracket_indices(a22.x(1, 0), a22.x(1, 2)), el.zero()),
    ]
    return all(got == want for got, want in checks)


def _tau_terminates(w: int) -> bool:
    for idx in a22.basis_window(w):
        a22.tau(a22.LieElement.basis(idx))
    return True


def suite_lie4(cfg: RunConfig) -> Report:
    rep = Report()
    w = cfg.lie_window
    _run(rep, "lie4/realization_gate", {"window": w}, lambda: _verdict(a4.realization_gate(w)))
    _run(rep, "lie4/relations", {"window": w}, lambda: _verdict(a4.verify_relations(w)))
    _run(rep, "lie4/technical_identities", {"window": w},
         lambda: _verdict(a4.verify_technical_identities(w)))
    _run(rep, "lie4/tau_formulas", {"window": w}, lambda: _verdict(a4.verify_tau_formulas(w)))
    _run(rep, "lie4/root_vector_weights", {"window": w},
         lambda: _verdict(a4.check_root_vector_weights(w)))
    for which in ("PSI_BAR", "PSI_TILDE"):
        _run(rep, "lie4/embedding", {"which": which, "window": min(w, 3)},
             lambda which=which: _verdict(a4.check_embedding(which, min(w, 3))))
    _run(rep, "lie4/roots", {}, lambda: (_roots_checks(), None))
    return rep


def _roots_checks() -> bool:
    from . import roots

    s_roots, m_roots = roots.finite_positive_roots(2)
    if {r.finite for r in s_roots} != {(1, 0), (0, 1), (1, 1)}:
        return False
    if {r.finite for r in m_roots} != {(2, 1)}:
        return False
    a1 = roots.AffineRoot((1, 0))
    if roots.weyl_reflect(2, a1, 2).finite != (1, 1):
        return False
    for n in (1, 2, 3, 4):
        if len(roots.finite_positive_roots(n)[0]) + len(roots.finite_positive_roots(n)[1]) != n * n:
            return False
        for root in roots.enumerate_roots(n, 1):
            for i in range(1, n + 1):
                if roots.weyl_reflect(i, roots.weyl_reflect(i, root, n), n) != root:
                    return False
    return True


def suite_uea22(cfg: RunConfig) -> Report:
    rep = Report()
    ids = (identities.SPEC_GROUPS["one_sided_operator_forms"]
           + identities.SPEC_GROUPS["central_binomial_cross"]
           + identities.SPEC_GROUPS["exponential_pairs_rank1"]
           + identities.SPEC_GROUPS["dblroot_binomial"])
    for identity in ids:
        _run(rep, f"uea22/identity/{identity}", {},
             lambda identity=identity: _identity_all(identity))
    _run(rep, "uea22/associativity", {"trials": 50}, lambda: (_associativity("a22", 50), None))
    _run(rep, "uea22/confluence", {"trials": 50}, lambda: (_confluence(50), None))
    _run(rep, "uea22/imaginary_integrality", {},
         lambda: (all(ok for _, ok in certify.imaginary_integrality(CPOW2, "MIXED", 8)), None))
    _run(rep, "uea22/mixed_generator_lattice", {"d": 6},
         lambda: (certify.mixed_generator_lattice_check(6), None))
    return rep


def suite_uea4(cfg: RunConfig) -> Report:
    rep = Report()
    ids = (identities.SPEC_GROUPS["exponential_pairs_rank2"]
           + identities.SPEC_GROUPS["cross_node"]
           + identities.SPEC_GROUPS["node_series"]
           + identities.SPEC_GROUPS["cartan_binomial"])
    for identity in ids:
        _run(rep, f"uea4/identity/{identity}", {},
             lambda identity=identity: _identity_all(identity))
    _run(rep, "uea4/associativity", {"trials": 30}, lambda: (_associativity("a4", 30), None))
    _run(rep, "uea4/certificates", {"kmax": 2},
         lambda: (all(bool(c) for c in certify.certify_all(2)), None))
    return rep


def _identity_all(identity: str) -> tuple[bool, str | None]:
    results = identities.run_identity(identity)
    bad = [r for r in results if not r]
    if bad:
        return False, f"{bad[0].params}: {bad[0].mismatch}"
    return True, None


def _random_uea_element(algebra: str, rng: random.Random, window: int = 2) -> UEAElement:
    if algebra == "a22":
        pool = a22.basis_window(window)
        gen = lambda idx: UEAElement.generator("a22", idx)
    else:
        pool = a4.basis_window(1)
        gen = lambda idx: UEAElement.generator("a4", idx)
    out = UEAElement.zero(algebra)
    for _ in range(rng.randint(1, 3)):
        word = UEAElement.one(algebra)
        for _ in range(rng.randint(1, 2)):
            word = uea_mul(word, gen(rng.choice(pool)))
        out = out + word.scale(Fraction(rng.randint(-3, 3), rng.choice([1, 2])))
    return out


def _associativity(algebra: str, trials: int) -> bool:
    rng = random.Random(99 if algebra == "a22" else 101)
    for _ in range(trials):
        a = _random_uea_element(algebra, rng)
        b = _random_uea_element(algebra, rng)
        c = _random_uea_element(algebra, rng)
        if uea_mul(uea_mul(a, b), c) != uea_mul(a, uea_mul(b, c)):
            return False
    return True


def _confluence(trials: int) -> bool:
    """Straightening result independent of the grouping of the factors."""
    rng = random.Random(4242)
    pool = a22.basis_window(2)
    for _ in range(trials):
        word = [rng.choice(pool) for _ in range(rng.randint(2, 5))]
        left = UEAElement.one("a22")
        for idx in word:
            left = uea_mul(left, UEAElement.generator("a22", idx))
        right = UEAElement.one("a22")
        for idx in reversed(word):
            right = uea_mul(UEAElement.generator("a22", idx), right)
        if left != right:
            return False
    return True


_SUITE_FNS = {
    "commutative": suite_commutative,
    "bases": suite_bases,
    "criteria": suite_criteria,
    "lie22": suite_lie22,
    "lie4": suite_lie4,
    "uea22": suite_uea22,
    "uea4": suite_uea4,
}


def _run_suite_job(args) -> list[CheckRecord]:
    name, cfg = args
    return _SUITE_FNS[name](cfg).records


def run_suites(cfg: RunConfig) -> Report:
    cfg.validate()
    report = Report()
    if cfg.jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(cfg.jobs) as pool:
            for records in pool.map(_run_suite_job, [(s, cfg) for s in cfg.suites]):
                report.records.extend(records)
    else:
        for s in cfg.suites:
            report.records.extend(_SUITE_FNS[s](cfg).records)
    return report
