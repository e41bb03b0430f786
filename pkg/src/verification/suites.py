"""
Identity verification suites, one per module.

Exact identities are compared with zero tolerance; numeric ones against the
configured tolerance or an explicit certified bound.
"""
from __future__ import annotations

import logging
import math
from typing import Callable, Dict, List

from src.analytics.appell import (
    AppellSeries,
    TaylorSeries,
    appell_polynomial,
    appell_values,
    gck_divide,
    gck_extend,
    gck_inverse,
    gck_product,
    gck_restrict,
    materialize,
    slice_extend,
    t_coefficient,
)
from src.analytics.elementary import (
    ElementaryKind,
    bound_check,
    derivative_identity_check,
    eval_elementary,
    monogenic_truncation_check,
    parity_identity_check,
    pythagorean_check,
    restriction_check,
)
from src.analytics.fueter import (
    WeightKind,
    builtin_weights,
    classify_domain,
    diagram_check,
    fueter_sce_brute,
    fueter_sce_monomial,
    fueter_sce_preimage,
    fueter_sce_series,
    gamma,
    kernel_membership,
    range_norm_identity,
    taylor_norm_sq,
    transport_weights,
)
from src.analytics.polyanalytic import (
    PolySliceFunction,
    appell_like_check,
    axial_compose,
    c_map,
    c_map_brute,
    c_map_monomial,
    poly_project,
    polyanalytic_check,
    relation_check,
    tau_brute,
    tau_map,
    tau_map_monomial,
    tau_series,
    v_numeric_residual,
)
from src.analytics.rkhs import (
    CoefficientFunction,
    SpaceConfig,
    SpaceKind,
    adjoint_check,
    annihilation,
    commutator_check,
    containment_check,
    divergence_witness,
    inner_product,
    kernel_eval_certified,
    kernel_symmetry_check,
    pointwise_bound_check,
    reproducing_check,
    shift_identity_check,
)
from src.analytics.sampling import CliffordSampler
from src.core.multivector import (
    Multivector,
    clifford_conjugate,
    geometric_product,
    grade_projection,
    multivector_inverse,
    norm,
    norm_sq,
    real_part,
)
from src.core.polynomial import (
    CliffordPolynomial,
    conj_derivative,
    conj_paravector_power,
    dirac,
    evaluate,
    laplacian,
    paravector_power,
    partial_derivative,
    poly_mul,
    poly_power,
    poly_scale,
    polynomial_from_json,
    polynomial_to_json,
    restrict_real,
    slice_cr_residual,
)
from src.verification.report import CaseRecorder, VerificationReport
from src.verification.run_config import SUITE_NAMES, RunConfig

logger = logging.getLogger(__name__)


def _heavy_trials(config: RunConfig) -> int:
    """Trial count for checks that materialize large polynomials."""
    return max(1, config.trials // 4)


def verify_algebra(config: RunConfig) -> VerificationReport:
    n = config.n
    sampler = CliffordSampler(config.seed)
    e1 = Multivector.blade(n, [1])
    one = Multivector.scalar(n, 1)

    with CaseRecorder("algebra") as rec:
        rec.check("generator-square", geometric_product(e1, e1) == -1)
        rec.check("conjugate-pair", geometric_product(one + e1, one - e1) == 2)

        for _ in range(config.count("products")):
            a, b, c = (sampler.multivector(n) for _ in range(3))
            rec.check(
                "associativity",
                geometric_product(geometric_product(a, b), c) == geometric_product(a, geometric_product(b, c)),
                {"a": a, "b": b, "c": c},
            )
            rec.check(
                "conjugate-anti-automorphism",
                clifford_conjugate(geometric_product(a, b))
                == geometric_product(clifford_conjugate(b), clifford_conjugate(a)),
                {"a": a, "b": b},
            )
            rec.check("conjugate-norm", real_part(geometric_product(clifford_conjugate(a), a)) == norm_sq(a), {"a": a})
            bound = 2 ** (n / 2) * norm(a) * norm(b)
            rec.check("submultiplicative", norm(geometric_product(a, b)) <= bound * (1 + 1e-12), {"a": a, "b": b})
            pieces = Multivector.zero(n)
            for k in range(n + 1):
                pieces = pieces + grade_projection(a, k)
            rec.check("grade-partition", pieces == a, {"a": a})

            x = sampler.paravector(n)
            modulus = geometric_product(x, clifford_conjugate(x))
            rec.check("paravector-modulus", modulus.is_scalar and modulus == norm_sq(x), {"x": x})
            rec.check("paravector-inverse", geometric_product(x, multivector_inverse(x)) == 1, {"x": x})

        variable = CliffordPolynomial.zero(n)
        for i in range(n + 1):
            unit = Multivector.scalar(n, 1) if i == 0 else Multivector.blade(n, [i])
            variable = variable + poly_mul(CliffordPolynomial.variable(n, i), CliffordPolynomial.constant(n, unit))
        for k in range(min(config.max_k, 5) + 1):
            rec.check("paravector-power", paravector_power(n, k) == poly_power(variable, k), {"k": k})
            rec.check("restrict-power", restrict_real(paravector_power(n, k)) == CliffordPolynomial.x0_power(n, k))

        for _ in range(config.trials):
            p = sampler.polynomial(n, 4)
            q = sampler.polynomial(n, 3)
            rec.check(
                "mixed-partials",
                partial_derivative(partial_derivative(p, 0), n) == partial_derivative(partial_derivative(p, n), 0),
                {"p": p},
            )
            rec.check("dirac-factorization", dirac(conj_derivative(p)) == laplacian(p), {"p": p})
            rec.check("json-round-trip", polynomial_from_json(polynomial_to_json(p)) == p, {"p": p})

            point = sampler.point(n, 1.5)
            product = evaluate(poly_mul(p, q), point)
            expected = geometric_product(evaluate(p, point), evaluate(q, point))
            scale = max(1.0, expected.max_abs())
            rec.residual("evaluation-leibniz", (product - expected).max_abs() / scale, 1e-10, {"point": point})

        grid = [(0.3, 0.5), (-0.7, 0.2), (0.1, -0.9), (1.2, 0.4)]
        for _ in range(_heavy_trials(config)):
            f = sampler.taylor_series(n, 5)
            unit = sampler.unit_vector(n)
            residual = slice_cr_residual(slice_extend(f), unit, grid)
            rec.residual("slice-cauchy-riemann", residual, 1e-10, {"f": f, "unit": unit})
    return rec.report


def verify_appell(config: RunConfig) -> VerificationReport:
    n = config.n
    sampler = CliffordSampler(config.seed)

    with CaseRecorder("appell") as rec:
        for k in range(config.max_k + 1):
            p_k = appell_polynomial(n, k)
            rec.check("t-sum", sum(t_coefficient(n, k, s) for s in range(k + 1)) == 1, {"k": k})
            rec.check("monogenic", dirac(p_k).is_zero, {"k": k})
            rec.check("restriction", restrict_real(p_k) == CliffordPolynomial.x0_power(n, k), {"k": k})
            expected = poly_scale(appell_polynomial(n, k - 1), 2 * k) if k else CliffordPolynomial.zero(n)
            rec.check("appell-property", conj_derivative(p_k) == expected, {"k": k})

        for k in range(min(config.max_k, 4) + 1):
            direct = CliffordPolynomial.zero(n)
            for s in range(k + 1):
                term = poly_mul(paravector_power(n, k - s), conj_paravector_power(n, s))
                direct = direct + poly_scale(term, t_coefficient(n, k, s))
            rec.check("axial-expansion", direct == appell_polynomial(n, k), {"k": k})
            if n == 1:
                rec.check("complex-degeneracy", appell_polynomial(1, k) == paravector_power(1, k), {"k": k})

        for _ in range(config.trials):
            point = sampler.point(n, 1.5)
            values = appell_values(n, point, config.max_k)
            radius = math.sqrt(sum(c * c for c in point))
            for k in sorted({0, min(1, config.max_k), config.max_k // 2, config.max_k}):
                exact_route = evaluate(appell_polynomial(n, k), point)
                scale = max(1.0, radius ** k)
                residual = (values[k] - exact_route).max_abs() / scale
                rec.residual("fast-evaluation", residual, 1e-10, {"k": k, "point": point})
                rec.check("modulus-bound", norm(values[k]) <= radius ** k * (1 + 1e-12) + 1e-15, {"k": k})

        for a in range(9):
            for b in range(9):
                product = gck_product(AppellSeries.monomial(n, a), AppellSeries.monomial(n, b), a + b)
                rec.check("product-semigroup", product == AppellSeries.monomial(n, a + b), {"a": a, "b": b})

        order = min(config.truncation, 12)
        for _ in range(config.trials):
            a, b, c = (sampler.appell_series(n, 4) for _ in range(3))
            left = gck_product(gck_product(a, b, order), c, order)
            right = gck_product(a, gck_product(b, c, order), order)
            rec.check("product-associative", left == right, {"a": a, "b": b, "c": c})

            head = AppellSeries(n, (sampler.paravector(n),) + sampler.appell_series(n, 5).coeffs[1:])
            inverse = gck_inverse(head, order)
            rec.check(
                "inverse",
                gck_product(head, inverse, order) == AppellSeries.monomial(n, 0),
                {"series": head, "order": order},
            )
            f0 = sampler.taylor_series(n, 6)
            rec.check("restrict-extend", gck_restrict(gck_extend(f0)) == f0, {"f": f0})
            rec.check("restrict-slice", restrict_real(slice_extend(f0)) == restrict_real(materialize(gck_extend(f0))))

        for _ in range(_heavy_trials(config)):
            f0 = sampler.taylor_series(n, 6)
            rec.check("extension-monogenic", dirac(materialize(gck_extend(f0))).is_zero, {"f": f0})

        p1 = AppellSeries.monomial(n, 1)
        for k in range(1, config.max_k + 1):
            quotient = gck_divide(AppellSeries.monomial(n, k), p1)
            rec.check("divide-by-p1", quotient == AppellSeries.monomial(n, k - 1), {"k": k})
    return rec.report


def verify_fueter(config: RunConfig) -> VerificationReport:
    n = config.n
    sampler = CliffordSampler(config.seed)
    builtins = [builtin_weights(kind) for kind in WeightKind if kind is not WeightKind.CUSTOM]

    with CaseRecorder("fueter") as rec:
        for j in range(config.max_degree + 1):
            rec.check("closed-form", fueter_sce_monomial(n, j) == fueter_sce_brute(n, j), {"j": j})
            series = fueter_sce_series(n, TaylorSeries.monomial(n, j))
            rec.check("series-monomial", materialize(series) == fueter_sce_monomial(n, j), {"j": j})
            rec.check("kernel-sweep", kernel_membership(n, TaylorSeries.monomial(n, j)) == (j <= n - 2), {"j": j})
            if n == 3 and j >= 2:
                expected = poly_scale(appell_polynomial(3, j - 2), -2 * j * (j - 1))
                rec.check("quaternionic-regression", fueter_sce_brute(3, j) == expected, {"j": j})

        for _ in range(config.count("diagram", _heavy_trials(config))):
            f = sampler.taylor_series(n, config.max_degree)
            rec.check("diagram", diagram_check(n, f), {"f": f})

        for _ in range(config.count("range")):
            f = sampler.taylor_series(n, config.max_degree + 2)
            for c in builtins:
                lhs, rhs = range_norm_identity(n, c, f)
                rec.check("range-identity", lhs == rhs, {"space": c.name, "f": f}, f"{lhs} != {rhs}")

            tail = TaylorSeries(n, tuple([0] * (n - 1)) + f.coeffs[n - 1:])
            lhs, _ = range_norm_identity(n, builtins[0], tail)
            rec.check("isometry", lhs == gamma(n) ** 2 * taylor_norm_sq(builtins[0], tail), {"f": tail})

            g = sampler.appell_series(n, 6)
            rec.check("surjectivity", fueter_sce_series(n, fueter_sce_preimage(n, g)) == g, {"g": g})

        for c in builtins:
            b = transport_weights(n, c)
            expected = "whole_space" if c.kind is WeightKind.FOCK else "unit_ball"
            rec.check("domain-classification", classify_domain(b) == expected, {"space": c.name})
            if n == 1:
                rec.check("identity-transport", b.values(10) == c.values(10), {"space": c.name})
    return rec.report


def verify_elementary(config: RunConfig) -> VerificationReport:
    n = config.n
    order = min(config.truncation, 12)
    sampler = CliffordSampler(config.seed)
    tol = max(config.tolerance, 1e-10)

    with CaseRecorder("elementary") as rec:
        if order >= 2:
            for kind in ElementaryKind:
                rec.check("derivative-table", derivative_identity_check(kind, n, order), {"kind": kind.value})
        rec.check("parity", parity_identity_check(n, order), {"order": order})
        if order >= 1:
            rec.check("pythagorean", pythagorean_check(n, order), {"order": order})
        rec.check("truncation-monogenic", monogenic_truncation_check(ElementaryKind.EXP, n, min(order, 8)))

        origin = [0.0] * (n + 1)
        at_origin = eval_elementary(ElementaryKind.EXP, n, origin, tol).value
        rec.check("exp-origin", (at_origin - Multivector.scalar(n, float(gamma(n)), exact=False)).max_abs() <= tol)

        for kind in ElementaryKind:
            for x0 in (-1.5, -0.4, 0.0, 0.7, 2.0):
                rec.check("restriction", restriction_check(kind, n, x0, tol), {"kind": kind.value, "x0": x0})

        for _ in range(config.count("bound-points")):
            point = sampler.point(n, 2.0)
            for kind in ElementaryKind:
                rec.check("modulus-bound", bound_check(kind, n, point, tol), {"kind": kind.value, "point": point})
    return rec.report


def verify_rkhs(config: RunConfig) -> VerificationReport:
    n = config.n
    sampler = CliffordSampler(config.seed)
    fock = SpaceConfig(SpaceKind.FOCK, n)
    hardy = SpaceConfig(SpaceKind.HARDY, n)
    tol = max(config.tolerance, 1e-10)

    with CaseRecorder("rkhs") as rec:
        for k in range(6):
            p_k = CoefficientFunction.appell(n, k)
            rec.check("fock-norm", inner_product(fock, p_k, p_k) == math.factorial(k), {"k": k})
            rec.check("hardy-orthonormal", inner_product(hardy, p_k, CoefficientFunction.appell(n, k + 1)) == 0)
            lowered = CoefficientFunction.appell(n, k - 1, k) if k else CoefficientFunction.zero(n)
            rec.check("annihilation-appell", annihilation(p_k) == lowered, {"k": k})

        for _ in range(config.count("operators")):
            f = sampler.coefficient_function(n, 8)
            g = sampler.coefficient_function(n, 8)
            rec.check("fock-adjoint", adjoint_check(fock, f, g), {"f": f, "g": g})
            rec.check("hardy-adjoint", adjoint_check(hardy, f, g), {"f": f, "g": g})
            rec.check("commutator", commutator_check(f), {"f": f})
            rec.check("shift-identities", shift_identity_check(f), {"f": f})
            rec.check("containment", containment_check(n, f), {"f": f})

            small = sampler.coefficient_function(n, 5)
            y = sampler.rational_point(n)
            for space in (fock, hardy):
                rec.residual("reproducing", reproducing_check(space, small, y, 5), 0.0, {"space": space.kind.value})

            x = sampler.point(n, 2.0)
            rec.check("fock-pointwise-bound", pointwise_bound_check(fock, f, x), {"x": x})
            x = sampler.point(n, 0.9)
            rec.check("hardy-pointwise-bound", pointwise_bound_check(hardy, f, x), {"x": x})

        zeros = [0.0] * n
        for x0, y0 in ((0.5, 0.5), (-0.9, 0.3), (0.9, 0.9), (0.0, 0.7)):
            value = kernel_eval_certified(hardy, [x0] + zeros, [y0] + zeros, tol)
            closed = 1.0 / (1.0 - x0 * y0)
            error = (value.value - Multivector.scalar(n, closed, exact=False)).max_abs()
            rec.residual("hardy-kernel", error, value.tail_bound + 1e-12 * closed, {"x0": x0, "y0": y0})
            rec.check("kernel-symmetry", kernel_symmetry_check(hardy, x0, y0, value.order))
        for x0, y0 in ((1.0, 1.0), (-2.0, 1.5), (2.0, 2.0), (0.3, 0.0)):
            value = kernel_eval_certified(fock, [x0] + zeros, [y0] + zeros, tol)
            closed = math.exp(x0 * y0)
            error = (value.value - Multivector.scalar(n, closed, exact=False)).max_abs()
            rec.residual("fock-kernel", error, value.tail_bound + 1e-12 * closed, {"x0": x0, "y0": y0})
            rec.check("kernel-symmetry", kernel_symmetry_check(fock, x0, y0, value.order))

        witness = divergence_witness()
        rec.check(
            "divergence-witness",
            witness.certified,
            {"terms": witness.terms},
            f"Mg partial {witness.mg_partial:.3f}, Ag partial {witness.ag_partial:.3f}",
        )
    return rec.report


def verify_polyanalytic(config: RunConfig) -> VerificationReport:
    n = config.n
    sampler = CliffordSampler(config.seed)
    degree = config.max_degree

    with CaseRecorder("polyanalytic") as rec:
        for m in range(config.m + 1):
            for k in range(m + 1):
                for j in range(degree + 1):
                    oracle = poly_mul(CliffordPolynomial.x0_power(n, k), fueter_sce_brute(n, j))
                    rec.check("c-map-table", c_map_monomial(n, m, k, j) == oracle, {"m": m, "k": k, "j": j})
                    tau = tau_map_monomial(n, m, k, j)
                    if k == m:
                        expected = poly_scale(fueter_sce_brute(n, j), 2 ** m * math.factorial(m))
                    else:
                        expected = CliffordPolynomial.zero(n)
                    rec.check("tau-table", tau == expected, {"m": m, "k": k, "j": j})
                    if n == 3 and j > 2:
                        regression = poly_mul(
                            CliffordPolynomial.x0_power(3, k), poly_scale(appell_polynomial(3, j - 2), -2 * j * (j - 1))
                        )
                        rec.check("quaternionic-regression", c_map_monomial(3, m, k, j) == regression)

        for k in range(7):
            for s in range(7):
                rec.check("appell-like", appell_like_check(k, s, n), {"k": k, "s": s})

        for _ in range(_heavy_trials(config)):
            for m in range(config.m + 1):
                f = sampler.poly_slice_function(n, m, degree - m)
                rec.check("relation", relation_check(n, m, f), {"m": m})
                rec.check("polyanalytic", polyanalytic_check(f), {"m": m})
                rec.check("c-map-brute", c_map(f) == c_map_brute(f), {"m": m})
                rec.check("tau-brute", tau_map(f) == tau_brute(f), {"m": m})
                rec.check("tau-series", tau_map(f) == materialize(tau_series(f)), {"m": m})
                rec.check("tau-monogenic", dirac(tau_map(f)).is_zero, {"m": m})

                points = [sampler.off_axis_point(n, 1.0) for _ in range(4)]
                rec.residual("global-v", v_numeric_residual(f, points), 1e-8, {"m": m})

            components = [materialize(sampler.appell_series(n, 3)) for _ in range(config.m + 1)]
            rec.check("project-round-trip", poly_project(axial_compose(n, components), config.m) == components)

        single = PolySliceFunction(n, (sampler.taylor_series(n, degree),))
        rec.check("reduction", c_map(single) == materialize(fueter_sce_series(n, single.layers[0])))
    return rec.report


def verify_rkhs_operators(config: RunConfig) -> VerificationReport:
    """Operator algebra only: adjoints, commutator and shift identities."""
    n = config.n
    sampler = CliffordSampler(config.seed)
    spaces = (SpaceConfig(SpaceKind.FOCK, n), SpaceConfig(SpaceKind.HARDY, n))

    with CaseRecorder("rkhs-operators") as rec:
        for _ in range(config.count("operators")):
            f = sampler.coefficient_function(n, config.max_k)
            g = sampler.coefficient_function(n, config.max_k)
            for space in spaces:
                rec.check(f"{space.kind.value}-adjoint", adjoint_check(space, f, g), {"f": f, "g": g})
            rec.check("commutator", commutator_check(f), {"f": f})
            rec.check("shift-identities", shift_identity_check(f), {"f": f})
    return rec.report


def verify_relation(config: RunConfig) -> VerificationReport:
    """D^m C_{m+1} f = 2^{-m} tau_{m+1} f on random functions of order m+1."""
    n, m = config.n, config.m
    sampler = CliffordSampler(config.seed)
    order = max(config.max_degree - m, 0)

    with CaseRecorder("polyanalytic-relation") as rec:
        for _ in range(config.trials):
            f = sampler.poly_slice_function(n, m, order)
            rec.check("relation", relation_check(n, m, f), {"m": m, "order": order})
    return rec.report


SUITES: Dict[str, Callable[[RunConfig], VerificationReport]] = {
    "algebra": verify_algebra,
    "appell": verify_appell,
    "fueter": verify_fueter,
    "elementary": verify_elementary,
    "rkhs": verify_rkhs,
    "polyanalytic": verify_polyanalytic,
}


def run_suites(config: RunConfig) -> List[VerificationReport]:
    """Run the configured suite, or all of them in a fixed order."""
    names = SUITE_NAMES if config.suite == "all" else (config.suite,)
    return [SUITES[name](config) for name in names]
