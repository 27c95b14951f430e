"""
Command handlers

Each handler turns parsed arguments into a Report. Evaluation errors are
caught once in run_command and mapped to exit codes.
"""

import argparse
import logging
import time
from dataclasses import replace
from itertools import combinations
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np
from pydantic import ValidationError

from cli.report import CaseRecord, Report, complex_pair
from core.errors import EXIT_CHECK_FAILED, EXIT_OK, DomainViolationError, EvalError, exit_code_for
from core.params import TruncationPolicy, default_policy, make_base_pair, make_omega_triple
from domains.gamma.services.bernoulli import bernoulli_B22, bernoulli_B33
from domains.gamma.services.elliptic_gamma import ell_gamma, gamma_product
from domains.gamma.services.hyperbolic_gamma import hyperbolic_gamma_integral, hyperbolic_gamma_product
from domains.gamma.services.modified_gamma import modified_G_B33, modified_G_product, sample_admissible_omega
from domains.gamma.services.pochhammer import qpoch_inf
from domains.gamma.services.q_gamma import thomae_jackson_gamma
from domains.integrals.models.params import AParams, BCParams, BetaParams, VParams, check_ranks
from domains.integrals.services.integrals import I_A, I_BC, V, elliptic_beta
from domains.terms.models.term_schema import load_term_spec
from domains.terms.models.term_spec import TermSpec
from domains.terms.services.builders import builtin_term
from domains.terms.services.diophantine import check_total_ellipticity
from domains.terms.services.ellipticity import ellipticity_sweep, modular_sweep
from domains.theta.services.theta_service import qpoch, theta, theta_error_bound
from verification import SuiteConfig, create_suite

logger = logging.getLogger(__name__)

# Residual bounds of the check-term sweeps
NUMERIC_THRESHOLD = 1e-8
MODULAR_THRESHOLD = 1e-7

# |t7 t8 − pq| below which `integrate v` also reports the closed form
V_REDUCTION_GUARD = 1e-12


def _encode(value: Any) -> Any:
    """JSON-ready view of parsed argument values"""
    if isinstance(value, complex):
        return complex_pair(value)
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    return value


def _inputs(args: argparse.Namespace, skip: Tuple[str, ...] = ()) -> Dict[str, Any]:
    hidden = {"command", "json", "no_timing", *skip}
    return {key: _encode(value) for key, value in sorted(vars(args).items()) if key not in hidden and value is not None}


def _require(args: argparse.Namespace, *names: str) -> List[Any]:
    missing = [name for name in names if getattr(args, name, None) is None]
    if missing:
        flags = ", ".join(f"--{name}" for name in missing)
        raise DomainViolationError(f"'{args.function}' needs {flags}")
    return [getattr(args, name) for name in names]


def _policy(tol: Optional[float]) -> TruncationPolicy:
    policy = default_policy()
    return replace(policy, tol=tol) if tol is not None else policy


# ---------------------------------------------------------------------------
# eval
# ---------------------------------------------------------------------------

def _eval_theta(args, policy):
    x, p = _require(args, "x", "p")
    return theta(x, p, policy), theta_error_bound(x, p, policy)


def _eval_ell_gamma(args, policy):
    z, p, q = _require(args, "z", "p", "q")
    result = ell_gamma(z, make_base_pair(p, q), policy)
    return result.value, result.est_error


def _eval_G_product(args, policy):
    u, w1, w2, w3 = _require(args, "u", "w1", "w2", "w3")
    result = modified_G_product(u, make_omega_triple(w1, w2, w3), policy)
    return result.value, result.est_error


def _eval_G_B33(args, policy):
    u, w1, w2, w3 = _require(args, "u", "w1", "w2", "w3")
    result = modified_G_B33(u, make_omega_triple(w1, w2, w3), policy)
    return result.value, result.est_error


def _eval_hyp_gamma_product(args, policy):
    u, w1, w2 = _require(args, "u", "w1", "w2")
    result = hyperbolic_gamma_product(u, w1, w2, policy)
    return result.value, result.est_error


def _eval_hyp_gamma_integral(args, policy):
    u, w1, w2 = _require(args, "u", "w1", "w2")
    result = hyperbolic_gamma_integral(u, w1, w2, policy, tol=args.tol or 1e-10)
    return result.value, result.est_error


def _eval_tj_gamma(args, policy):
    u, q = _require(args, "u", "q")
    result = thomae_jackson_gamma(u, q, policy)
    return result.value, result.est_error


def _eval_B22(args, policy):
    u, w1, w2 = _require(args, "u", "w1", "w2")
    return bernoulli_B22(u, w1, w2), 0.0


def _eval_B33(args, policy):
    u, w1, w2, w3 = _require(args, "u", "w1", "w2", "w3")
    return bernoulli_B33(u, w1, w2, w3), 0.0


def _eval_qpoch(args, policy):
    x, q = _require(args, "x", "q")
    if args.n is not None:
        return qpoch(x, q, args.n), 0.0
    result = qpoch_inf(x, q, policy)
    return result.value, result.est_error


EVALUATORS: Dict[str, Callable[[argparse.Namespace, TruncationPolicy], Tuple[complex, float]]] = {
    "theta": _eval_theta,
    "ell_gamma": _eval_ell_gamma,
    "G_product": _eval_G_product,
    "G_B33": _eval_G_B33,
    "hyp_gamma_product": _eval_hyp_gamma_product,
    "hyp_gamma_integral": _eval_hyp_gamma_integral,
    "tj_gamma": _eval_tj_gamma,
    "B22": _eval_B22,
    "B33": _eval_B33,
    "qpoch": _eval_qpoch,
}


def cmd_eval(args: argparse.Namespace, report: Report) -> None:
    """Evaluate one special function"""
    value, err_est = EVALUATORS[args.function](args, _policy(args.tol))
    report.outputs = {"value": complex_pair(value), "err_est": float(err_est)}


# ---------------------------------------------------------------------------
# check-term
# ---------------------------------------------------------------------------

def _load_term(args: argparse.Namespace) -> TermSpec:
    if args.builtin:
        return builtin_term(args.builtin, args.n, args.m)
    try:
        raw = Path(args.path).read_bytes()
    except OSError as e:
        raise DomainViolationError(f"cannot read term file '{args.path}': {e.strerror}")
    try:
        return load_term_spec(raw)
    except ValueError as e:
        # orjson.JSONDecodeError and pydantic.ValidationError both derive from ValueError
        kind = "schema violation" if isinstance(e, ValidationError) else "malformed JSON"
        raise DomainViolationError(f"{kind} in '{args.path}': {e}")


def cmd_check_term(args: argparse.Namespace, report: Report) -> None:
    """Diophantine check plus the optional numeric and modular sweeps"""
    term = _load_term(args)
    report.outputs = {"term": term.name, "n": term.n, "K": term.K}

    if term.is_pure:
        ellipticity = check_total_ellipticity(term)
        report.outputs["diophantine"] = ellipticity.to_dict()
        report.cases.append(CaseRecord(
            name="diophantine", residual=float(len(ellipticity.violations)), threshold=0.5,
            passed=ellipticity.passed, detail={"K": ellipticity.K},
        ))
    else:
        report.outputs["diophantine"] = "skipped: factors carry powers of pq"

    rng = np.random.default_rng(args.seed)
    if args.numeric:
        sweep = ellipticity_sweep(term, make_base_pair(args.p, args.q), rng, points=args.points)
        report.cases.append(CaseRecord(
            name="numeric", residual=sweep.worst, threshold=NUMERIC_THRESHOLD,
            passed=sweep.worst < NUMERIC_THRESHOLD,
            detail={"worst_case": sweep.worst_case, "checks": sweep.cases},
        ))
    if args.modular:
        worst = max(modular_sweep(term, sample_admissible_omega(rng), rng), default=0.0)
        report.cases.append(CaseRecord(
            name="modular", residual=worst, threshold=MODULAR_THRESHOLD, passed=worst < MODULAR_THRESHOLD,
        ))


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args: argparse.Namespace, report: Report) -> None:
    """Run one verification suite"""
    config = SuiteConfig(tol=args.tol, seed=args.seed, n=args.n, m=args.m, cases=args.cases)
    suite = create_suite(args.suite, config)
    results = suite.run()
    report.suite = args.suite
    report.cases = [CaseRecord.from_case(case) for case in results]
    report.outputs = {"checks": len(results), "failed": sum(1 for case in results if not case.passed)}


# ---------------------------------------------------------------------------
# integrate
# ---------------------------------------------------------------------------

def _require_params(args: argparse.Namespace, name: str, count: int) -> List[complex]:
    values = getattr(args, name)
    if values is None or len(values) != count:
        given = 0 if values is None else len(values)
        raise DomainViolationError(f"integrate {args.kind} needs {count} values for --{name}, got {given}")
    return values


def cmd_integrate(args: argparse.Namespace, report: Report) -> None:
    """Numeric value of one integral; the balancing parameter is computed"""
    if args.p is None or args.q is None:
        raise DomainViolationError("integrate needs --p and --q")
    base = make_base_pair(args.p, args.q)
    policy = default_policy()

    if args.kind == "beta":
        params = BetaParams.from_free(_require_params(args, "t", 5), base)
        result = elliptic_beta(params, args.tol, policy)
        derived = {"t6": complex_pair(params.t[5])}
    elif args.kind == "v":
        params = VParams.from_free(_require_params(args, "t", 7), base)
        result = V(params, args.tol, policy)
        derived = {"t8": complex_pair(params.t[7])}
        if abs(params.t[6] * params.t[7] - base.pq) < V_REDUCTION_GUARD:
            closed = gamma_product([a * b for a, b in combinations(params.t[:6], 2)], base, policy)
            derived["closed_form"] = complex_pair(closed)
    elif args.kind == "bc":
        check_ranks(args.n, args.m)
        count = 2 * args.n + 2 * args.m + 4
        params = BCParams.from_free(args.n, args.m, _require_params(args, "t", count - 1), base)
        result = I_BC(params, args.tol, policy)
        derived = {"balancing": complex_pair(params.t[-1])}
    else:
        check_ranks(args.n, args.m)
        count = args.n + args.m + 2
        s = _require_params(args, "s", count)
        params = AParams.from_free(args.n, args.m, s, _require_params(args, "t", count - 1), base)
        result = I_A(params, args.tol, policy)
        derived = {"balancing": complex_pair(params.t[-1])}

    report.outputs = {**result.to_dict(), **derived}


COMMANDS: Dict[str, Callable[[argparse.Namespace, Report], None]] = {
    "eval": cmd_eval,
    "check-term": cmd_check_term,
    "verify": cmd_verify,
    "integrate": cmd_integrate,
}


def run_command(args: argparse.Namespace) -> Report:
    """Dispatch a parsed command and settle pass/fail and the exit code"""
    report = Report(command=args.command, inputs=_inputs(args))
    started = time.perf_counter()
    logger.info(f"running {args.command}")
    try:
        COMMANDS[args.command](args, report)
    except EvalError as e:
        logger.warning(f"{args.command} failed: {e}")
        report.error = e.to_dict()
        report.passed = False
        report.exit_code = exit_code_for(e)
    else:
        report.passed = all(case.passed for case in report.cases)
        report.exit_code = EXIT_OK if report.passed else EXIT_CHECK_FAILED
    report.elapsed_ms = (time.perf_counter() - started) * 1000.0
    logger.info(f"{args.command} finished with exit code {report.exit_code}")
    return report
