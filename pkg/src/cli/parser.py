"""
Command-line argument parsing

Complex numbers use the a+bi syntax (2, -0.5i, 0.35+0.1i); lists are
comma-separated.
"""

import argparse
from typing import List, Optional

from core.config import get_config
from verification import SUITE_REGISTRY

EVAL_FUNCTIONS = (
    "theta",
    "ell_gamma",
    "G_product",
    "G_B33",
    "hyp_gamma_product",
    "hyp_gamma_integral",
    "tj_gamma",
    "B22",
    "B33",
    "qpoch",
)

INTEGRAL_KINDS = ("beta", "v", "bc", "a")


def parse_complex(text: str) -> complex:
    """'0.35+0.1i' → (0.35+0.1j)"""
    cleaned = text.strip().replace(" ", "").replace("I", "i").replace("i", "j")
    try:
        return complex(cleaned)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: '{text}'")


def parse_complex_list(text: str) -> List[complex]:
    """'0.3,0.4,0.35+0.1i' → [0.3, 0.4, 0.35+0.1j]"""
    return [parse_complex(item) for item in text.split(",") if item.strip()]


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="Emit the report as JSON.")
    parser.add_argument("--no-timing", action="store_true", dest="no_timing",
                        help="Omit wall time so identical inputs give identical bytes.")


def _add_nome_flags(parser: argparse.ArgumentParser, p: Optional[complex] = None, q: Optional[complex] = None) -> None:
    parser.add_argument("--p", type=parse_complex, default=p, help="Nome p.")
    parser.add_argument("--q", type=parse_complex, default=q, help="Nome q.")


def build_parser() -> argparse.ArgumentParser:
    seed = get_config().verify.seed
    parser = argparse.ArgumentParser(
        prog="elliptio",
        description="Elliptic hypergeometric functions: evaluation, term checks, identity verification, integrals.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    evaluate = commands.add_parser("eval", help="Evaluate a special function.")
    evaluate.add_argument("function", choices=EVAL_FUNCTIONS)
    for name in ("x", "z", "u"):
        evaluate.add_argument(f"--{name}", type=parse_complex, default=None, help=f"Argument {name}.")
    _add_nome_flags(evaluate)
    for name in ("w1", "w2", "w3"):
        evaluate.add_argument(f"--{name}", type=parse_complex, default=None, help=f"Quasi-period {name}.")
    evaluate.add_argument("--n", type=int, default=None, help="Finite length for qpoch.")
    evaluate.add_argument("--tol", type=float, default=None, help="Truncation tolerance.")
    _add_output_flags(evaluate)

    check = commands.add_parser("check-term", help="Check total ellipticity of a term.")
    source = check.add_mutually_exclusive_group(required=True)
    source.add_argument("path", nargs="?", default=None, help="TermSpec JSON document.")
    source.add_argument("--builtin", default=None, help="Built-in term: beta, rho-bc, rho-a, single-gamma, cancelling-pair.")
    check.add_argument("--n", type=int, default=1, help="Rank n of the rho terms.")
    check.add_argument("--m", type=int, default=1, help="Rank m of the rho terms.")
    check.add_argument("--numeric", action="store_true", help="Run the numeric certificate sweep.")
    check.add_argument("--modular", action="store_true", help="Run the modular invariance sweep.")
    check.add_argument("--points", type=int, default=1, help="Sample points of the numeric sweep.")
    check.add_argument("--seed", type=int, default=seed, help="Sampling seed (default: ELLIPTIO_SEED).")
    _add_nome_flags(check, p=0.2 + 0j, q=0.3 + 0j)
    _add_output_flags(check)

    verify = commands.add_parser("verify", help="Run a named verification suite.")
    verify.add_argument("suite", choices=sorted(SUITE_REGISTRY))
    verify.add_argument("--tol", type=float, default=None, help="Quadrature tolerance.")
    verify.add_argument("--seed", type=int, default=seed, help="Sampling seed (default: ELLIPTIO_SEED).")
    verify.add_argument("--n", type=int, default=1, help="Rank n.")
    verify.add_argument("--m", type=int, default=1, help="Rank m.")
    verify.add_argument("--cases", type=int, default=None, help="Number of seeded cases.")
    _add_output_flags(verify)

    integrate = commands.add_parser("integrate", help="Compute an elliptic hypergeometric integral.")
    integrate.add_argument("kind", choices=INTEGRAL_KINDS)
    _add_nome_flags(integrate)
    integrate.add_argument("--t", type=parse_complex_list, default=None,
                           help="Free t parameters; the balancing parameter is computed.")
    integrate.add_argument("--s", type=parse_complex_list, default=None, help="s parameters of the A integral.")
    integrate.add_argument("--n", type=int, default=1, help="Rank n.")
    integrate.add_argument("--m", type=int, default=0, help="Rank m.")
    integrate.add_argument("--tol", type=float, default=None, help="Quadrature tolerance.")
    _add_output_flags(integrate)

    return parser
