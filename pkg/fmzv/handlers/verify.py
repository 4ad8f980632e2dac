import argparse
import logging
from typing import Callable, Dict, List, Tuple

from config import Config
from fmzv.algebra.double_shuffle import check_depth1_even_vanishing, check_dm_conditions, dm_basis
from fmzv.algebra.eds import (
    verify_even_pair_sum, verify_even_zeta, verify_formal_zagier, verify_level_one_identity,
    verify_power_sum_identity, verify_twos, zf_reduce,
)
from fmzv.algebra.level import build_matrix_report, enumerate_basis, verify_binomial_identity, verify_c_lemma
from fmzv.algebra.lyndon import lyndon_words
from fmzv.algebra.odd_model import S2, uf_dims, uf_kernel
from fmzv.algebra.words import Alphabet, NCPoly
from fmzv.misc.models import CheckModel, VerificationDocument
from fmzv.misc.router import Router, arg
from fmzv.misc.utils import Utils as Ut

logger = logging.getLogger(__name__)
router = Router()

Checks = List[Tuple[str, bool]]


def euler_suite(max_weight: int) -> Checks:
    relation = NCPoly(Alphabet.X, {(0, 1, 1): 1, (0, 0, 1): -1})
    return [("zf(2,1) = zf(3)", not zf_reduce(relation, 3))]


def zagier_suite(max_weight: int) -> Checks:
    return [
        (f"Zagier a={a}, b={b}", verify_formal_zagier(a, b))
        for a in range(max_weight) for b in range(max_weight) if 2 * a + 2 * b + 3 <= max_weight
    ]


def level_one_suite(max_weight: int) -> Checks:
    return [(f"level one n={n}", verify_level_one_identity(n)) for n in range(1, (max_weight - 1) // 2 + 1)]


def c_lemma_suite(max_weight: int) -> Checks:
    return [("c-coefficient lemma up to 10", verify_c_lemma(10))]


def binomial_suite(max_weight: int) -> Checks:
    return [("binomial identity up to 8", verify_binomial_identity(8))]


def even_zeta_suite(max_weight: int) -> Checks:
    checks = [(f"zf({2 * n}) = b_{n} zf(2)^{n}", verify_even_zeta(n)) for n in range(1, max_weight // 2 + 1)]
    checks += [(f"zf({{2}}^{n}) = 6^{n}/({2 * n + 1})! zf(2)^{n}", verify_twos(n))
               for n in range(1, max_weight // 2 + 1)]
    checks += [(f"even pair sum k={k}", verify_even_pair_sum(k)) for k in range(4, max_weight + 1, 2)]
    return checks


def power_sum_suite(max_weight: int) -> Checks:
    return [
        (f"power sums k={k}, n={n}", verify_power_sum_identity(k, n))
        for k in range(2, max_weight // 2 + 1) for n in range(2, max_weight // k + 1)
    ]


def _odd_lie_dimension(n: int) -> int:
    return sum(1 for w in lyndon_words(Alphabet.S, n) if S2 not in w.letters)


def dm_suite(max_weight: int) -> Checks:
    checks = []
    for w in range(3, min(max_weight, 8) + 1):
        dimension = len(dm_basis(w))
        checks.append((f"dim dm_{w} = {dimension}, free Lie on odd generators gives {_odd_lie_dimension(w)}",
                       dimension == _odd_lie_dimension(w)))
    for w in range(3, min(max_weight, 9) + 1):
        basis = dm_basis(w)
        checks.append((f"dm_{w} passes the dm conditions", all(check_dm_conditions(p) for p in basis)))
        checks.append((f"dm_{w} has no even depth-one part", all(check_depth1_even_vanishing(p, w) for p in basis)))
    return checks


def matrices_suite(max_weight: int) -> Checks:
    checks = []
    for n in range(3, min(Config.MATRIX_MAX_WEIGHT, 14) + 1):
        for ell in range(1, n // 3 + 1):
            if not enumerate_basis(n, ell).elements:
                continue
            report = build_matrix_report(n, ell)
            checks.append((f"M_{n}^{ell} invertible with 2-adic certificate", report.two_adic and report.invertible))
    return checks


def odd_model_suite(max_weight: int) -> Checks:
    checks = [(f"dim ker D_<{n} = 1", len(uf_kernel(n)) == 1) for n in range(2, 13)]
    checks += [(f"dim U^f_{n} = {dim}", dim == expected) for n, dim, expected in uf_dims(14)]
    return checks


SUITES: Dict[str, Callable[[int], Checks]] = {
    "euler": euler_suite,
    "zagier": zagier_suite,
    "level-one": level_one_suite,
    "c-lemma": c_lemma_suite,
    "binomial": binomial_suite,
    "even-zeta": even_zeta_suite,
    "power-sums": power_sum_suite,
    "dm": dm_suite,
    "matrices": matrices_suite,
    "odd-model": odd_model_suite,
}


@router.command("verify", help="run one of the verification suites", arguments=[
    arg("--suite", choices=tuple(SUITES), required=True),
    arg("--max-weight", type=int, default=None, help="weight budget of the suite; FMZV_MAX_WEIGHT by default"),
])
def verify(args: argparse.Namespace) -> int:
    Ut.handler_log(logger, args)

    max_weight = Config.EDS_MAX_WEIGHT if args.max_weight is None else args.max_weight
    Ut.check_eds_budget(max_weight)

    checks = SUITES[args.suite](max_weight)
    passed = all(ok for _, ok in checks)
    logger.info(f"Suite {args.suite}: {sum(ok for _, ok in checks)}/{len(checks)} checks passed")
    if not passed:
        logger.error(f"Suite {args.suite} failed")

    if args.format == "json":
        Ut.emit(VerificationDocument(command="verify", suite=args.suite, passed=passed,
                                     checks=[CheckModel(name=name, passed=ok) for name, ok in checks]))
    else:
        lines = [f"{Ut.status(ok)}  {name}" for name, ok in checks]
        lines.append(f"suite {args.suite}: {Ut.status(passed)}")
        Ut.emit("\n".join(lines))
    return 0 if passed else 1
