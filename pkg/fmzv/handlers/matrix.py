import argparse
import logging

from fmzv.algebra.level import build_matrix_report
from fmzv.misc.models import MatrixDocument
from fmzv.misc.router import Router, arg
from fmzv.misc.utils import Utils as Ut

logger = logging.getLogger(__name__)
router = Router()


@router.command("matrix", help="level matrix M_N^l of the level-lowering derivations", arguments=[
    arg("--N", dest="n", type=int, required=True, help="weight"),
    arg("--level", type=int, required=True),
    arg("--det", action="store_true", help="print the exact determinant"),
    arg("--two-adic", action="store_true", help="check the 2-adic invertibility certificate"),
], formats=("text", "json", "csv"))
def matrix(args: argparse.Namespace) -> int:
    Ut.handler_log(logger, args)
    Ut.check_matrix_budget(args.n)

    report = build_matrix_report(args.n, args.level)
    failed = args.two_adic and not report.two_adic
    if failed:
        logger.error(f"2-adic certificate fails for N={args.n}, level={args.level}")

    if args.format == "json":
        Ut.emit(MatrixDocument(
            command="matrix",
            n=args.n,
            level=args.level,
            basis=[str(u) for u in report.basis],
            codomain=[str(v) for v in report.codomain],
            rows=MatrixDocument.matrix_rows(report.matrix),
            det=str(report.det) if args.det else None,
            two_adic=report.two_adic if args.two_adic else None,
            below_diagonal_even=report.below_diagonal_even if args.two_adic else None,
        ))
        return 1 if failed else 0

    lines = [report.matrix.to_csv()] if report.matrix.rows else []
    if args.format == "text":
        if args.det:
            lines.append(f"det = {report.det}")
        if args.two_adic:
            lines.append(f"two-adic certificate: {Ut.status(report.two_adic)}")
            lines.append(f"below diagonal in 2Z: {Ut.status(report.below_diagonal_even)}")
    Ut.emit("\n".join(lines))
    return 1 if failed else 0
