import argparse
import logging

from fmzv.algebra.arith import expected_dimensions
from fmzv.algebra.eds import zf_dim
from fmzv.misc.models import DimsDocument, DimsRow
from fmzv.misc.router import Router, arg
from fmzv.misc.utils import Utils as Ut

logger = logging.getLogger(__name__)
router = Router()


@router.command("dims", help="dimensions of Z^f next to the coefficients of 1/(1-x^2-x^3)", arguments=[
    arg("--max-weight", type=int, required=True),
])
def dims(args: argparse.Namespace) -> int:
    Ut.handler_log(logger, args)
    Ut.check_eds_budget(args.max_weight)

    expected = expected_dimensions(args.max_weight)
    rows = [DimsRow(weight=n, dim=zf_dim(n), expected=expected[n]) for n in range(args.max_weight + 1)]
    matches = all(row.dim == row.expected for row in rows)
    if not matches:
        logger.info("Computed dimensions differ from 1/(1-x^2-x^3)")

    if args.format == "json":
        Ut.emit(DimsDocument(command="dims", rows=rows, matches=matches))
    else:
        Ut.emit("\n".join(["N\tdim\texpected"] + [f"{row.weight}\t{row.dim}\t{row.expected}" for row in rows]))
    return 0
