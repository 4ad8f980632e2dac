import argparse
import logging

from fmzv.algebra.double_shuffle import dm_basis
from fmzv.misc.models import DmDocument, poly_terms
from fmzv.misc.router import Router, arg
from fmzv.misc.utils import Utils as Ut

logger = logging.getLogger(__name__)
router = Router()


@router.command("dm", help="basis of the weight-w part of the double shuffle Lie algebra dm", arguments=[
    arg("--weight", type=int, required=True),
])
def dm(args: argparse.Namespace) -> int:
    Ut.handler_log(logger, args)
    Ut.check_eds_budget(args.weight)

    basis = dm_basis(args.weight)
    if args.format == "json":
        Ut.emit(DmDocument(command="dm", weight=args.weight, dimension=len(basis),
                           basis=[poly_terms(p) for p in basis], text=[str(p) for p in basis]))
    else:
        Ut.emit("\n".join([f"dim = {len(basis)}"] + [str(p) for p in basis]))
    return 0
