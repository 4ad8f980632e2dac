import argparse
import logging

from fmzv.algebra.odd_model import uf_dims, uf_kernel
from fmzv.misc.errors import InvalidArgumentError
from fmzv.misc.models import DimsDocument, DimsRow, KernelDocument
from fmzv.misc.router import Router, arg
from fmzv.misc.utils import Utils as Ut

logger = logging.getLogger(__name__)
router = Router()


@router.command("oddmodel", help="kernel of D_(<N) and the Hilbert series of the odd model", arguments=[
    arg("--kernel", action="store_true"),
    arg("--dims", action="store_true"),
    arg("--weight", type=int, help="weight N for --kernel"),
    arg("--max-weight", type=int, help="last weight for --dims"),
])
def oddmodel(args: argparse.Namespace) -> int:
    Ut.handler_log(logger, args)

    if args.kernel == args.dims:
        raise InvalidArgumentError("choose exactly one of --kernel and --dims")

    if args.kernel:
        if args.weight is None:
            raise InvalidArgumentError("--kernel needs --weight")
        Ut.check_matrix_budget(args.weight)

        kernel = uf_kernel(args.weight)
        if args.format == "json":
            Ut.emit(KernelDocument(command="oddmodel", weight=args.weight, dimension=len(kernel),
                                   basis=[str(e) for e in kernel]))
        else:
            Ut.emit("\n".join([f"dim = {len(kernel)}"] + [str(e) for e in kernel]))
        return 0

    if args.max_weight is None:
        raise InvalidArgumentError("--dims needs --max-weight")
    Ut.check_matrix_budget(args.max_weight)

    rows = [DimsRow(weight=n, dim=dim, expected=expected) for n, dim, expected in uf_dims(args.max_weight)]
    if args.format == "json":
        Ut.emit(DimsDocument(command="oddmodel", rows=rows, matches=all(r.dim == r.expected for r in rows)))
    else:
        Ut.emit("\n".join(["N\tdim\texpected"] + [f"{r.weight}\t{r.dim}\t{r.expected}" for r in rows]))
    return 0
