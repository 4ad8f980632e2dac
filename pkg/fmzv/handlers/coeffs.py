import argparse
import logging

from fmzv.algebra.level import c_coeff
from fmzv.misc.models import CoefficientDocument
from fmzv.misc.router import Router, arg
from fmzv.misc.utils import Utils as Ut

logger = logging.getLogger(__name__)
router = Router()


@router.command("coeffs", help="Zagier coefficients c_(a,b)^r", arguments=[
    arg("--a", type=int, required=True),
    arg("--b", type=int, required=True),
    arg("--r", type=int, help="a single r; all r = 1..a+b+1 when omitted"),
])
def coeffs(args: argparse.Namespace) -> int:
    Ut.handler_log(logger, args)

    rs = [args.r] if args.r is not None else list(range(1, args.a + args.b + 2))
    values = {r: c_coeff(args.a, args.b, r) for r in rs}

    if args.format == "json":
        Ut.emit(CoefficientDocument(command="coeffs", a=args.a, b=args.b,
                                    values={str(r): str(c) for r, c in values.items()}))
    elif args.r is not None:
        Ut.emit(str(values[args.r]))
    else:
        Ut.emit("\n".join(f"r={r}: {c}" for r, c in values.items()))
    return 0
