import argparse
import logging

from fmzv.algebra.eds import af_reduce, zf_reduce
from fmzv.algebra.words import Alphabet
from fmzv.misc.models import PolyDocument
from fmzv.misc.parsing import parse_poly
from fmzv.misc.router import Router, arg
from fmzv.misc.utils import Utils as Ut

logger = logging.getLogger(__name__)
router = Router()


@router.command("reduce", help="canonical representative of a formal MZV", arguments=[
    arg("--weight", type=int, help="weight of the polynomial; inferred when omitted"),
    arg("--modulo-zeta2", action="store_true", help="reduce in Z^f/(zeta^f(2))"),
    arg("poly", help="homogeneous X-polynomial"),
])
def reduce(args: argparse.Namespace) -> int:
    Ut.handler_log(logger, args)

    p = parse_poly(args.poly, Alphabet.X)
    weight = Ut.homogeneous_weight(p) if args.weight is None else args.weight
    Ut.check_eds_budget(weight)

    result = af_reduce(p, weight) if args.modulo_zeta2 else zf_reduce(p, weight)
    Ut.emit(PolyDocument.from_poly("reduce", result) if args.format == "json" else str(result))
    return 0
