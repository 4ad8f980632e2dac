import argparse
import logging

from fmzv.algebra.eds import zf_coaction
from fmzv.algebra.words import Alphabet
from fmzv.misc.models import TensorDocument
from fmzv.misc.parsing import parse_poly
from fmzv.misc.router import Router, arg
from fmzv.misc.utils import Utils as Ut

logger = logging.getLogger(__name__)
router = Router()


@router.command("coaction", help="Goncharov coaction Z^f -> A^f ⊗ Z^f on canonical forms", arguments=[
    arg("--weight", type=int, help="weight of the polynomial; inferred when omitted"),
    arg("poly", help="homogeneous X-polynomial"),
])
def coaction(args: argparse.Namespace) -> int:
    Ut.handler_log(logger, args)

    p = parse_poly(args.poly, Alphabet.X)
    weight = Ut.homogeneous_weight(p) if args.weight is None else args.weight
    Ut.check_eds_budget(weight)

    result = zf_coaction(p, weight)
    Ut.emit(TensorDocument.from_tensor("coaction", result) if args.format == "json" else str(result))
    return 0
