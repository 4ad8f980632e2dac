import argparse
import logging

from fmzv.algebra.goncharov import derivation_D, partial_2r1
from fmzv.algebra.words import Alphabet, Tensor2, Word
from fmzv.misc.models import TensorDocument
from fmzv.misc.parsing import parse_poly
from fmzv.misc.router import Router, arg
from fmzv.misc.utils import Utils as Ut

logger = logging.getLogger(__name__)
router = Router()


@router.command("derivation", help="D_(2r+1) or the raw operator partial_(2r+1) on a polynomial", arguments=[
    arg("--r", type=int, required=True, help="the derivation has weight 2r+1"),
    arg("--mode", choices=("D", "partial"), default="D"),
    arg("poly", help="X-polynomial"),
])
def derivation(args: argparse.Namespace) -> int:
    Ut.handler_log(logger, args)

    p = parse_poly(args.poly, Alphabet.X)
    if args.mode == "D":
        result = derivation_D(p, args.r)
    else:
        result = Tensor2.zero(Alphabet.X)
        for w, c in p.terms.items():
            result = result + partial_2r1(Word(Alphabet.X, w), args.r).scale(c)

    Ut.emit(TensorDocument.from_tensor("derivation", result) if args.format == "json" else str(result))
    return 0
