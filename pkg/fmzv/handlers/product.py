import argparse
import logging

from fmzv.algebra.products import quasi_shuffle, shuffle
from fmzv.algebra.words import STUFFLE, Alphabet
from fmzv.misc.models import PolyDocument
from fmzv.misc.parsing import parse_poly
from fmzv.misc.router import Router, arg
from fmzv.misc.utils import Utils as Ut

logger = logging.getLogger(__name__)
router = Router()


@router.command("product", help="shuffle or stuffle product of two polynomials", arguments=[
    arg("--op", choices=("shuffle", "stuffle"), default="shuffle"),
    arg("left", help="first factor, e.g. 2*x0x1 - x1x0"),
    arg("right", help="second factor"),
])
def product(args: argparse.Namespace) -> int:
    Ut.handler_log(logger, args)

    alphabet = Alphabet.Y if args.op == "stuffle" else None
    left = parse_poly(args.left, alphabet)
    right = parse_poly(args.right, alphabet or left.alphabet)
    result = quasi_shuffle(left, right, STUFFLE) if args.op == "stuffle" else shuffle(left, right)

    Ut.emit(PolyDocument.from_poly("product", result) if args.format == "json" else str(result))
    return 0
