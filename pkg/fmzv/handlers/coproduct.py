import argparse
import logging

from fmzv.algebra.goncharov import gon_coproduct
from fmzv.algebra.products import deconcat, dual_coproduct
from fmzv.algebra.words import SHUFFLE, STUFFLE, Alphabet
from fmzv.misc.models import TensorDocument
from fmzv.misc.parsing import parse_word
from fmzv.misc.router import Router, arg
from fmzv.misc.utils import Utils as Ut

logger = logging.getLogger(__name__)
router = Router()


@router.command("coproduct", help="Goncharov, deconcatenation or dual quasi-shuffle coproduct of a word", arguments=[
    arg("--op", choices=("gon", "dec", "dual-stuffle", "dual-shuffle"), default="gon"),
    arg("word", help="x0x1, 01, y2 y1 or s3 s5"),
])
def coproduct(args: argparse.Namespace) -> int:
    Ut.handler_log(logger, args)

    if args.op == "gon":
        result = gon_coproduct(parse_word(args.word, Alphabet.X))
    elif args.op == "dec":
        result = deconcat(parse_word(args.word))
    elif args.op == "dual-stuffle":
        result = dual_coproduct(parse_word(args.word, Alphabet.Y), STUFFLE)
    else:
        result = dual_coproduct(parse_word(args.word), SHUFFLE)

    Ut.emit(TensorDocument.from_tensor("coproduct", result) if args.format == "json" else str(result))
    return 0
