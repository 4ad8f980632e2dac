import argparse
import logging
import sys
from logging import Logger
from typing import Union

from pydantic import BaseModel

from config import Config
from fmzv.algebra.words import NCPoly
from fmzv.misc.errors import BudgetExceededError, InvalidArgumentError

logger = logging.getLogger(__name__)


class Utils:

    @staticmethod
    def handler_log(logger_from_caller: Logger, args: argparse.Namespace):
        options = {k: v for k, v in vars(args).items() if k not in ("command", "quiet")}
        logger_from_caller.info(f"Handler called. command={args.command}, args={options}")

    @staticmethod
    def emit(output: Union[str, BaseModel]):
        if isinstance(output, BaseModel):
            output = output.model_dump_json(indent=2)
        sys.stdout.write(output if output.endswith("\n") else output + "\n")

    @staticmethod
    def check_budget(weight: int, limit: int, what: str):
        if weight > limit:
            raise BudgetExceededError(f"{what} of weight {weight} exceeds the configured budget {limit}")

    @staticmethod
    def check_eds_budget(weight: int):
        Utils.check_budget(weight, Config.EDS_MAX_WEIGHT, "EDS computation")

    @staticmethod
    def check_matrix_budget(weight: int):
        Utils.check_budget(weight, Config.MATRIX_MAX_WEIGHT, "level matrix")

    @staticmethod
    def homogeneous_weight(p: NCPoly) -> int:
        weights = p.weights()
        if len(weights) > 1:
            raise InvalidArgumentError(f"expected a homogeneous polynomial, got weights {weights}")
        return weights[0] if weights else 0

    @staticmethod
    def status(passed: bool) -> str:
        return "pass" if passed else "FAIL"
