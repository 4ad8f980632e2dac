import logging
import sys
from typing import Optional, Sequence

from config import Config
from fmzv.handlers import routers
from fmzv.misc.errors import FmzvError
from fmzv.misc.router import Dispatcher

logger = logging.getLogger(__name__)


def main(argv: Optional[Sequence[str]] = None) -> int:
    dispatcher = Dispatcher()
    if routers:
        dispatcher.include_routers(*routers)

    try:
        args = dispatcher.parse(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    logging.basicConfig(level=logging.WARNING if args.quiet else Config.LOG_LEVEL,
                        format=u'%(filename)s:%(lineno)d #%(levelname)-8s [%(asctime)s] - %(name)s - %(message)s')

    try:
        return dispatcher.dispatch(args)
    except FmzvError as exc:
        logger.error(f"{type(exc).__name__}: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
