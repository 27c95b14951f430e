"""
elliptio command-line entry point
"""

import logging
import sys

from core.config import get_config

# Configure logging
config = get_config()
handlers = [logging.StreamHandler(sys.stderr)]
if config.logging.log_file:
    handlers.append(logging.FileHandler(config.logging.log_file))
logging.basicConfig(
    level=getattr(logging, config.logging.level.upper()),
    format=config.logging.format,
    handlers=handlers,
)
logger = logging.getLogger(__name__)


def run() -> int:
    from cli import main

    logger.info(f"{config.app_name} {config.app_version}")
    return main(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(run())
