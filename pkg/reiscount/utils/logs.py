# -*- coding: utf-8 -*-
from __future__ import annotations

import sys

from loguru import logger

_FORMAT = "<green>{time:HH:mm:ss.SSS}</green> <level>{level: <7}</level> {message}"


def _stderr(message: str) -> None:
    # sys.stderr czytany przy każdym zapisie (podmiana strumienia w testach)
    sys.stderr.write(message)


def setup_logging(level: str = "WARNING") -> None:
    """Jeden sink na stderr; stdout zostaje dla raportów."""
    logger.remove()
    logger.add(_stderr, level=level.upper(), format=_FORMAT, colorize=False)
    logger.enable("reiscount")
