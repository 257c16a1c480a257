# -*- coding: utf-8 -*-
from loguru import logger

# biblioteka milczy, dopóki aplikacja nie wywoła setup_logging()
logger.disable("reiscount")
