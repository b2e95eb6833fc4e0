import logging
import os

LOG_LEVEL_ENV = 'PYTRANSDIAM_LOG_LEVEL'
THREADS_ENV = 'PYTRANSDIAM_THREADS'

logging.basicConfig(
        level=getattr(logging,
                      os.environ.get(LOG_LEVEL_ENV, 'WARNING').upper(),
                      logging.WARNING))
from pytransdiam.utils.common_utils import *
