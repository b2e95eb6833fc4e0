from pytransdiam.utils.common_utils import *
