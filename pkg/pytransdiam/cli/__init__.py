from pytransdiam.cli.config import ExperimentConfig
from pytransdiam.cli.commands import (Report, cmd_bb, cmd_diam, cmd_julia,
                                      cmd_padic, cmd_pullback, cmd_resultant)
