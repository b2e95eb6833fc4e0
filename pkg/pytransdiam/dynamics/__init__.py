from pytransdiam.dynamics.escape import (escape_orbit, escape_parameters,
                                         escape_rate, escape_rates,
                                         green_on_sphere)
from pytransdiam.dynamics.julia import (FilledJuliaOracle, filled_julia_oracle,
                                        julia_diam_prediction)
from pytransdiam.dynamics.brolin import brolin_sample
from pytransdiam.dynamics.identity import bb_check
