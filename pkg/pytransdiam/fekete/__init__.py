from pytransdiam.fekete.vandermonde import (hadamard_log_bound,
                                            vandermonde_logabsdet)
from pytransdiam.fekete.oracle import (BallOracle, IntervalOracle,
                                       MembershipOracle, PointsOracle,
                                       PolydiscOracle, SetOracle,
                                       preimage_oracle)
from pytransdiam.fekete.configuration import FeketeConfiguration
from pytransdiam.fekete.leja import greedy_leja
from pytransdiam.fekete.exchange import exchange_optimize
from pytransdiam.fekete.diameter import (diam_sequence, diameter_frame,
                                         dn_estimate, fattening_report)
from pytransdiam.fekete.pullback import pullback_check
