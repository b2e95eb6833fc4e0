from pytransdiam.padic.valuation import (UltrametricValue, padic_abs,
                                         valuation)
from pytransdiam.padic.polydisc import (UltrametricPolydisc, polydisc_diam_p,
                                        polydisc_dn_p, polydisc_dn_p_lattice)
