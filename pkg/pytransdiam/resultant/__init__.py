from pytransdiam.resultant.bareiss import bareiss_determinant
from pytransdiam.resultant.macaulay import (MacaulayInstance,
                                            binary_quadratic_resultant,
                                            resultant_exact)
from pytransdiam.resultant.numeric import (abs_resultant, is_regular,
                                           resultant_numeric)
from pytransdiam.resultant.generic import resultant_generic_quadratic_ternary
from pytransdiam.resultant.padic_abs import padic_abs_resultant
