from pytransdiam.padic.valuation import UltrametricValue, padic_abs
from pytransdiam.polycore.polymap import PolynomialMap
from pytransdiam.resultant.macaulay import resultant_exact
from pytransdiam.utils.enums import ScalarDomain
from pytransdiam.utils.exceptions import (UnsupportedDomainError,
                                          ZeroResultantError)


def padic_abs_resultant(F_h: PolynomialMap, p: int) -> UltrametricValue:
    """
    ``|Res(F_h)|_p`` exactly.

    :raises ZeroResultantError: If the map is not regular.
    """
    if F_h.domain is not ScalarDomain.EXACT_RATIONAL:
        raise UnsupportedDomainError(operation='padic_abs_resultant',
                                     domain=F_h.domain.name)
    res = resultant_exact(F_h.leading_part())
    if not res:
        raise ZeroResultantError(p=p)
    return padic_abs(res, p)
