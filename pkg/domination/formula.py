"""Closed-form domination number of U_n^1(g)."""

from execution.models.errors import ParameterDomainError


def gamma_g_formula(n: int, g: int) -> int:
    """gamma_g = ceil((n-1)/3) if 3 | g, else ceil(n/3)."""
    if g % 2 == 0 or not 3 <= g <= n - 1:
        raise ParameterDomainError(
            f"gamma_g needs odd g in [3, n-1], got g={g}, n={n}",
            constraint="g odd, 3 <= g <= n-1",
            params={"n": n, "g": g},
        )
    if g % 3 == 0:
        return -(-(n - 1) // 3)
    return -(-n // 3)


def ceil_third(g: int) -> int:
    """ceil(g/3): the least domination number on the g-cycle side of U_n^k(g)."""
    return -(-g // 3)
