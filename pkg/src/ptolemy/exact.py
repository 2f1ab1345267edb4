"""Exact-division guards shared by the counting and q-polynomial code.

Every division that the formulas claim is exact goes through here, so a test
can check both that the guards ran and that none of them ever tripped.
"""

from collections import Counter

guard_calls: Counter = Counter()


class ExactnessError(ArithmeticError):
    """A division that must be exact left a remainder."""


def exact_div(num: int, den: int, what: str) -> int:
    guard_calls[what] += 1
    q, r = divmod(num, den)
    if r:
        raise ExactnessError(f"{what}: {num} is not divisible by {den}")
    return q


def check_zero_remainder(remainder_is_zero: bool, what: str, detail: str = "") -> None:
    guard_calls[what] += 1
    if not remainder_is_zero:
        raise ExactnessError(f"{what}: nonzero remainder {detail}".rstrip())
