"""Small shared helpers."""

from fractions import Fraction


def is_prime(n: int) -> bool:
    """Trial-division primality test, adequate for the small moduli used here."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def as_fraction(x) -> Fraction:
    """Coerce an int or Fraction to Fraction, rejecting floats (exactness)."""
    if isinstance(x, bool):
        raise TypeError("boolean is not a rational number")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    raise TypeError(f"exact rational expected, got {x!r}")


def as_int(x) -> int:
    """Coerce to int, rejecting anything with a fractional part or a float."""
    if isinstance(x, bool):
        raise TypeError("boolean is not an integer")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    raise TypeError(f"integer expected, got {x!r}")
