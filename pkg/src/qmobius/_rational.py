"""Construct Fractions from numerator/denominator pairs already in lowest terms."""

from fractions import Fraction

if hasattr(Fraction, "_from_coprime_ints"):
    from_coprime = Fraction._from_coprime_ints
else:
    try:
        Fraction(1, 1, _normalize=False)
    except TypeError:
        def from_coprime(n, d):
            return Fraction(n, d)
    else:
        def from_coprime(n, d):
            return Fraction(n, d, _normalize=False)
