"""Special functions"""
from .bessel import bessel_i, bessel_i_sequence, bessel_ratio

__all__ = ['bessel_i', 'bessel_i_sequence', 'bessel_ratio']
