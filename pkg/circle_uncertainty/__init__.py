"""Angle / angular-momentum uncertainty bounds for states on the circle"""

__version__ = "1.0.0"
