"""Exact arithmetic for polycyclic monoids, their topology tau_mi, and a
dense extension of P_2 by filter points."""

__version__ = "0.1.0"
