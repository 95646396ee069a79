"""
nullsatz: exact elimination and Nullstellensatz certificates over the rationals.

Usage:
    from nullsatz.algebra import Ideal, parse
    from nullsatz.services.certificates import weak_nss

    ideal = Ideal.from_strings("x y", ["x*y - 1", "x"])
    result = weak_nss(ideal)          # Empty, with a verified certificate
"""

__version__ = "0.1.0"
