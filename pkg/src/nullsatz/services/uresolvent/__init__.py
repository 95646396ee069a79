"""
u-resolvent solving for zero-dimensional systems.

Usage:
    from nullsatz.algebra import Ideal
    from nullsatz.services.uresolvent import u_resolvent, extract_points

    ideal = Ideal.from_strings("x1 x2", ["x1^2 + x2^2 - 2", "x1^2 - x2^2"])
    ur = u_resolvent(ideal)
    points = extract_points(ur)      # (1,1), (1,-1), (-1,1), (-1,-1)
"""

from .u_resolvent import LinearFactor, UResolvent, extract_points, liouville_substitute, u_resolvent

__all__ = ['LinearFactor', 'UResolvent', 'extract_points', 'liouville_substitute', 'u_resolvent']
