"""Verification toolkit for prime-power class counts of finite simple groups:
primitive prime divisors, torus catalogs, explicit bounds and brute-force
class-fusion oracles."""

__version__ = "0.1.0"
