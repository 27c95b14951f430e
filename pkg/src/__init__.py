"""
elliptio
Elliptic hypergeometric functions, integrals and term checks
"""

__version__ = "0.1.0"
