"""
hyperoct - Exact computation of the statistic L on hyperoctahedral groups and
exhaustive verification of its signed descent-class generating functions.
"""

__version__ = '0.1.0'
