"""SchurBound - dominance posets, Schur calculus in Chern variables, and Chern number lower bounds"""

__version__ = "0.1.0"
__author__ = "SchurBound contributors"
