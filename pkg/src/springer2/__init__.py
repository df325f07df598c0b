"""Exact combinatorics of the Springer correspondence in characteristic 2.

Subpackages cover: bipartitions (Weyl group characters), gap-constrained
symbols and their shift/addition structure, interval decompositions with the
F2 subset action, nilpotent orbit data with component groups for the five
classical families sp(2n), o(2n+1), o(2n), sp(2n)* and o(2n+1)*, the five
correspondence maps with full tables, and restriction-formula verification.
"""

__version__ = "0.1.0"
