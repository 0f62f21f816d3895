"""Exact computational toolkit for graded rings built from Segre products.

Subpackages cover Hilbert series and local cohomology of weighted
polynomial rings (`hilbert`), extended numerical semigroups (`numsgp`),
degreewise linear algebra over Segre products (`gradedlin`), quiver
extraction and folding (`quivers`), Kronecker quiver combinatorics
(`kronecker`), and a batch CLI (`cli`).
"""

__version__ = "0.1.0"
