"""Workbench for finite rings, algebras, and semirings.

The package builds finite-dimensional algebras from structure-constant
tables, analyzes their centers and essentiality properties, and exposes
the whole toolkit through the ``ce-lab`` command line interface.
"""

__version__ = "0.1.0"
