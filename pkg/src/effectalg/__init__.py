"""Workbench for finite and symbolically infinite effect algebras.

Validates the defining axioms on explicit sum tables, builds concrete
orthomodular posets from set systems, decides structural and state-space
properties with exact rational arithmetic, enumerates all small algebras
up to isomorphism, and reproduces a family of infinite counterexamples
through finitely described witnesses.
"""

__version__ = "0.1.0"
