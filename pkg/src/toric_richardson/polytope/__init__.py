"""Exact lattice polytopes and the moment polytopes of toric Richardson varieties."""
