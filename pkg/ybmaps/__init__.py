"""Exact Yang-Baxter maps, monodromy maps and Lax refactorization."""

__version__ = "0.1.0"
