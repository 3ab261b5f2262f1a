"""Liaison-theoretic constructions of EGH witness ideals over prime fields."""

__version__ = "0.1.0"
