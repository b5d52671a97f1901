"""Exact census of monochromatic complete subgraphs in 2-colored complete graphs."""

__version__ = "0.1.0"
