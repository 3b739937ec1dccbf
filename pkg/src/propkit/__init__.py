"""propkit: exact combinatorial algebra of composition products and Koszul duality."""

__version__ = "0.1.0"
