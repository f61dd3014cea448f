"""tropgroup: faithful monomial representations of tropical matrix groups."""

__version__ = "0.1.0"
