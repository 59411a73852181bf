"""Visibility-graph embeddings of arbitrary graphs into X ∪ Z^2."""
