"""Unit tests of the periodicity area."""
