"""Unit tests of the analysis area."""
