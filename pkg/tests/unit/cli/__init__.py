"""Unit tests of the cli area."""
