"""Unit tests of the oracle area."""
