"""Unit tests of the model area."""
