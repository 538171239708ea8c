"""Unit tests of the closed_form area."""
