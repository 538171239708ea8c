"""Unit tests of the automaton area."""
