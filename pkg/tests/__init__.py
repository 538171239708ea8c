"""This subpackage contains tests of vector-subtraction."""
