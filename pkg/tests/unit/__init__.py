"""This subpackage contains unit tests of vector-subtraction."""
