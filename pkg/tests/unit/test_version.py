"""This module tests the vector_subtraction version."""
import vector_subtraction


def test_version() -> None:
    """Test that the vector_subtraction version is as expected."""
    assert vector_subtraction.__version__ == "0.1.0"
