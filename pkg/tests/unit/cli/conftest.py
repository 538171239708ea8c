"""Fixtures for the command line unit tests."""

import pytest

LOWER_SCHEME = """\
scheme lower
color gray
init gray ray 2,0 1,0
rule gray +5,4 -> gray
segment - - 4/5 -4/5
"""


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    """Remove configuration variables set outside the tests.

    :param monkeypatch: the pytest monkeypatch fixture.
    """
    for name in ("VSG_BUDGET_MIB", "VSG_COVERAGE", "VSG_MAX_COUNTEREXAMPLES"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def lower_scheme_text() -> str:
    """Return a scheme file for the lower segment of ``asym-additive``.

    :return: the scheme text.
    """
    return LOWER_SCHEME
