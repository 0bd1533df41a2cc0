"""Run the docstring examples embedded in the library modules."""

from __future__ import annotations

import doctest

import qschur.series


def test_series_doctests():
    result = doctest.testmod(qschur.series)
    assert result.failed == 0
