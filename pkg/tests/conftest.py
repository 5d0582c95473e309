"""Shared fixtures: the six standing test numbers and oracle plumbing.

The heavy acceptance computations are memoized per (key, threads) in a
session-scoped store so the determinism criterion can re-use the thread-1
results instead of recomputing them.
"""

from __future__ import annotations

import mpmath
import pytest

from bconvlab import RunConfig, algebraic_number

POLY_TEXT = {
    "golden": "x^2 - x - 1",
    "plastic": "x^3 - x - 1",
    "lehmer": "x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1",
    "threehalf": "2x - 3",
    "garsia": "x^3 - x - 2",
    "sqrt2": "x^2 - 2",
}

ALL_NAMES = tuple(POLY_TEXT)


@pytest.fixture(scope="session")
def numbers():
    return {name: algebraic_number(text) for name, text in POLY_TEXT.items()}


@pytest.fixture(scope="session")
def config():
    return RunConfig()


@pytest.fixture(scope="session")
def theta512(numbers):
    """512-bit approximations of each theta, found independently of the
    engine's root machinery (mpmath.polyroots on the raw coefficients)."""
    out = {}
    with mpmath.workprec(560):
        for name, a in numbers.items():
            roots = mpmath.polyroots([mpmath.mpf(c) for c in a.minpoly.coeffs],
                                     maxsteps=200, extraprec=200)
            real_above_one = [r for r in roots
                              if abs(mpmath.im(r)) < mpmath.mpf(2) ** -500
                              and mpmath.re(r) > 1]
            assert len(real_above_one) >= 1
            out[name] = mpmath.re(max(real_above_one, key=mpmath.re))
    return out


@pytest.fixture(scope="session")
def memo_store():
    """(key, threads) -> computed report, shared across the whole session."""
    return {}


# ----------------------------------------------------------------------
# acceptance scoreboard
# ----------------------------------------------------------------------

_CRITERIA: dict[int, tuple[str, bool, str]] = {}


def record_criterion(num: int, name: str, passed: bool, detail: str = "") -> None:
    _CRITERIA[num] = (name, passed, detail)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        name, passed, detail = _CRITERIA[num]
        verdict = "PASS" if passed else "FAIL"
        line = f"criterion {num:2d} {name:<24s} {verdict}"
        if detail:
            line += f"  ({detail})"
        tr.write_line(line)
