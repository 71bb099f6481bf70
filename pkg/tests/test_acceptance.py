"""Acceptance criteria 1-14 for every fourth root of unity.

Each criterion prints one PASS/FAIL line; the lines are repeated in the terminal summary.
"""
import pytest

from conftest import ACCEPTANCE_LINES, ZETA_TOKENS
from hopfext.acceptance import CRITERIA, run_criterion

NUMBERS = [number for number, _, _ in CRITERIA]


def _check(number, zeta, variant="A"):
    result = run_criterion(number, zeta, variant)
    line = result.line(zeta) if variant == "A" else f"{result.line(zeta)} [variant {variant}]"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert result.passed, "\n".join([result.detail, *result.failures])


def test_fourteen_criteria():
    assert NUMBERS == list(range(1, 15))


@pytest.mark.parametrize("number", NUMBERS)
@pytest.mark.parametrize("zeta", ZETA_TOKENS)
def test_criterion(number, zeta):
    _check(number, zeta)


@pytest.mark.parametrize("number", NUMBERS)
def test_criterion_on_transported_variant(number):
    # the same criteria, evaluated on the structure constants of B' pulled back along f
    _check(number, "-1", "Aprime")
