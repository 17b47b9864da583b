import pytest

from sysamds.classify import (
    WEIGHT_CLASSIFIED_PAIRS,
    verify_p_classification,
    verify_w_classification,
)
from sysamds.systematic import enumerate_systematic_amds


@pytest.fixture(scope="session")
def enumerated():
    """Full enumerations of the six parameter pairs with d >= 3 and >= 4 words."""
    return {pair: enumerate_systematic_amds(*pair) for pair in WEIGHT_CLASSIFIED_PAIRS}


@pytest.fixture(scope="session")
def w_class_report():
    return verify_w_classification()


@pytest.fixture(scope="session")
def p_class_report():
    return verify_p_classification(9)
