"""Shared fixtures: corpus instances built once per session."""

import pytest

from reesgor import corpus


@pytest.fixture(scope="session")
def hr():
    return corpus.build_hochster_roberts()


@pytest.fixture(scope="session")
def two_planes():
    return corpus.build_two_planes()


@pytest.fixture(scope="session")
def ideal_xy():
    return corpus.EXAMPLES["idealization_xy"]()


@pytest.fixture(scope="session")
def ideal_x2y3():
    return corpus.EXAMPLES["idealization_x2y3"]()


@pytest.fixture(scope="session")
def regular_base():
    return corpus.build_regular_base()


@pytest.fixture(scope="session")
def corpus_instances(hr, two_planes, ideal_xy, ideal_x2y3, regular_base):
    return {
        "hochster_roberts": hr,
        "two_planes": two_planes,
        "idealization_xy": ideal_xy,
        "idealization_x2y3": ideal_x2y3,
        "regular_base": regular_base,
    }
