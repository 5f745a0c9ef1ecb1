from __future__ import annotations

import pytest

from opetokit import from_bicategory, from_category
from opetokit.fixtures import (
    arrow_bicategory,
    idempotent_bicategory,
    sign_bicategory,
    terminal_bicategory,
    z2_category,
)


@pytest.fixture(scope="session")
def sign():
    return sign_bicategory()


@pytest.fixture(scope="session")
def sign_op(sign):
    return from_bicategory(sign)


@pytest.fixture(scope="session")
def idem():
    return idempotent_bicategory()


@pytest.fixture(scope="session")
def idem_op(idem):
    return from_bicategory(idem)


@pytest.fixture(scope="session")
def arrow():
    return arrow_bicategory()


@pytest.fixture(scope="session")
def arrow_op(arrow):
    return from_bicategory(arrow)


@pytest.fixture(scope="session")
def terminal():
    return terminal_bicategory()


@pytest.fixture(scope="session")
def terminal_op(terminal):
    return from_bicategory(terminal)


@pytest.fixture(scope="session")
def z2cat():
    return z2_category()


@pytest.fixture(scope="session")
def z2_op(z2cat):
    return from_category(z2cat)
