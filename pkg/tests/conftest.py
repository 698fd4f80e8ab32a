from __future__ import annotations

import pytest

from zgkit import catalog


@pytest.fixture
def z2():
    return catalog.cyclic_group(2)


@pytest.fixture
def z3():
    return catalog.cyclic_group(3)


@pytest.fixture
def z6():
    return catalog.z2_times_z3()


@pytest.fixture
def u1():
    return catalog.u1()


@pytest.fixture
def rz2():
    return catalog.right_zero(2)


@pytest.fixture
def n2():
    return catalog.nilpotent_n2()


@pytest.fixture
def n2_1():
    return catalog.n2_1()


@pytest.fixture
def b2():
    return catalog.brandt_b2()


@pytest.fixture
def b2_1():
    return catalog.b2_1()


@pytest.fixture
def s3():
    return catalog.symmetric_s3()


@pytest.fixture
def trivial():
    return catalog.trivial_monoid()
