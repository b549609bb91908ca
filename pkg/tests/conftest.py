import pytest

import tetcycles as tc


@pytest.fixture(scope="session")
def s3():
    return tc.gen_s3()


@pytest.fixture(scope="session")
def t3():
    return tc.gen_t3(3)


@pytest.fixture(scope="session")
def t4():
    return tc.gen_t3(4)


@pytest.fixture(scope="session")
def rp3c():
    return tc.rp3()
