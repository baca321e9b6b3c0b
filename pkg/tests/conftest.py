import pytest
from hypothesis import HealthCheck, settings

from gorkit import fixtures
from gorkit.gorenstein import certify_ig

settings.register_profile("gorkit", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("gorkit")


@pytest.fixture(scope="session")
def E1():
    return fixtures.e1()


@pytest.fixture(scope="session")
def E2():
    return fixtures.e2()


@pytest.fixture(scope="session")
def E3():
    return fixtures.e3()


@pytest.fixture(scope="session")
def E4():
    return fixtures.e4()


@pytest.fixture(scope="session")
def E5():
    return fixtures.e5()


@pytest.fixture(scope="session")
def K():
    return fixtures.field()


@pytest.fixture(scope="session")
def cert1(E1):
    return certify_ig(E1)


@pytest.fixture(scope="session")
def cert2(E2):
    return certify_ig(E2)


@pytest.fixture(scope="session")
def cert4(E4):
    return certify_ig(E4)


@pytest.fixture(scope="session")
def e4_ext():
    from gorkit.frobext import verify_frobenius

    return verify_frobenius(fixtures.e4_extension())


@pytest.fixture(scope="session")
def e1_ext(K, E1):
    from gorkit.frobext import AlgebraEmbedding, verify_frobenius

    return verify_frobenius(AlgebraEmbedding.by_labels(K, E1))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        ok, detail = RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
