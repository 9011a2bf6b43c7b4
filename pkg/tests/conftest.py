import pytest

from veldkamp import build_g2, build_magic_line, build_veldkamp, extract_symplectic


@pytest.fixture(scope="session")
def g27():
    return build_g2(7)


@pytest.fixture(scope="session")
def v27(g27):
    return build_veldkamp(g27)


@pytest.fixture(scope="session")
def w27(v27):
    return extract_symplectic(v27)


@pytest.fixture(scope="session")
def magic_lines(v27, w27):
    return {g: build_magic_line(v27, g, w27) for g in range(1, 8)}


@pytest.fixture(scope="session")
def client():
    import warnings
    with warnings.catch_warnings():
        warnings.filterwarnings("ignore", message="Using `httpx` with")
        from fastapi.testclient import TestClient
    from veldkamp import service
    return TestClient(service.app)
