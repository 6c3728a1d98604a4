import pytest

from cayleyviz.kernels import HAVE_FAST, backend, backend_name


def test_pure_backend_always_available():
    assert backend("pure").NAME == "pure"


def test_auto_resolves():
    assert backend_name("auto") in {"pure", "fast"}
    assert backend_name(None) == backend_name("auto")


def test_fast_backend_when_built():
    if HAVE_FAST:
        assert backend("fast").NAME == "fast"
        assert backend_name("auto") == "fast"
    else:
        with pytest.raises(RuntimeError):
            backend("fast")


def test_unknown_backend_rejected():
    with pytest.raises(ValueError):
        backend("turbo")
