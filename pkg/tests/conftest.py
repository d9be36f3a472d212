import pytest

from latticewalk import _kernels


@pytest.fixture(params=["numba", "numpy"])
def backend(request, monkeypatch):
    """Run the test once per kernel backend."""
    kern = _kernels.get_backend(request.param)
    monkeypatch.setattr(_kernels, "BACKEND", kern)
    return kern
