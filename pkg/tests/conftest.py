import pytest

from palin import _pykernels, kernels

BACKENDS = ["python"]
try:
    from palin import _ckernels  # noqa: F401

    BACKENDS.insert(0, "compiled")
except ImportError:
    pass


@pytest.fixture(params=BACKENDS)
def backend(request, monkeypatch):
    """Route intrinsic counting through one kernel backend."""
    impl = kernels.get_backend(request.param)
    for name in ("mark_bits", "tally", "merge_histogram"):
        monkeypatch.setattr(kernels, name, getattr(impl, name))
    return request.param


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
