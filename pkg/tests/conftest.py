import sys
from pathlib import Path

import pytest

from covrough import kernels

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(params=[k.BACKEND for k in kernels.backends()])
def backend(request, monkeypatch):
    """Route every kernel call through one backend."""
    chosen = next(k for k in kernels.backends() if k.BACKEND == request.param)
    monkeypatch.setattr(kernels, "for_width", lambda n, members=0: chosen if n <= 64 else kernels.pure)
    return chosen


def pytest_terminal_summary(terminalreporter):
    lines = []
    for key in ("passed", "failed"):
        for rep in terminalreporter.stats.get(key, []):
            if rep.when != "call":
                continue
            lines += [(rep.nodeid, v) for k, v in rep.user_properties if k == "acceptance"]
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, text in sorted(lines, key=lambda t: int(t[1].split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(text)
