from pathlib import Path

import pytest

from chadwsd.lexicon import Lexicon, StemTable, load_lexicon

DATA = Path(__file__).parent / "data"

_ACCEPTANCE = []


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def toy_lexicon() -> Lexicon:
    return load_lexicon(DATA / "toy_lexicon.txt", StemTable())


class _Recorder:
    """Record one pass/fail line per acceptance criterion."""

    def _emit(self, status, criterion, detail):
        line = f"[{status}] criterion {criterion}: {detail}"
        _ACCEPTANCE.append(line)
        print(line)
        return line

    def __call__(self, criterion, ok, detail=""):
        line = self._emit("PASS" if ok else "FAIL", criterion, detail)
        assert ok, line

    def skip(self, criterion, detail):
        self._emit("SKIP", criterion, detail)
        pytest.skip(detail)


@pytest.fixture
def acceptance():
    return _Recorder()


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
