import pytest

from multihurwitz import characters

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv(characters.CACHE_ENV, str(tmp_path / "cache"))
    characters.clear_memo()
    yield tmp_path / "cache"
    characters.clear_memo()


@pytest.fixture
def criterion():
    """Record one acceptance line, then assert."""

    def record(label: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else ""))
        assert ok, f"{label}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
