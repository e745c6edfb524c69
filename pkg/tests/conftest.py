import pytest


def pytest_configure(config):
    config.cp2lg_acceptance = {}


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    """Every test gets its own cache directory."""
    monkeypatch.setenv("CP2LG_CACHE_DIR", str(tmp_path / "cache"))
    return tmp_path / "cache"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "cp2lg_acceptance", {})
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(lines):
        terminalreporter.write_line(lines[n])
