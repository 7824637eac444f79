import pytest

from ntotal import ring as make

ACCEPTANCE_RESULTS: dict[str, list[tuple[str, bool]]] = {}


@pytest.fixture
def R():
    """Ring from spec text."""
    return make


def record(criterion: str, label: str, ok: bool) -> None:
    ACCEPTANCE_RESULTS.setdefault(criterion, []).append((label, ok))
    print(f"criterion {criterion} [{label}]: {'PASS' if ok else 'FAIL'}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(ACCEPTANCE_RESULTS, key=int):
        results = ACCEPTANCE_RESULTS[crit]
        ok = all(r for _, r in results)
        failed = [label for label, r in results if not r]
        suffix = f" (failing: {', '.join(failed)})" if failed else ""
        terminalreporter.write_line(
            f"criterion {crit}: {'PASS' if ok else 'FAIL'} "
            f"[{sum(r for _, r in results)}/{len(results)} checks]{suffix}"
        )
