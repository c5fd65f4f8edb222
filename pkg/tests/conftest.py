import hypothesis.strategies as st
import pytest

from zappatic.words import Letter, Word

# criterion number -> list of (name, passed)
_CRITERIA: dict[int, list[tuple[str, bool]]] = {}


def letters(max_index=5, primes=True):
    return st.builds(
        Letter,
        st.integers(1, max_index),
        st.booleans() if primes else st.just(False),
        st.sampled_from([1, -1]),
    )


def raw_words(max_index=5, max_size=24, primes=True):
    return st.lists(letters(max_index, primes), max_size=max_size)


def words(max_index=5, max_size=24, primes=True):
    return raw_words(max_index, max_size, primes).map(Word)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call" and not (rep.when == "setup" and rep.failed):
        return
    passed = rep.passed and not hasattr(rep, "wasxfail")
    _CRITERIA.setdefault(mark.args[0], []).append((item.name, passed))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_CRITERIA):
        for name, passed in _CRITERIA[k]:
            terminalreporter.write_line(f"criterion {k}: {'PASS' if passed else 'FAIL'}  {name}")
