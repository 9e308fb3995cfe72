from hypothesis import strategies as st

from tevrsk.params import is_valid


def words(max_len=10, max_letter=4, min_len=0):
    return st.integers(1, max_letter).flatmap(
        lambda m: st.lists(st.integers(1, m), min_size=min_len, max_size=max_len).map(tuple)
    )


partitions = st.lists(st.integers(1, 6), max_size=5).map(lambda xs: tuple(sorted(xs, reverse=True)))


def valid_triples(r_values=(1, 2, 3), max_g=8, extra_r=2):
    out = []
    for r in r_values:
        for g in range(max_g + 1):
            for d in range(r, r * (g + extra_r) + 1, r):
                if is_valid(g, r, d):
                    out.append((g, r, d))
    return out


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[n])
