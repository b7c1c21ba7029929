from itertools import product

import pytest
from hypothesis import strategies as st

from qschubert.partitions import BoxContext


def brute_force_lr(lam, mu, nu):
    """Count fillings of nu/lam with content mu that are semistandard and
    whose right-to-left, top-to-bottom reading word is a lattice word."""
    lam = list(lam) + [0] * (len(nu) - len(lam))
    if len(lam) > len(nu) or any(a > b for a, b in zip(lam, nu)):
        return 0
    if sum(nu) - sum(lam) != sum(mu):
        return 0
    cells = [(r, c) for r in range(len(nu)) for c in range(lam[r], nu[r])]
    labels = range(1, len(mu) + 1)
    count = 0
    for filling in product(labels, repeat=len(cells)):
        if any(filling.count(i) != mu[i - 1] for i in labels):
            continue
        T = dict(zip(cells, filling))
        ok = all(T[(r, c)] <= T[(r, c + 1)] for (r, c) in cells if (r, c + 1) in T)
        ok = ok and all(T[(r, c)] < T[(r + 1, c)] for (r, c) in cells if (r + 1, c) in T)
        if not ok:
            continue
        word = [T[(r, c)] for r in range(len(nu)) for c in reversed(range(lam[r], nu[r]))]
        seen = [0] * (len(mu) + 2)
        for x in word:
            seen[x] += 1
            if x > 1 and seen[x] > seen[x - 1]:
                ok = False
                break
        count += ok
    return count


SMALL_CONTEXTS = [BoxContext(k, n) for n in range(2, 7) for k in range(1, n)]


@st.composite
def contexts(draw, max_n=12):
    n = draw(st.integers(2, max_n))
    k = draw(st.integers(1, n - 1))
    return BoxContext(k, n)


@st.composite
def box_partitions(draw, ctx):
    return draw(st.sampled_from(ctx.basis))


@pytest.fixture(params=[(2, 4), (2, 5), (3, 6)], ids=lambda p: f"G{p}")
def small_ctx(request):
    return BoxContext(*request.param)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
