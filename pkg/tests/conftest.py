"""Brute-force oracles shared by the test modules.

They deliberately avoid the package's fast paths (packed orbits, Schreier
generators, distinct-degree factorization) so that agreement means something.
"""

import itertools
from collections import deque

import pytest

from braidrack import perm as P


def naive_step(op, t, i, sign):
    """sigma_i^sign on a tuple, straight from the formula (1-based i)."""
    t = list(t)
    a, b = t[i - 1], t[i]
    if sign == 1:
        t[i - 1], t[i] = b, op[a][b]
    else:
        u = next(u for u in range(len(op)) if op[u][a] == b)
        t[i - 1], t[i] = u, a
    return tuple(t)


def naive_orbit(op, seed):
    seed = tuple(seed)
    n = len(seed)
    seen = {seed}
    queue = deque([seed])
    while queue:
        t = queue.popleft()
        for i in range(1, n):
            for s in (1, -1):
                u = naive_step(op, t, i, s)
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    return seen


def naive_stabilizer_image(op, seed, canon=None):
    """All p in S_n with (seed, id) -> (seed, p) in the action on X^n x S_n.

    ``canon`` maps tuples to class representatives, for actions on a quotient.
    """
    canon = canon or tuple
    seed = canon(seed)
    n = len(seed)
    start = (seed, P.identity(n))
    seen = {start}
    queue = deque([start])
    while queue:
        t, p = queue.popleft()
        for i in range(1, n):
            tr = P.transposition(i - 1, i, n)
            for s in (1, -1):
                nxt = (canon(naive_step(op, t, i, s)), P.compose(p, tr))
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return {p for t, p in seen if t == seed}


def naive_orbit_count(op, tuples):
    """Number of B_n-orbits met by ``tuples`` (union-find over single moves)."""
    parent = {}

    def find(a):
        while parent.setdefault(a, a) != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    tuples = [tuple(t) for t in tuples]
    for t in tuples:
        for i in range(1, len(t)):
            u = naive_step(op, t, i, 1)
            ra, rb = find(t), find(u)
            if ra != rb:
                parent[ra] = rb
    return len({find(t) for t in tuples})


def naive_subrack_generates(op, subset):
    k = len(op)
    cur = set(subset)
    if not cur:
        return False
    while True:
        new = set(cur)
        for a in cur:
            for b in cur:
                new.add(op[a][b])
                new.add(next(u for u in range(k) if op[u][b] == a))
        if new == cur:
            return len(cur) == k
        cur = new


def naive_is_rack(op):
    k = len(op)
    for y in range(k):
        if sorted(op[x][y] for x in range(k)) != list(range(k)):
            return False
    for x, y, z in itertools.product(range(k), repeat=3):
        if op[op[z][x]][y] != op[op[z][y]][op[x][y]]:
            return False
    return True


@pytest.fixture
def s3_transpositions():
    from braidrack.rack import transposition_rack
    return transposition_rack(3)


# -- acceptance report ----------------------------------------------------------------
#
# Tests in test_acceptance.py named test_criterion_NN_* call the ``criterion``
# fixture with a short detail string; the outcome of each is printed as one
# line at the end of the run, whatever the capture settings.

_CRITERIA = []


@pytest.fixture
def criterion(request):
    def note(detail):
        request.node.user_properties.append(("detail", str(detail)))
        print(detail)
    return note


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    name = report.nodeid.rsplit("::", 1)[-1]
    if "test_acceptance.py" not in report.nodeid or not name.startswith("test_criterion_"):
        return
    number = int(name.split("_")[2])
    details = [v for k, v in report.user_properties if k == "detail"]
    _CRITERIA.append((number, report.outcome, report.duration, details[-1] if details else ""))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, outcome, duration, detail in sorted(_CRITERIA):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {verdict}  ({duration:.2f} s)  {detail}")
