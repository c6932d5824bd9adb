from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import strategies as st

from parbun.parabolic import MarkedCurve, MarkedPoint, ParaLine, SplitBundle

_criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    key = (mark.args[0], mark.args[1])
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        _criteria[key] = "PASS" if rep.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (num, title), status in sorted(_criteria.items()):
        terminalreporter.write_line(f"criterion {num}: {status}  {title}")


@st.composite
def curves(draw, max_points=3, max_n=3, max_r=6):
    k = draw(st.integers(1, max_points))
    return MarkedCurve(
        MarkedPoint(f"p{i}", draw(st.integers(1, max_n)), draw(st.integers(1, max_r)))
        for i in range(k)
    )


@st.composite
def pieces_on(draw, curve, min_deg=-6, max_deg=6):
    return ParaLine(
        draw(st.integers(min_deg, max_deg)),
        [Fraction(draw(st.integers(0, r - 1)), r) for r in curve.divisibilities],
    )


@st.composite
def bundles(draw, curve=None, max_rank=3):
    if curve is None:
        curve = draw(curves())
    rank = draw(st.integers(1, max_rank))
    return SplitBundle(curve, [draw(pieces_on(curve)) for _ in range(rank)])


@st.composite
def bundle_pairs(draw, max_rank=2):
    curve = draw(curves())
    return draw(bundles(curve, max_rank)), draw(bundles(curve, max_rank))


@st.composite
def grid_vectors(draw, curve, lo=-2, hi=2):
    return [Fraction(draw(st.integers(lo * r, hi * r)), r) for r in curve.divisibilities]


def hall_oracle(s, t):
    """Perfect matching in the graph joining s_i to t_j whenever s_i <= t_j."""
    G = nx.Graph()
    left = [("s", i) for i in range(len(s))]
    G.add_nodes_from(left, bipartite=0)
    G.add_nodes_from((("t", j) for j in range(len(t))), bipartite=1)
    G.add_edges_from((("s", i), ("t", j)) for i, a in enumerate(s) for j, b in enumerate(t) if a <= b)
    matching = nx.bipartite.maximum_matching(G, top_nodes=left)
    return len(matching) // 2 == len(s)
