import pytest
from hypothesis import given, strategies as st

from metricdim.dsl import Leaf, SpecError, Subdiv, eval_spec, parse_spec


def test_nested():
    assert parse_spec("subdiv(complete(7))") == Subdiv(Leaf("complete", (7,)))


def test_chain():
    assert parse_spec("chain(4,6)") == Leaf("chain", (4, 6))


def test_whitespace_insensitive():
    assert parse_spec("  subdiv ( cmm( 7 , 1 ) ) ") == Subdiv(Leaf("cmm", (7, 1)))


@pytest.mark.parametrize("text, offset, fragment", [
    ("subdiv(frobnicate(3))", 7, "unknown constructor"),
    ("complete(3,4)", 0, "takes 1"),
    ("torus(4)", 0, "takes 2"),
    ("chain(3,5)", 6, "c1 >= 4"),
    ("chain(4,5)", 0, "c2 >= c1 + 2"),
    ("cycle(2)", 6, "n >= 3"),
    ("cmm(3,2)", 0, "2k <= n"),
    ("Complete(3)", 0, "unexpected character"),
    ("complete(-1)", 9, "unexpected character"),
    ("complete(3", 10, "expected ')'"),
    ("complete(3))", 11, "trailing"),
    ("subdiv(4)", 7, "expected name"),
    ("", 0, "expected name"),
])
def test_errors_with_offsets(text, offset, fragment):
    with pytest.raises(SpecError) as info:
        parse_spec(text)
    assert info.value.offset == offset
    assert fragment in str(info.value)


def test_depth_limit():
    ok = "subdiv(" * 7 + "path(2)" + ")" * 7
    parse_spec(ok)
    with pytest.raises(SpecError, match="nesting"):
        parse_spec("subdiv(" * 8 + "path(2)" + ")" * 8)


leaves = st.one_of(
    st.builds(lambda n: Leaf("complete", (n,)), st.integers(1, 50)),
    st.builds(lambda n, k: Leaf("cmm", (n, k)), st.integers(2, 50), st.integers(0, 1)),
    st.builds(lambda n: Leaf("star", (n,)), st.integers(2, 50)),
    st.builds(lambda n: Leaf("cycle", (n,)), st.integers(3, 50)),
    st.builds(lambda n: Leaf("path", (n,)), st.integers(1, 50)),
    st.builds(lambda a, b: Leaf("torus", (a, b)), st.integers(3, 9), st.integers(3, 9)),
    st.builds(lambda a, g: Leaf("chain", (a, a + g)), st.integers(4, 9), st.integers(2, 5)),
)


@given(leaves, st.integers(0, 7))
def test_pretty_print_round_trip(leaf, depth):
    tree = leaf
    for _ in range(depth):
        tree = Subdiv(tree)
    assert parse_spec(str(tree)) == tree


class TestEval:
    def test_subdivided_k4(self):
        c = eval_spec("subdiv(complete(4))")
        assert (c.graph.n, c.graph.m) == (10, 12)
        assert c.labeling is not None

    def test_cmm(self):
        assert eval_spec("cmm(7,1)").graph.m == 20

    def test_torus(self):
        g = eval_spec("torus(4,4)").graph
        assert g.n == 16 and all(g.degree(v) == 4 for v in range(16))

    def test_chain_keeps_layout(self):
        c = eval_spec("chain(4,6)")
        assert c.layout is not None and c.graph.n == 56

    def test_deterministic(self):
        assert eval_spec("subdiv(star(5))").graph == eval_spec("subdiv(star(5))").graph
