import pytest

import tetcycles as tc
from tetcycles.errors import ParseError, UnknownSimplex


def test_mesh_round_trip(s3, t3, rp3c):
    for c in (s3, t3, rp3c):
        text = tc.write_mesh_text(c)
        c2 = tc.parse_mesh_text(text)
        assert c2.tets == c.tets and c2.n0 == c.n0
        assert tc.write_mesh_text(c2) == text


def test_mesh_comments_and_blanks():
    text = "# a mesh\n\ntetmesh 5 2  # header\n tet 0 1 2 3\ntet 0 1 2 4\n\n"
    c = tc.parse_mesh_text(text)
    assert c.n3 == 2 and c.n0 == 5


@pytest.mark.parametrize(
    "text",
    [
        "",
        "tetmesh 5\ntet 0 1 2 3\n",
        "mesh 5 1\ntet 0 1 2 3\n",
        "tetmesh 5 1\ntet 0 1 2\n",
        "tetmesh 5 1\ntet 0 1 2 x\n",
        "tetmesh 4 1\ntet 0 1 2 4\n",  # id out of range
        "tetmesh 5 2\ntet 0 1 2 3\n",  # count mismatch
        "tetmesh -1 0\n",
    ],
)
def test_mesh_parse_errors(text):
    with pytest.raises(ParseError):
        tc.parse_mesh_text(text)


def test_chain_round_trip(s3):
    x = tc.chain_of(s3, 1, [(0, 1), (1, 2), (0, 2)])
    text = tc.write_chain_text(x, s3)
    assert text == "chain 1 3\n0 1\n0 2\n1 2\n"
    assert tc.parse_chain_text(text, s3) == x


def test_chain_parse_errors(s3):
    with pytest.raises(ParseError):
        tc.parse_chain_text("chain 1 2\n0 1\n", s3)
    with pytest.raises(ParseError):
        tc.parse_chain_text("chain 4 0\n", s3)
    with pytest.raises(ParseError):
        tc.parse_chain_text("chain 1 2\n0 1\n1 0\n", s3)  # listed twice
    with pytest.raises(ParseError):
        tc.parse_chain_text("chain 1 1\n0 0\n", s3)
    with pytest.raises(UnknownSimplex):
        tc.parse_chain_text("chain 1 1\n0 9\n", s3)


def test_cochain_round_trip(s3):
    j = tc.Cochain(2, {0, 3, 7})
    text = tc.write_cochain_text(j, s3)
    assert tc.parse_cochain_text(text, s3) == j
    assert text.startswith("cochain 2 3\n")


def test_path_round_trip():
    text = tc.write_path_text([3, 1, 4, 1])
    assert text == "path 3\n3\n1\n4\n1\n"
    assert tc.parse_path_text(text) == [3, 1, 4, 1]
    # the weight trailer written by minpath output parses back fine
    out = tc.write_path_text([0, 1], weight=2.5)
    assert out.endswith("weight 2.5\n")
    assert tc.parse_path_text(out) == [0, 1]


def test_path_parse_errors():
    with pytest.raises(ParseError):
        tc.parse_path_text("path 1\n0\n")
    with pytest.raises(ParseError):
        tc.parse_path_text("path -1\n")
    with pytest.raises(ParseError):
        tc.parse_path_text("path 1\n0 1\n")


def test_weights_round_trip():
    table = {(0, 1): 2.0, (1, 2): 0.25}
    text = tc.write_weights_text(table)
    assert tc.parse_weights_text(text) == table
    assert tc.parse_weights_text("") == {}
    assert tc.parse_weights_text("edge 3 1 1.5\n") == {(1, 3): 1.5}


def test_weights_parse_errors():
    with pytest.raises(ParseError):
        tc.parse_weights_text("edge 0 1\n")
    with pytest.raises(ParseError):
        tc.parse_weights_text("edge 0 0 1.0\n")
    with pytest.raises(ParseError):
        tc.parse_weights_text("edge 0 1 x\n")
    with pytest.raises(ParseError):
        tc.parse_weights_text("edge 0 1 1.0\nedge 1 0 2.0\n")
