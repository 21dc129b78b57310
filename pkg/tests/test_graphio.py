import pytest

from sdncg import GraphParseError, clique, dump_json, dump_text, load_graph, parse_json, parse_text, path


def test_text_round_trip():
    for g in (path(5), clique(4)):
        assert parse_text(dump_text(g)) == g


def test_json_round_trip():
    for g in (path(5), clique(4)):
        assert parse_json(dump_json(g)) == g


def test_text_format_shape():
    text = dump_text(path(3))
    assert text == "3 2\n0 1\n1 2\n"


def test_parse_text_tolerates_blank_lines():
    assert parse_text("3 2\n0 1\n\n1 2\n") == path(3)


def test_parse_error_names_line():
    with pytest.raises(GraphParseError, match="line 3"):
        parse_text("3 2\n0 1\n1 x\n")
    with pytest.raises(GraphParseError, match="line 2"):
        parse_text("3 2\n1 0\n1 2\n")  # u < v required
    with pytest.raises(GraphParseError, match="line 1"):
        parse_text("nope\n")


def test_edge_count_mismatch():
    with pytest.raises(GraphParseError, match="announced"):
        parse_text("3 2\n0 1\n")


def test_invalid_graph_reported():
    with pytest.raises(GraphParseError, match="connected"):
        parse_text("4 2\n0 1\n2 3\n")


def test_json_validation():
    with pytest.raises(GraphParseError):
        parse_json("[1, 2]")
    with pytest.raises(GraphParseError):
        parse_json('{"n": 3}')
    with pytest.raises(GraphParseError, match="edge #1"):
        parse_json('{"n": 3, "edges": [[0, 1], [1]]}')


def test_load_graph_sniffs_extension(tmp_path):
    g = clique(4)
    t = tmp_path / "g.txt"
    j = tmp_path / "g.json"
    t.write_text(dump_text(g))
    j.write_text(dump_json(g))
    assert load_graph(str(t)) == g
    assert load_graph(str(j)) == g


def test_load_graph_missing_file(tmp_path):
    with pytest.raises(GraphParseError, match="cannot read"):
        load_graph(str(tmp_path / "absent.txt"))
