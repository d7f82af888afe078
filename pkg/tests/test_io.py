import numpy as np
import pytest

from graphsurf import Graph, GraphError, complete
from graphsurf.io import (
    edge_list_text,
    graph_json_text,
    parse_edge_list,
    parse_graph_json,
    read_graph,
    read_potential_file,
    write_edge_list,
    write_graph_json,
)


def test_edge_list_round_trip(tmp_path):
    adj = np.zeros((4, 4))
    adj[0, 1] = adj[1, 0] = 0.1
    adj[1, 2] = adj[2, 1] = 2.0
    adj[2, 3] = adj[3, 2] = 1.0 / 3.0
    adj[0, 0] = 0.75
    g = Graph(adj)
    p = tmp_path / "g.edges"
    write_edge_list(g, p)
    back = read_graph(p)[0]
    assert np.array_equal(back.adj, g.adj)


def test_edge_list_to_json_round_trip(tmp_path):
    g = parse_edge_list("1 2 0.1\n2 3\n3 1 1.5\n")
    p = tmp_path / "g.json"
    write_graph_json(g, p)
    back = read_graph(p)[0]
    assert np.array_equal(back.adj, g.adj)


def test_edge_list_defaults_and_comments():
    g = parse_edge_list("# triangle\n1 2\n2 3\n\n3 1\n")
    assert g.n == 3 and g.unweighted


def test_edge_list_loop():
    g = parse_edge_list("1 1 2.0\n1 2\n")
    assert g.adj[0, 0] == 2.0


def test_arbitrary_labels_are_relabeled():
    g = parse_edge_list("10 30\n30 20\n")
    assert g.n == 3
    assert g.labels == (10, 20, 30)
    # 10 -> 1, 20 -> 2, 30 -> 3: edges (1,3) and (3,2)
    assert g.adj[0, 2] == 1.0 and g.adj[2, 1] == 1.0 and g.adj[0, 1] == 0.0


def test_duplicate_pair_rejected():
    with pytest.raises(GraphError, match="duplicate"):
        parse_edge_list("1 2\n2 1 0.5\n")


def test_empty_edge_list_rejected():
    with pytest.raises(GraphError, match="empty"):
        parse_edge_list("# nothing\n")


def test_malformed_line_rejected():
    with pytest.raises(GraphError, match="line 1"):
        parse_edge_list("1 two\n")


def test_json_with_potential():
    g, u = parse_graph_json('{"n": 2, "edges": [[1, 2, 1.0]], "potential": [0.5, 1.5]}')
    assert g.n == 2
    assert u is not None and list(u.sigma) == [0.5, 1.5]


def test_json_potential_length_mismatch():
    with pytest.raises(GraphError, match="potential"):
        parse_graph_json('{"n": 2, "edges": [[1, 2]], "potential": [1.0]}')


def test_json_missing_keys():
    with pytest.raises(GraphError):
        parse_graph_json('{"edges": []}')


def test_json_text_round_trip():
    g = complete(4)
    back, _ = parse_graph_json(graph_json_text(g))
    assert np.array_equal(back.adj, g.adj)
    back2 = parse_edge_list(edge_list_text(g))
    assert np.array_equal(back2.adj, g.adj)


def test_read_potential_file(tmp_path):
    p = tmp_path / "u.txt"
    p.write_text("0.5 1.0\n2.5\n")
    u = read_potential_file(p, 3)
    assert list(u.sigma) == [0.5, 1.0, 2.5]
    q = tmp_path / "u.json"
    q.write_text("[1, 2, 3]")
    assert list(read_potential_file(q, 3).sigma) == [1.0, 2.0, 3.0]
    with pytest.raises(GraphError, match="expected 2"):
        read_potential_file(p, 2)
