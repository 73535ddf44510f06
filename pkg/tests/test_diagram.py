import json
import math

import numpy as np
import pytest

from adefusion import (
    Family,
    UnsupportedDiagramError,
    ascii_diagram,
    build_diagram,
    coxeter_exponents,
    diagram_json,
    graph_norm,
    parse_graph_name,
    perron_frobenius,
    q_number,
    spectral_data,
)
from adefusion.golden import E6_CHAR_POLY, E6_EXPONENTS, E6_LABELS


def test_parse_graph_name():
    d = parse_graph_name("E6")
    assert d.name == "E6"
    assert d.family is Family.E
    assert d.rank == 6
    assert parse_graph_name(" a11 ").name == "A11"
    assert parse_graph_name("d4").coxeter_number == 6


def test_bad_names_rejected():
    for text in ("F4", "E9", "A0", "D3", "A", "Exx", ""):
        with pytest.raises(UnsupportedDiagramError):
            parse_graph_name(text)
    with pytest.raises(UnsupportedDiagramError):
        build_diagram(Family.AFFINE_D, 4)
    with pytest.raises(UnsupportedDiagramError):
        build_diagram("Q", 3)


def test_e6_layout():
    d = build_diagram("E", 6)
    assert d.vertex_labels == E6_LABELS
    g = d.adjacency
    assert np.array_equal(g, g.T)
    assert sorted(g.sum(axis=0).tolist()) == [1, 1, 1, 2, 2, 3]
    # the trivalent vertex sits at position 2 and carries label "2"
    assert g.sum(axis=0)[2] == 3
    assert d.vertex_labels[2] == "2"
    assert d.label_to_position("5") == 3
    assert d.label_to_position(3) == 5
    assert sorted(d.neighbors(2)) == [1, 3, 5]


def test_coxeter_numbers():
    assert build_diagram("A", 11).coxeter_number == 12
    assert build_diagram("E", 6).coxeter_number == 12
    assert build_diagram("D", 5).coxeter_number == 8
    assert build_diagram("E", 8).coxeter_number == 30


def test_graph_norms():
    a3 = build_diagram("A", 3)
    assert abs(graph_norm(a3) - math.sqrt(2)) < 1e-12
    e6 = build_diagram("E", 6)
    assert abs(graph_norm(e6) - (math.sqrt(3) + 1) / math.sqrt(2)) < 1e-12
    top = max(abs(np.linalg.eigvalsh(e6.adjacency.astype(float))))
    assert abs(graph_norm(e6) - top) < 1e-9


def test_perron_frobenius_small():
    assert np.allclose(perron_frobenius(build_diagram("A", 1)), [1.0])
    a3 = build_diagram("A", 3)
    assert np.allclose(perron_frobenius(a3), [1.0, math.sqrt(2), 1.0])


def test_perron_frobenius_e6_q_numbers():
    v = perron_frobenius(build_diagram("E", 6))
    q = [q_number(n, 12) for n in range(4)]
    want = [q[1], q[2], q[3], q[2], q[1], q[3] / q[2]]
    assert np.allclose(v, want, atol=1e-9)


def test_characteristic_polynomial_e6():
    d = build_diagram("E", 6)
    coeffs = np.poly(d.adjacency.astype(float))
    assert np.allclose(coeffs, E6_CHAR_POLY, atol=1e-9)


def test_exponents():
    assert coxeter_exponents(build_diagram("E", 6)) == E6_EXPONENTS
    for name in ("A5", "D4", "E8"):
        d = parse_graph_name(name)
        eig = np.sort(np.linalg.eigvalsh(d.adjacency.astype(float)))
        want = np.sort([2 * math.cos(math.pi * m / d.coxeter_number)
                        for m in coxeter_exponents(d)])
        assert np.allclose(eig, want, atol=1e-9), name


def test_spectral_data_residual():
    d = build_diagram("D", 6)
    s = spectral_data(d)
    g = d.adjacency.astype(float)
    res = g @ s.perron_frobenius - s.norm * s.perron_frobenius
    assert np.max(np.abs(res)) < 1e-9
    assert s.exponents == (1, 3, 5, 7, 9, 5)


def test_q_numbers():
    assert abs(q_number(2, 12) - 2 * math.cos(math.pi / 12)) < 1e-12
    assert abs(q_number(3, 4) - 1.0) < 1e-12
    assert abs(q_number(1, 7) - 1.0) < 1e-12
    with pytest.raises(ValueError):
        q_number(1, 1)


def test_ascii_diagram_e6():
    lines = ascii_diagram(build_diagram("E", 6)).split("\n")
    assert lines[2] == "0 -- 1 -- 2 -- 5 -- 4"
    assert lines[0].strip() == "3"
    assert lines[0].index("3") == lines[2].index("2")


def test_diagram_json_roundtrip():
    d = build_diagram("A", 4)
    data = json.loads(diagram_json(d))
    assert data["labels"] == ["0", "1", "2", "3"]
    assert np.array_equal(np.array(data["adjacency"]), d.adjacency)
    assert data["coxeter_number"] == 5
