import numpy as np
import pytest

from adefusion import (
    NoPositiveHypergroupError,
    NotDefinedError,
    cayley_graph,
    multiply_qs,
    normal_form,
    quantum_symmetry_algebra,
    s_matrices,
)
from adefusion.ocneanu import cayley_dot, element_dims
from adefusion.golden import (
    A11_QS_DIM,
    E6_AMBI_POSITIONS,
    E6_QS_CLASS_A,
    E6_QS_CLASS_C,
    E6_QS_CLASS_L,
    E6_QS_CLASS_R,
    E6_QS_DIM,
    E6_QS_DSQ,
    E6_QS_DVEC,
    E6_QS_EQUAL_PAIRS,
    E6_QS_PRODUCTS,
    E6_QS_SUM_IDENTITIES,
    E6_S51,
    E8_QS_DIM,
)


def _pos(d, label):
    return d.label_to_position(label)


def _element_index(qs, la, lb):
    d = qs.diagram
    v = qs.nf[_pos(d, la), _pos(d, lb)]
    live = np.nonzero(v)[0]
    assert len(live) == 1 and v[live[0]] == 1, (la, lb)
    return int(live[0])


def test_dimension_and_names():
    qs = quantum_symmetry_algebra("E6")
    assert qs.dim == E6_QS_DIM
    assert qs.element_names == (
        "0⊗0", "0⊗1", "0⊗2", "0⊗5", "0⊗4", "0⊗3",
        "1⊗0", "1⊗1", "1⊗2", "1⊗5", "1⊗4", "1⊗3")
    assert qs.ambichiral == E6_AMBI_POSITIONS
    assert len(qs.canonical) == 12


def test_equal_pairs():
    qs = quantum_symmetry_algebra("E6")
    d = qs.diagram
    for p1, p2 in E6_QS_EQUAL_PAIRS:
        v1 = normal_form(qs, _pos(d, p1[0]), _pos(d, p1[1]))
        v2 = normal_form(qs, _pos(d, p2[0]), _pos(d, p2[1]))
        assert np.array_equal(v1, v2), (p1, p2)


def test_sum_identities():
    qs = quantum_symmetry_algebra("E6")
    d = qs.diagram
    for pair, parts in E6_QS_SUM_IDENTITIES.items():
        got = normal_form(qs, _pos(d, pair[0]), _pos(d, pair[1]))
        want = np.zeros(qs.dim, dtype=np.int64)
        for la, lb in parts:
            want[_element_index(qs, la, lb)] += 1
        assert np.array_equal(got, want), pair


def test_products():
    qs = quantum_symmetry_algebra("E6")
    for (x_pair, y_pair), parts in E6_QS_PRODUCTS.items():
        x = _element_index(qs, *x_pair)
        y = _element_index(qs, *y_pair)
        got = multiply_qs(qs, x, y)
        want = np.zeros(qs.dim, dtype=np.int64)
        for la, lb in parts:
            want[_element_index(qs, la, lb)] += 1
        assert np.array_equal(got, want), (x_pair, y_pair)


def test_partition_classes():
    qs = quantum_symmetry_algebra("E6")
    classes = {"A": E6_QS_CLASS_A, "L": E6_QS_CLASS_L,
               "R": E6_QS_CLASS_R, "C": E6_QS_CLASS_C}
    assert set(qs.partition) == set(classes)
    for key, reps in classes.items():
        want = sorted(_element_index(qs, la, lb) for la, lb in reps)
        assert sorted(qs.partition[key]) == want, key


def test_generators():
    qs = quantum_symmetry_algebra("E6")
    assert qs.element_names[qs.generator_left] == "1⊗0"
    assert qs.element_names[qs.generator_right] == "0⊗1"


def test_s_matrix_of_5x1():
    qs = quantum_symmetry_algebra("E6")
    idx = _element_index(qs, 5, 1)
    assert np.array_equal(s_matrices(qs)[idx], np.array(E6_S51))


def test_element_dims():
    qs = quantum_symmetry_algebra("E6")
    dims = element_dims(qs)
    for (la, lb), want in E6_QS_DVEC.items():
        assert dims[_element_index(qs, la, lb)] == want, (la, lb)
    assert (dims ** 2).sum() == E6_QS_DSQ


def test_unit_element():
    qs = quantum_symmetry_algebra("E6")
    unit = _element_index(qs, 0, 0)
    for y in range(qs.dim):
        prod = multiply_qs(qs, unit, y)
        want = np.zeros(qs.dim, dtype=np.int64)
        want[y] = 1
        assert np.array_equal(prod, want), y


def test_cayley_solid_restricted_to_left_column():
    # left multiplication by the generator, restricted to the a(x)0
    # elements, draws the diagram itself
    qs = quantum_symmetry_algebra("E6")
    d = qs.diagram
    solid, dashed = qs.generator_matrices()
    col = [_element_index(qs, int(d.vertex_labels[p]), 0) for p in range(6)]
    sub = solid[np.ix_(col, col)]
    assert np.array_equal(sub, d.adjacency)
    assert not np.array_equal(dashed[np.ix_(col, col)], d.adjacency)


def test_cayley_outputs():
    qs = quantum_symmetry_algebra("E6")
    g = cayley_graph(qs)
    assert g["nodes"] == list(qs.element_names)
    assert all(w >= 1 for _, _, w in g["solid"])
    assert all(w >= 1 for _, _, w in g["dashed"])
    text = cayley_dot(qs)
    assert text.startswith("graph cayley {")
    assert text.rstrip().endswith("}")
    assert 'n11 [label="1⊗3"];' in text


def test_a11_dimension_and_merged_generators():
    qs = quantum_symmetry_algebra("A11")
    assert qs.dim == A11_QS_DIM
    assert qs.generator_left == qs.generator_right


def test_e8_dimension():
    assert quantum_symmetry_algebra("E8").dim == E8_QS_DIM


def test_undefined_graphs():
    with pytest.raises(NotDefinedError):
        quantum_symmetry_algebra("D4")
    with pytest.raises(NoPositiveHypergroupError):
        quantum_symmetry_algebra("E7")
