import pytest

from skelpoly import (
    Tableau,
    build_crystal,
    descent_composition,
    evacuation,
    fundamental_system,
    graph_json,
    inner_crystal,
    lowering_operator,
    max_descent_length,
    partitions,
    qsym_fundamental,
    quasi_crystals,
    raising_operator,
    row_word,
    semistandard_tableaux,
    standard_tableaux,
    standardize,
    tableau_stats,
    to_dot,
    weight,
)
from skelpoly.poly import MultiPoly

# The bounded crystal on shape (3,2) with entries <= 3, edges keyed by rows.
FIGURE_EDGES = {
    (((1, 1, 1), (2, 2)), 2, ((1, 1, 1), (2, 3))),
    (((1, 1, 2), (2, 2)), 2, ((1, 1, 3), (2, 2))),
    (((1, 1, 1), (2, 3)), 2, ((1, 1, 1), (3, 3))),
    (((1, 1, 3), (2, 2)), 2, ((1, 1, 3), (2, 3))),
    (((1, 1, 3), (2, 3)), 2, ((1, 1, 3), (3, 3))),
    (((1, 1, 1), (3, 3)), 1, ((1, 1, 2), (3, 3))),
    (((1, 1, 2), (3, 3)), 1, ((1, 2, 2), (3, 3))),
    (((1, 1, 3), (3, 3)), 1, ((1, 2, 3), (3, 3))),
    (((1, 2, 2), (3, 3)), 1, ((2, 2, 2), (3, 3))),
    (((1, 2, 3), (3, 3)), 1, ((2, 2, 3), (3, 3))),
    # edges joining distinct quasi-crystals (drawn dotted)
    (((1, 1, 1), (2, 2)), 1, ((1, 1, 2), (2, 2))),
    (((1, 1, 1), (2, 3)), 1, ((1, 1, 2), (2, 3))),
    (((1, 1, 2), (2, 3)), 1, ((1, 2, 2), (2, 3))),
    (((1, 1, 2), (2, 3)), 2, ((1, 1, 2), (3, 3))),
    (((1, 1, 3), (2, 3)), 1, ((1, 2, 3), (2, 3))),
    (((1, 2, 2), (2, 3)), 2, ((1, 2, 3), (2, 3))),
    (((1, 2, 3), (2, 3)), 2, ((1, 2, 3), (3, 3))),
    (((2, 2, 2), (3, 3)), 2, ((2, 2, 3), (3, 3))),
}

FIGURE_CLASSES = {
    (3, 2): {
        ((1, 1, 1), (2, 2)),
        ((1, 1, 1), (2, 3)),
        ((1, 1, 1), (3, 3)),
        ((1, 1, 2), (3, 3)),
        ((1, 2, 2), (3, 3)),
        ((2, 2, 2), (3, 3)),
    },
    (2, 3): {
        ((1, 1, 2), (2, 2)),
        ((1, 1, 3), (2, 2)),
        ((1, 1, 3), (2, 3)),
        ((1, 1, 3), (3, 3)),
        ((1, 2, 3), (3, 3)),
        ((2, 2, 3), (3, 3)),
    },
    (2, 2, 1): {((1, 1, 2), (2, 3))},
    (1, 3, 1): {((1, 2, 2), (2, 3))},
    (1, 2, 2): {((1, 2, 3), (2, 3))},
}


def test_row_word():
    assert row_word(Tableau.of([[1, 1, 1, 2], [3, 4], [4]])) == (4, 3, 4, 1, 1, 1, 2)
    assert row_word(Tableau.of([[2, 5, 7]])) == (2, 5, 7)
    assert row_word(Tableau.of([[1, 1, 2, 5], [3, 8], [8]])) == (8, 3, 8, 1, 1, 2, 5)
    with pytest.raises(ValueError):
        row_word(Tableau(()))


def test_lowering_operator_examples():
    assert lowering_operator(Tableau.of([[1, 1, 1], [2, 2]]), 2) == Tableau.of(
        [[1, 1, 1], [2, 3]]
    )
    assert lowering_operator(Tableau.of([[1, 1, 3], [3, 3]]), 1) == Tableau.of(
        [[1, 2, 3], [3, 3]]
    )
    # word 3412 for color 2: the single 2 is bracket-matched by the 3
    assert lowering_operator(Tableau.of([[1, 2], [3, 4]]), 2) is None
    assert raising_operator(Tableau.of([[1, 1], [2, 2]]), 1) is None
    with pytest.raises(ValueError):
        lowering_operator(Tableau.of([[1]]), 0)


def test_operators_are_inverse_on_bounded_crystal():
    graph = build_crystal((3, 2), 3)
    for t in graph.vertices:
        for color in (1, 2):
            image = lowering_operator(t, color)
            if image is not None:
                assert image.is_semistandard()
                assert image.shape == t.shape
                assert raising_operator(image, color) == t
            back = raising_operator(t, color)
            if back is not None:
                assert lowering_operator(back, color) == t


def test_figure_crystal_golden():
    graph = build_crystal((3, 2), 3)
    assert len(graph.vertices) == 15
    edges = {
        (graph.vertices[u].rows, color, graph.vertices[v].rows)
        for u, color, v in graph.edges
    }
    assert edges == FIGURE_EDGES
    classes = quasi_crystals(graph)
    assert {qc.descent: {t.rows for t in qc.members} for qc in classes} == FIGURE_CLASSES
    for qc in classes:
        assert qc.representative.is_standard()
        assert all(tableau_stats(t).descent_composition == qc.descent for t in qc.members)


def test_quasi_crystal_classes_are_connected():
    graph = build_crystal((3, 2), 3)
    index = {t: i for i, t in enumerate(graph.vertices)}
    for qc in quasi_crystals(graph):
        members = {index[t] for t in qc.members}
        adjacency = {m: set() for m in members}
        for u, _, v in graph.edges:
            if u in members and v in members:
                adjacency[u].add(v)
                adjacency[v].add(u)
        seen = set()
        stack = [next(iter(members))]
        while stack:
            node = stack.pop()
            if node in seen:
                continue
            seen.add(node)
            stack.extend(adjacency[node])
        assert seen == members


def test_build_crystal_small_cases():
    two_one = build_crystal((2, 1), 2)
    assert len(two_one.vertices) == 2
    assert len(two_one.edges) == 1
    assert two_one.edges[0][1] == 1

    column = build_crystal((1, 1, 1), 3)
    assert len(column.vertices) == 1

    assert build_crystal((2, 1), 1).vertices == ()


def test_quasi_crystal_decomposition_of_21():
    graph = build_crystal((2, 1), 3)
    classes = quasi_crystals(graph)
    assert len(classes) == 2
    assert sorted(qc.representative.rows for qc in classes) == sorted(
        t.rows for t in standard_tableaux((2, 1))
    )


def test_fundamental_system():
    graph = build_crystal((3, 2), 3)
    assert len(fundamental_system(graph, (2, 2, 1))) == 1
    assert len(fundamental_system(graph, (5,))) == 0


def test_fundamental_system_totals():
    for lam in partitions(5):
        graph = build_crystal(lam, 5)
        classes = quasi_crystals(graph)
        assert len(classes) == len(standard_tableaux(lam))
        by_descent = {}
        for qc in classes:
            by_descent[qc.descent] = by_descent.get(qc.descent, 0) + 1
        for alpha, count in by_descent.items():
            assert len(fundamental_system(graph, alpha)) == count


def test_quasi_crystal_generating_functions_are_fundamental():
    for lam in partitions(5):
        bound = max_descent_length(lam)
        graph = build_crystal(lam, bound)
        for qc in quasi_crystals(graph):
            generating = MultiPoly.zero(bound)
            for t in qc.members:
                w = weight(t)
                generating = generating + MultiPoly.monomial(
                    tuple(w) + (0,) * (bound - len(w))
                )
            assert generating == qsym_fundamental(qc.descent, bound)


def test_descent_equivalent_classes_are_isomorphic():
    # weight-matching between classes with equal descent carries colored
    # edges to colored edges; (3,2,1) is the smallest shape with repeats
    lam = (3, 2, 1)
    bound = max_descent_length(lam)
    graph = build_crystal(lam, bound)
    by_descent = {}
    for qc in quasi_crystals(graph):
        by_descent.setdefault(qc.descent, []).append(qc)
    repeated = {descent: group for descent, group in by_descent.items() if len(group) > 1}
    assert {descent: len(group) for descent, group in repeated.items()} == {
        (2, 2, 2): 2,
        (1, 2, 2, 1): 2,
    }
    for group in repeated.values():
        base, other = group[0], group[1]
        base_by_weight = {weight(t): t for t in base.members}
        other_by_weight = {weight(t): t for t in other.members}
        assert set(base_by_weight) == set(other_by_weight)
        for t in base.members:
            mate = other_by_weight[weight(t)]
            for color in range(1, bound):
                image = lowering_operator(t, color)
                stays = image is not None and standardize(image) == base.representative
                mirror = lowering_operator(mate, color)
                mirror_stays = (
                    mirror is not None and standardize(mirror) == other.representative
                )
                assert stays == mirror_stays
                if stays:
                    assert weight(mirror) == weight(image)


def test_inner_crystal():
    assert len(inner_crystal(build_crystal((2, 1), 3))) == 2
    assert len(inner_crystal(build_crystal((1, 1, 1), 3))) == 1
    inner = inner_crystal(build_crystal((3, 2), 3))
    assert len(inner) == len(semistandard_tableaux((3, 2), 2)) == 2


def test_evacuation_worked_example():
    t = Tableau.of([[1, 1, 1, 2], [3, 4], [4]])
    image = evacuation(t)
    assert image == Tableau.of([[4, 4, 7, 7], [5, 7], [6]])
    assert descent_composition(t) == (4, 1, 2)
    assert descent_composition(image) == (2, 1, 4)


def test_evacuation_involution_and_descent_reversal():
    for n in range(1, 6):
        for lam in partitions(n):
            for t in build_crystal(lam, n).vertices:
                image = evacuation(t)
                assert image.shape == t.shape
                assert descent_composition(image) == descent_composition(t)[::-1]
                assert evacuation(image) == t


def test_evacuation_preserves_standardness():
    for lam in partitions(5):
        originals = set(standard_tableaux(lam))
        assert {evacuation(t) for t in originals} == originals


def test_evacuation_rejects_large_entries():
    with pytest.raises(ValueError):
        evacuation(Tableau.of([[9]]))


def test_evacuation_anti_isomorphism():
    for n in range(1, 6):
        for lam in partitions(n):
            graph = build_crystal(lam, n)
            for t in graph.vertices:
                for color in range(1, n):
                    image = lowering_operator(t, color)
                    mirrored = raising_operator(evacuation(t), n - color)
                    if image is None:
                        assert mirrored is None
                    else:
                        assert mirrored == evacuation(image)


def test_depth_equals_maj_of_evacuation():
    for n in range(1, 8):
        for lam in partitions(n):
            for t in standard_tableaux(lam):
                assert tableau_stats(t).depth == tableau_stats(evacuation(t)).maj


def test_dot_export():
    dot = to_dot(build_crystal((2, 1), 2))
    assert dot.count("->") == 1
    assert 'label="1"' in dot
    assert "style=dotted" in dot  # the only edge joins two quasi-crystals
    fig = to_dot(build_crystal((3, 2), 3))
    assert fig.count("subgraph cluster_") == 5
    assert fig.count("v0 ") + fig.count("v0 [") >= 1
    assert fig.count("->") == 18
    inner = to_dot(build_crystal((3, 2), 3), inner_only=True)
    assert inner.count("subgraph cluster_") == 2


def test_graph_json_round_trip_fields():
    graph = build_crystal((2, 1), 2)
    payload = graph_json(graph)
    assert payload["shape"] == [2, 1]
    assert payload["bound"] == 2
    assert len(payload["vertices"]) == 2
    assert payload["edges"] == [[0, 1, 1]]
    assert len(payload["classes"]) == 2
