import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliqueops import (
    Clique, CliqueError, MagmaMorphism, UnitaryMagma, arcs_of,
    clique_from_json, clique_to_json, crossing_number, degree, hamming,
    is_acyclic, is_bubble, is_minimal_prime, is_nesting_free, is_noncrossing,
    is_prime, is_triangle, is_white, partial_compose, reflect, relabel,
    rotate, split_along_diagonal,
)

D0 = UnitaryMagma.zero_product(0)
Z = UnitaryMagma.integers()


def d0_cliques(max_arity=5):
    return st.integers(min_value=2, max_value=max_arity).flatmap(
        lambda n: st.tuples(
            *[st.integers(min_value=0, max_value=1)] * len(arcs_of(n))
        ).map(lambda labels: Clique(D0, n, labels))
    )


def test_unit_clique_is_the_only_arity_one_value(d0):
    unit = Clique.unit(d0)
    assert unit.base_label == d0.unit
    with pytest.raises(CliqueError):
        Clique(d0, 1, (d0.elem("0"),))


def test_arc_bookkeeping(d0):
    p = Clique.from_arcs(d0, 3, {(1, 3): 1, (2, 4): 1})
    assert p.label(1, 3) == 1
    assert p.label(1, 2) == d0.unit
    assert p.solid_diagonals() == ((1, 3), (2, 4))
    with pytest.raises(CliqueError):
        p.label(3, 3)
    with pytest.raises(CliqueError):
        Clique.from_arcs(d0, 3, {(1, 5): 1})


def test_statistics_on_examples(d0):
    unit = Clique.unit(d0)
    assert degree(unit) == 0 and crossing_number(unit) == 0
    assert is_nesting_free(unit) and is_acyclic(unit) and is_white(unit)
    assert is_bubble(unit) and not is_triangle(unit)

    full_triangle = Clique.triangle(d0, 1, 1, 1)
    assert degree(full_triangle) == 2
    assert is_triangle(full_triangle) and is_bubble(full_triangle)

    allunit = Clique.from_arcs(d0, 4, {})
    assert degree(allunit) == 0

    crossed = Clique.from_arcs(d0, 3, {(1, 3): 1, (2, 4): 1})
    assert crossing_number(crossed) == 1
    nested = Clique.from_arcs(d0, 3, {(1, 3): 1, (1, 4): 1})
    assert crossing_number(nested) == 0
    assert not is_nesting_free(Clique.from_arcs(d0, 4, {(1, 3): 1, (1, 4): 1}))


@settings(max_examples=120)
@given(d0_cliques())
def test_triangles_are_bubbles_and_bubbles_noncrossing(p):
    if is_triangle(p):
        assert is_bubble(p)
    if is_bubble(p):
        assert is_noncrossing(p)
    assert (crossing_number(p) == 0) == is_noncrossing(p)


def _degree_multiset(p):
    counts = [0] * (p.arity + 2)
    for x, y in p.solid_arcs():
        counts[x] += 1
        counts[y] += 1
    return sorted(counts[1:])


@settings(max_examples=120)
@given(d0_cliques())
def test_reflect_rotate_preserve_statistics(p):
    assert reflect(reflect(p)) == p
    rotated = p
    for _ in range(p.arity + 1):
        rotated = rotate(rotated)
    assert rotated == p
    for image in (reflect(p), rotate(p)):
        assert image.arity == p.arity
        assert _degree_multiset(image) == _degree_multiset(p)
        assert degree(image) == degree(p)
        assert crossing_number(image) == crossing_number(p)


def test_reflect_rotate_displayed_examples(z):
    p = Clique.from_arcs(z, 5, {(1, 2): 1, (1, 5): -2, (2, 3): -2, (3, 5): 1})
    assert reflect(p) == Clique.from_arcs(
        z, 5, {(2, 4): 1, (2, 6): -2, (4, 5): -2, (5, 6): 1}
    )
    assert rotate(p) == Clique.from_arcs(
        z, 5, {(1, 2): -2, (1, 6): 1, (2, 4): 1, (4, 6): -2}
    )
    assert reflect(p).base_label == p.base_label


def test_relabel(z, d0):
    p = Clique.from_arcs(z, 3, {(1, 3): 4, (2, 4): -1})
    neg = MagmaMorphism.negation()
    assert relabel(p, neg) == Clique.from_arcs(z, 3, {(1, 3): -4, (2, 4): 1})
    assert relabel(relabel(p, neg), neg) == p
    ident = MagmaMorphism.identity(d0)
    q = Clique.from_arcs(d0, 2, {(1, 3): 1})
    assert relabel(q, ident) == q


def test_hamming(d0):
    p = Clique.from_arcs(d0, 2, {})
    q = Clique.triangle(d0, 1, 1, 1)
    assert hamming(p, q) == 3
    assert hamming(p, p) == 0
    assert hamming(p, q) == hamming(q, p)
    with pytest.raises(CliqueError):
        hamming(p, Clique.unit(d0))


def test_prime_predicates(d0):
    assert not is_prime(Clique.unit(d0))
    for labels in [(0, 0, 0), (1, 1, 1), (1, 0, 1)]:
        assert is_prime(Clique(d0, 2, labels))
    no_diag = Clique.from_arcs(d0, 3, {(1, 2): 1})
    assert not is_prime(no_diag)
    both_diags = Clique.from_arcs(d0, 3, {(1, 3): 1, (2, 4): 1})
    assert is_prime(both_diags)
    assert is_minimal_prime(both_diags)
    with_edge = Clique.from_arcs(d0, 2, {(1, 2): 1})
    assert is_prime(with_edge) and not is_minimal_prime(with_edge)
    assert is_minimal_prime(Clique.from_arcs(d0, 2, {}))


@settings(max_examples=80)
@given(d0_cliques(4), st.randoms(use_true_random=False))
def test_primality_ignores_boundary_labels(p, rng):
    # relabeling edges and the base never changes primality
    flipped = p
    for i in range(1, p.arity + 1):
        if rng.random() < 0.5:
            flipped = flipped.with_label(i, i + 1, rng.choice((0, 1)))
    if rng.random() < 0.5:
        flipped = flipped.with_label(1, p.arity + 1, rng.choice((0, 1)))
    assert is_prime(p) == is_prime(flipped)


def test_split_along_diagonal_round_trip(d0):
    # exhaustive: every legal split recomposes to the original
    from cliqueops import generate_cliques

    seen = 0
    for n in (3, 4, 5):
        for p in generate_cliques(D0, n):
            for (x, y) in [a for a in arcs_of(n)
                           if a[1] != a[0] + 1 and a != (1, n + 1)]:
                try:
                    outer, inner = split_along_diagonal(p, (x, y))
                except CliqueError:
                    assert any(
                        _crossing((x, y), d) for d in p.solid_diagonals()
                    )
                    continue
                seen += 1
                assert inner.base_label == d0.unit
                assert outer.arity == n + x - y + 1
                assert inner.arity == y - x
                assert partial_compose(outer, inner, x) == p
    assert seen > 0


def _crossing(a, b):
    (x, y), (xp, yp) = a, b
    return x < xp < y < yp or xp < x < yp < y


def test_split_examples(d0):
    allunit = Clique.from_arcs(d0, 3, {})
    outer, inner = split_along_diagonal(allunit, (1, 3))
    assert outer == Clique.from_arcs(d0, 2, {})
    assert inner == Clique.from_arcs(d0, 2, {})
    blocked = Clique.from_arcs(d0, 3, {(2, 4): 1})
    with pytest.raises(CliqueError):
        split_along_diagonal(blocked, (1, 3))


def test_json_round_trip(d0, z, tmp_path):
    p = Clique.from_arcs(d0, 3, {(1, 3): 1})
    data = clique_to_json(p)
    assert data == {"magma": "D:0", "arity": 3, "labels": {"1,3": "0"}}
    assert clique_from_json(data) == p
    q = Clique.from_arcs(z, 2, {(1, 2): -3})
    assert clique_from_json(clique_to_json(q)) == q
    # omitted arcs default to the unit
    assert clique_from_json({"magma": "D:0", "arity": 2}) == Clique.from_arcs(d0, 2, {})
    with pytest.raises(CliqueError):
        clique_from_json({"magma": "D:0", "arity": 2, "labels": {"9,1": "0"}})
