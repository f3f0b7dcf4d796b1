from fractions import Fraction

import pytest

from cliqueops import (
    Clique, IntervalProduct, LinComb, MagmaMorphism, RankFunction, RatElem,
    RatFctError, UnitaryMagma, compose_product, interval_map, relabel,
    rf_compose, rf_image, rf_is_zero, star_product, verify_rf_laws,
    verify_rf_morphism,
)
from cliqueops.ratfct import (
    format_rat_elem, rf_evaluate, rf_expand_cleared, rf_probably_zero,
)

Z = UnitaryMagma.integers()
RANK = RankFunction.identity()


def test_interval_product_canonical():
    a = IntervalProduct(3, {(1, 2): 1, (2, 4): -2})
    b = IntervalProduct(3, [((2, 4), -2), ((1, 2), 1)])
    assert a == b and hash(a) == hash(b)
    assert IntervalProduct(3, {(1, 2): 0}) == IntervalProduct.one(3)
    with pytest.raises(RatFctError):
        IntervalProduct(3, {(1, 5): 1})
    assert a.multiply(a.inverse()) == IntervalProduct.one(3)


def test_unit_composition():
    one1 = RatElem.one(1)
    one2 = RatElem.one(2)
    assert rf_compose(one2, one1, 1) == RatElem.one(2)
    assert rf_compose(one1, one2, 1) == RatElem.one(2)


def test_single_interval_reindexing():
    # a single variable composed into the second slot of a length-two sum
    inner = RatElem.of(IntervalProduct(1, {(1, 2): 1}))
    outer = RatElem.of(IntervalProduct(2, {(1, 3): 1}))
    expected = RatElem.of(IntervalProduct(2, {(1, 3): 1, (2, 3): 1}))
    assert rf_compose(outer, inner, 2) == expected


def test_image_of_cliques(z):
    assert interval_map(Clique.unit(z), RANK) == IntervalProduct.one(1)
    allunit = Clique.from_arcs(z, 4, {})
    assert interval_map(allunit, RANK) == IntervalProduct.one(4)
    big = Clique.from_arcs(
        z, 6, {(1, 2): -1, (1, 5): 2, (1, 7): 1, (3, 7): -2, (4, 5): 3, (5, 7): -1}
    )
    assert interval_map(big, RANK) == IntervalProduct(6, {
        (1, 2): -1, (1, 5): 2, (1, 7): 1, (3, 7): -2, (4, 5): 3, (5, 7): -1,
    })
    rendered = format_rat_elem(rf_image(big, RANK))
    assert "(u_1 + u_2 + u_3 + u_4)^2" in rendered
    assert "u_1^-1" in rendered
    assert "u_4^3" in rendered


def test_rank_function_required_to_match(z, n2):
    zero_rank = RankFunction.zero(n2)
    from cliqueops import MagmaError

    with pytest.raises(MagmaError):
        interval_map(Clique.from_arcs(z, 2, {}), zero_rank)


def test_kernel_examples_are_exactly_zero(z):
    first = (
        LinComb.of(Clique.triangle(z, 1, 0, 0))
        - LinComb.of(Clique.triangle(z, 0, 1, 0))
        - LinComb.of(Clique.triangle(z, 0, 0, 1))
    )
    assert rf_is_zero(rf_image(first, RANK))
    second = (
        LinComb.of(Clique.from_arcs(z, 3, {(2, 3): -1, (3, 4): -1}))
        - LinComb.of(Clique.from_arcs(z, 3, {(2, 4): -1, (3, 4): -1}))
        - LinComb.of(Clique.from_arcs(z, 3, {(2, 3): -1, (2, 4): -1}))
    )
    assert rf_is_zero(rf_image(second, RANK))
    single = rf_image(LinComb.of(Clique.triangle(z, 1, 2, 3)), RANK)
    assert not rf_is_zero(single)


def test_zero_test_routes_agree(z):
    import random

    rng = random.Random(11)
    pool = [
        Clique.from_arcs(z, 2, {(1, 2): rng.randint(-2, 2), (2, 3): rng.randint(-2, 2),
                                (1, 3): rng.randint(-2, 2)})
        for _ in range(40)
    ]
    for _ in range(40):
        f = LinComb(z, 2, [(rng.choice(pool), rng.randint(-2, 2)) for _ in range(3)])
        image = rf_image(f, RANK)
        exact = not rf_expand_cleared(image) if image.terms else True
        probabilistic = rf_probably_zero(image, samples=20, seed=5)
        assert exact == probabilistic
        assert rf_is_zero(image) == exact


def test_evaluation_and_poles():
    f = RatElem.of(IntervalProduct(2, {(1, 3): -1}))
    assert rf_evaluate(f, [Fraction(1), Fraction(1)]) == Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        rf_evaluate(f, [Fraction(1), Fraction(-1)])


def test_morphism_law_small_exhaustive():
    report = verify_rf_morphism(labels=(-1, 0, 1), max_arity=2)
    assert report.ok
    # pair instance count: (1,1) + (1,2) + (2,1) with two slots + (2,2)
    assert report.checked == 1 + 27 + 54 + 27 * 27 * 2


def test_compose_product_matches_rat_elem_compose(z):
    import random

    from cliqueops import arcs_of

    rng = random.Random(2)

    def random_clique(arity):
        if arity == 1:
            return Clique.unit(z)
        return Clique(z, arity, [rng.randint(-2, 2) for _ in arcs_of(arity)])

    for _ in range(100):
        n, m = rng.randint(1, 3), rng.randint(1, 3)
        p, q = random_clique(n), random_clique(m)
        i = rng.randint(1, n)
        lhs = RatElem.of(compose_product(interval_map(p, RANK), interval_map(q, RANK), i))
        rhs = rf_compose(rf_image(p, RANK), rf_image(q, RANK), i)
        assert lhs == rhs


def test_multiplicativity_and_inverse(z):
    p = Clique.from_arcs(z, 3, {(1, 3): 2, (2, 4): -1})
    q = Clique.from_arcs(z, 3, {(1, 3): 1, (1, 2): 4})
    assert rf_image(p, RANK) * rf_image(q, RANK) == rf_image(star_product(p, q), RANK)
    neg = MagmaMorphism.negation()
    assert interval_map(relabel(p, neg), RANK) == interval_map(p, RANK).inverse()


def test_laurent_monomial_bubble(z):
    # u_1^2 u_2^-1 is the image of the bubble with edges labeled 2, -1
    bubble = Clique.from_arcs(z, 3, {(1, 2): 2, (2, 3): -1})
    assert interval_map(bubble, RANK) == IntervalProduct(3, {(1, 2): 2, (2, 3): -1})


def test_verify_rf_laws():
    report = verify_rf_laws(max_arity=3, samples=100, seed=0)
    assert report.ok, report.counterexample
    # determinism: same seed, same traversal
    again = verify_rf_laws(max_arity=3, samples=100, seed=0)
    assert again.checked == report.checked
