"""Exact arithmetic in the interval-power fragment of rational functions.

Elements are rational combinations of products of interval sums
(u_x + ... + u_{y-1}) raised to integer exponents.  The fragment is
closed under the substitution-based partial composition, carries the
clique morphism built from a rank function, and admits an exact zero
test by clearing denominators and expanding numerators as multivariate
polynomials.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .clique import arcs_of
from .magma import MagmaError


class RatFctError(ValueError):
    """Index out of range or objects from incompatible arities."""


class IntervalProduct:
    """A product of interval sums with nonzero integer exponents.

    Two products are equal as rational functions iff their exponent maps
    are equal, because distinct interval sums are pairwise
    non-proportional irreducible linear forms.
    """

    __slots__ = ("arity", "powers", "_hash")

    def __init__(self, arity, powers):
        cleaned = []
        for (x, y), exponent in (powers.items() if isinstance(powers, dict) else powers):
            if exponent == 0:
                continue
            if not 1 <= x < y <= arity + 1:
                raise RatFctError(f"[{x},{y}) is not an interval at arity {arity}")
            cleaned.append(((x, y), int(exponent)))
        cleaned.sort()
        self.arity = arity
        self.powers = tuple(cleaned)
        self._hash = None

    @staticmethod
    def one(arity):
        return IntervalProduct(arity, ())

    @classmethod
    def _unsafe(cls, arity, sorted_powers):
        # trusted fast path: powers already sorted, zero-free, in range
        self = object.__new__(cls)
        self.arity = arity
        self.powers = sorted_powers
        self._hash = None
        return self

    def exponent(self, interval):
        for iv, e in self.powers:
            if iv == interval:
                return e
        return 0

    def multiply(self, other):
        if self.arity != other.arity:
            raise RatFctError("cannot multiply products of different arities")
        merged = dict(self.powers)
        for iv, e in other.powers:
            merged[iv] = merged.get(iv, 0) + e
        return IntervalProduct(self.arity, merged)

    def inverse(self):
        return IntervalProduct(self.arity, {iv: -e for iv, e in self.powers})

    def __eq__(self, other):
        return (
            isinstance(other, IntervalProduct)
            and self.arity == other.arity
            and self.powers == other.powers
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.arity, self.powers))
        return self._hash

    def __repr__(self):
        return f"IntervalProduct({self.arity}, {self.powers})"


class RatElem:
    """A finite rational combination of interval products, one arity."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity, terms=()):
        self.arity = arity
        acc = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for prod, coeff in items:
            if prod.arity != arity:
                raise RatFctError("mixed arities in a rational element")
            coeff = Fraction(coeff)
            if coeff:
                acc[prod] = acc.get(prod, Fraction(0)) + coeff
        self.terms = {p: c for p, c in acc.items() if c}

    @staticmethod
    def one(arity):
        return RatElem(arity, [(IntervalProduct.one(arity), Fraction(1))])

    @staticmethod
    def of(prod, coeff=1):
        return RatElem(prod.arity, [(prod, Fraction(coeff))])

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].powers)

    def __add__(self, other):
        if self.arity != other.arity:
            raise RatFctError("cannot add rational elements of different arities")
        merged = dict(self.terms)
        for prod, coeff in other.terms.items():
            merged[prod] = merged.get(prod, Fraction(0)) + coeff
        return RatElem(self.arity, merged)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        return RatElem(self.arity, {p: scalar * c for p, c in self.terms.items()})

    def __mul__(self, other):
        if self.arity != other.arity:
            raise RatFctError("cannot multiply rational elements of different arities")
        out = {}
        for p, a in self.terms.items():
            for q, b in other.terms.items():
                prod = p.multiply(q)
                out[prod] = out.get(prod, Fraction(0)) + a * b
        return RatElem(self.arity, out)

    def __eq__(self, other):
        return (
            isinstance(other, RatElem)
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def __repr__(self):
        return format_rat_elem(self)


def _compose_product(prod, other, i):
    """Substitute `other` (arity m) into slot i of `prod`, reindexing intervals."""
    m = other.arity
    powers = {}
    for (x, y), e in prod.powers:
        if y - 1 < i:
            key = (x, y)
        elif x > i:
            key = (x + m - 1, y + m - 1)
        else:
            key = (x, y + m - 1)
        powers[key] = powers.get(key, 0) + e
    for (x, y), e in other.powers:
        key = (x + i - 1, y + i - 1)
        powers[key] = powers.get(key, 0) + e
    return IntervalProduct._unsafe(
        prod.arity + m - 1,
        tuple(sorted((iv, e) for iv, e in powers.items() if e)),
    )


def rf_compose(f, g, i):
    """Partial composition: substitute the sum block for slot i and multiply."""
    if not 1 <= i <= f.arity:
        raise RatFctError(f"index {i} out of range for arity {f.arity}")
    out = {}
    for p, a in f.terms.items():
        for q, b in g.terms.items():
            prod = _compose_product(p, q, i)
            out[prod] = out.get(prod, Fraction(0)) + a * b
    return RatElem(f.arity + g.arity - 1, out)


def interval_map(clique, rank):
    """The map taking a clique to its single interval product under a rank function."""
    if rank.magma != clique.magma:
        raise MagmaError("rank function does not belong to the clique's magma")
    powers = []
    for arc, lab in zip(arcs_of(clique.arity), clique.labels):
        exponent = rank(lab)
        if exponent:
            powers.append((arc, exponent))
    return IntervalProduct._unsafe(clique.arity, tuple(powers))


def rf_image(f, rank):
    """Linear extension of the clique-to-rational-function morphism."""
    from .operad import LinComb

    if isinstance(f, LinComb):
        out = RatElem(f.arity)
        for clique, coeff in f.terms.items():
            out = out + RatElem.of(interval_map(clique, rank), coeff)
        return out
    return RatElem.of(interval_map(f, rank))


# -- exact zero test -----------------------------------------------------------


def _interval_poly(interval, arity):
    """The linear form u_x + ... + u_{y-1} as an exponent-vector polynomial."""
    x, y = interval
    poly = {}
    for var in range(x, y):
        exps = [0] * arity
        exps[var - 1] = 1
        poly[tuple(exps)] = Fraction(1)
    return poly


def _poly_mul(p, q):
    out = {}
    for ea, ca in p.items():
        for eb, cb in q.items():
            key = tuple(a + b for a, b in zip(ea, eb))
            val = out.get(key, Fraction(0)) + ca * cb
            if val:
                out[key] = val
            elif key in out:
                del out[key]
    return out


def _poly_pow(base, exponent, arity):
    result = {(0,) * arity: Fraction(1)}
    for _ in range(exponent):
        result = _poly_mul(result, base)
    return result


def rf_expand_cleared(f):
    """Clear denominators with the least common interval multiple, expand, and sum."""
    need = {}
    for prod in f.terms:
        for iv, e in prod.powers:
            if e < 0:
                need[iv] = max(need.get(iv, 0), -e)
    arity = f.arity
    total = {}
    for prod, coeff in f.terms.items():
        exponents = dict(need)
        for iv, e in prod.powers:
            exponents[iv] = exponents.get(iv, 0) + e
        poly = {(0,) * arity: coeff}
        for iv, e in sorted(exponents.items()):
            if e < 0:
                raise AssertionError("denominator clearing left a negative power")
            if e:
                poly = _poly_mul(poly, _poly_pow(_interval_poly(iv, arity), e, arity))
        for key, val in poly.items():
            acc = total.get(key, Fraction(0)) + val
            if acc:
                total[key] = acc
            elif key in total:
                del total[key]
    return total


def rf_evaluate(f, point):
    """Evaluate at a rational point; raises ZeroDivisionError on a pole."""
    total = Fraction(0)
    for prod, coeff in f.terms.items():
        value = coeff
        for (x, y), e in prod.powers:
            span = sum(point[x - 1:y - 1], Fraction(0))
            value *= span ** e
        total += value
    return total


def rf_probably_zero(f, samples=20, seed=0):
    """Evaluate at `samples` random rational points, redrawing on pole hits."""
    rng = random.Random(seed)
    for _ in range(samples):
        for _attempt in range(100):
            point = [
                Fraction(rng.randint(-50, 50), rng.randint(1, 20)) for _ in range(f.arity)
            ]
            try:
                if rf_evaluate(f, point) != 0:
                    return False
                break
            except ZeroDivisionError:
                continue
        else:
            raise RuntimeError("could not find a pole-free evaluation point")
    return True


def rf_is_zero(f, seed=0):
    """Exact zero decision, with a probabilistic pre-check for early exits."""
    if not f.terms:
        return True
    if not rf_probably_zero(f, samples=5, seed=seed):
        return False
    return not rf_expand_cleared(f)


def compose_product(prod, other, i):
    """Partial composition of two single interval products."""
    if not 1 <= i <= prod.arity:
        raise RatFctError(f"index {i} out of range for arity {prod.arity}")
    return _compose_product(prod, other, i)


def verify_rf_morphism(labels=(-1, 0, 1), max_arity=3):
    """Exhaustively check image(p o_i q) = image(p) o_i image(q) on integer
    cliques with the given labels, all arities up to the bound, all i."""
    from itertools import product as iproduct

    from .clique import Clique, arcs_of as arcs
    from .magma import RankFunction, UnitaryMagma
    from .operad import partial_compose
    from .report import VerifyReport

    z = UnitaryMagma.integers()
    rank = RankFunction.identity()

    def cliques(arity):
        if arity == 1:
            return [Clique.unit(z)]
        return [
            Clique._unsafe(z, arity, labs)
            for labs in iproduct(labels, repeat=len(arcs(arity)))
        ]

    checked = 0
    pool = {n: cliques(n) for n in range(1, max_arity + 1)}
    images = {
        n: [interval_map(p, rank) for p in pool[n]] for n in pool
    }
    for n in range(1, max_arity + 1):
        for m in range(1, max_arity + 1):
            ps, qs = pool[n], pool[m]
            fps, fqs = images[n], images[m]
            for pi, p in enumerate(ps):
                fp = fps[pi]
                for qi, q in enumerate(qs):
                    fq = fqs[qi]
                    for i in range(1, n + 1):
                        checked += 1
                        if interval_map(partial_compose(p, q, i), rank) != \
                                _compose_product(fp, fq, i):
                            return VerifyReport(
                                "ratfct-morphism", False, checked,
                                f"image of {p!r} o_{i} {q!r} is not the "
                                "composition of the images",
                            )
    return VerifyReport("ratfct-morphism", True, checked, None)


def verify_rf_laws(max_arity=4, samples=500, seed=0):
    """Sampled checks of the three laws tying cliques to rational functions.

    (a) the image of an arcwise product is the product of the images;
    (b) negating every label inverts the image;
    (c) every Laurent monomial is the image of an explicit bubble.
    """
    from .clique import Clique, arcs_of as arcs
    from .magma import MagmaMorphism, RankFunction, UnitaryMagma
    from .operad import star_product
    from .report import VerifyReport

    z = UnitaryMagma.integers()
    identity_rank = RankFunction.identity()
    negate = MagmaMorphism.negation()
    rng = random.Random(seed)
    checked = 0

    def random_clique(arity):
        if arity == 1:
            return Clique.unit(z)
        labels = tuple(rng.randint(-2, 2) for _ in range(len(arcs(arity))))
        return Clique._unsafe(z, arity, labels)

    from .clique import relabel

    for _ in range(samples):
        arity = rng.randint(1, max_arity)
        p = random_clique(arity)
        q = random_clique(arity)
        checked += 1
        if rf_image(p, identity_rank) * rf_image(q, identity_rank) != rf_image(
            star_product(p, q), identity_rank
        ):
            return VerifyReport(
                "ratfct-laws", False, checked,
                f"multiplicativity fails on {p!r} * {q!r}",
            )
        checked += 1
        image = interval_map(p, identity_rank)
        if interval_map(relabel(p, negate), identity_rank) != image.inverse():
            return VerifyReport(
                "ratfct-laws", False, checked, f"inverse law fails on {p!r}"
            )
        variables = rng.randint(1, max_arity)
        exponents = [rng.randint(-3, 3) for _ in range(variables)]
        bubble_arcs = {
            (pos, pos + 1): alpha
            for pos, alpha in enumerate(exponents, start=1) if alpha
        }
        bubble = Clique.from_arcs(z, variables + 1, bubble_arcs)
        monomial = IntervalProduct(
            variables + 1,
            {(pos, pos + 1): alpha for pos, alpha in enumerate(exponents, start=1)},
        )
        checked += 1
        if interval_map(bubble, identity_rank) != monomial:
            return VerifyReport(
                "ratfct-laws", False, checked,
                f"Laurent construction fails on exponents {exponents}",
            )
    return VerifyReport("ratfct-laws", True, checked, None)


# -- rendering -----------------------------------------------------------------


def _format_interval(interval, exponent):
    x, y = interval
    if y == x + 1:
        body = f"u_{x}"
    else:
        body = "(" + " + ".join(f"u_{v}" for v in range(x, y)) + ")"
    return body if exponent == 1 else f"{body}^{exponent}"


def format_rat_elem(f):
    if not f.terms:
        return "0"
    chunks = []
    for prod, coeff in f.items():
        if not prod.powers:
            chunks.append(str(coeff))
            continue
        body = " ".join(_format_interval(iv, e) for iv, e in prod.powers)
        if coeff == 1:
            chunks.append(body)
        elif coeff == -1:
            chunks.append(f"-{body}")
        else:
            chunks.append(f"{coeff} {body}")
    return " + ".join(chunks).replace("+ -", "- ")
