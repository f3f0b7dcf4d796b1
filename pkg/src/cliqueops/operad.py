"""Partial composition of decorated cliques and its linear extension.

The composition p o_i q glues the base of q onto the i-th edge of p,
labels the glued arc by p_i * q_0, and fills every new diagonal with the
unit.  Linear combinations carry exact rational coefficients; mixed-arity
sums are rejected so index bugs surface early.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .clique import Clique, CliqueError, arc_index, arcs_of
from .magma import pair_value, unpair_value

COPY_P, COPY_Q, GLUE, FRESH = 0, 1, 2, 3


@lru_cache(maxsize=None)
def composition_plan(n, m, i):
    """For each result arc of |p|=n o_i |q|=m: where its label comes from.

    Entries are (COPY_P, src), (COPY_Q, src), (GLUE, None) for the arc
    (i, i+m) labeled p_i * q_0, or (FRESH, None) for new unit diagonals.
    """
    if not 1 <= i <= n:
        raise CliqueError(f"index {i} out of range for arity {n}")
    src_p, src_q = arc_index(n), arc_index(m)
    plan = []
    for (x, y) in arcs_of(n + m - 1):
        if y <= i:
            plan.append((COPY_P, src_p[(x, y)]))
        elif x <= i and i + m <= y and (x, y) != (i, i + m):
            plan.append((COPY_P, src_p[(x, y - m + 1)]))
        elif i + m <= x:
            plan.append((COPY_P, src_p[(x - m + 1, y - m + 1)]))
        elif i <= x and y <= i + m and (x, y) != (i, i + m):
            plan.append((COPY_Q, src_q[(x - i + 1, y - i + 1)]))
        elif (x, y) == (i, i + m):
            plan.append((GLUE, None))
        else:
            plan.append((FRESH, None))
    return tuple(plan)


def partial_compose(p, q, i):
    """The clique p o_i q of arity |p| + |q| - 1."""
    if p.magma != q.magma:
        raise CliqueError("cannot compose cliques over different magmas")
    n, m = p.arity, q.arity
    plan = composition_plan(n, m, i)
    magma = p.magma
    unit = magma.unit
    pl, ql = p.labels, q.labels
    glue = magma.op(p.edge_label(i), q.base_label)
    labels = tuple(
        pl[src] if tag == COPY_P
        else ql[src] if tag == COPY_Q
        else glue if tag == GLUE
        else unit
        for tag, src in plan
    )
    return Clique._unsafe(magma, n + m - 1, labels)


class LinComb:
    """A finite rational combination of same-arity cliques over one magma.

    Zero coefficients are never stored; iteration order is the canonical
    clique order, so equal combinations print identically.
    """

    __slots__ = ("magma", "arity", "terms")

    def __init__(self, magma, arity, terms=()):
        self.magma = magma
        self.arity = arity
        acc = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for clique, coeff in items:
            if clique.arity != arity:
                raise CliqueError(
                    f"mixed arities in combination: {clique.arity} vs {arity}"
                )
            if clique.magma != magma:
                raise CliqueError("mixed magmas in combination")
            coeff = Fraction(coeff)
            if coeff:
                acc[clique] = acc.get(clique, Fraction(0)) + coeff
        self.terms = {c: v for c, v in acc.items() if v}

    @staticmethod
    def of(clique, coeff=1):
        return LinComb(clique.magma, clique.arity, [(clique, Fraction(coeff))])

    @staticmethod
    def zero(magma, arity):
        return LinComb(magma, arity)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].labels)

    def is_zero(self):
        return not self.terms

    def coefficient(self, clique):
        return self.terms.get(clique, Fraction(0))

    def __add__(self, other):
        if self.arity != other.arity or self.magma != other.magma:
            raise CliqueError("cannot add combinations of different arities or magmas")
        merged = dict(self.terms)
        for clique, coeff in other.terms.items():
            merged[clique] = merged.get(clique, Fraction(0)) + coeff
        return LinComb(self.magma, self.arity, merged)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        return LinComb(
            self.magma, self.arity,
            {c: scalar * v for c, v in self.terms.items()},
        )

    def __eq__(self, other):
        return (
            isinstance(other, LinComb)
            and self.magma == other.magma
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.magma, self.arity, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{v}*{c!r}" for c, v in self.items())


def partial_compose_lin(f, g, i):
    """Bilinear extension of partial composition, canonicalized."""
    if f.magma != g.magma:
        raise CliqueError("cannot compose combinations over different magmas")
    if not 1 <= i <= f.arity:
        raise CliqueError(f"index {i} out of range for arity {f.arity}")
    out = {}
    for p, a in f.terms.items():
        for q, b in g.terms.items():
            composed = partial_compose(p, q, i)
            out[composed] = out.get(composed, Fraction(0)) + a * b
    return LinComb(f.magma, f.arity + g.arity - 1, out)


def star_product(f, g):
    """Arcwise magma product, extended bilinearly to combinations."""
    if isinstance(f, Clique) and isinstance(g, Clique):
        if f.arity != g.arity or f.magma != g.magma:
            raise CliqueError("arcwise product needs equal arities and magmas")
        op = f.magma.op
        labels = tuple(op(a, b) for a, b in zip(f.labels, g.labels))
        return Clique._unsafe(f.magma, f.arity, labels)
    if isinstance(f, Clique):
        f = LinComb.of(f)
    if isinstance(g, Clique):
        g = LinComb.of(g)
    if f.arity != g.arity or f.magma != g.magma:
        raise CliqueError("arcwise product needs equal arities and magmas")
    out = {}
    for p, a in f.terms.items():
        for q, b in g.terms.items():
            prod = star_product(p, q)
            out[prod] = out.get(prod, Fraction(0)) + a * b
    return LinComb(f.magma, f.arity, out)


def zip_cliques(product_magma, p1, p2):
    """Pair two same-arity cliques into one over the product magma."""
    if p1.arity != p2.arity:
        raise CliqueError("can only pair cliques of equal arities")
    m1, m2 = product_magma.factors or (None, None)
    if (m1, m2) != (p1.magma, p2.magma):
        raise CliqueError("product magma factors do not match the cliques")
    labels = tuple(
        pair_value(product_magma, a, b) for a, b in zip(p1.labels, p2.labels)
    )
    return Clique._unsafe(product_magma, p1.arity, labels)


def unzip_clique(clique):
    """Split a product-magma clique back into its two components."""
    magma = clique.magma
    if magma.factors is None:
        raise CliqueError(f"{magma.name} is not a product magma")
    m1, m2 = magma.factors
    pairs = [unpair_value(magma, lab) for lab in clique.labels]
    left = Clique._unsafe(m1, clique.arity, tuple(a for a, _ in pairs))
    right = Clique._unsafe(m2, clique.arity, tuple(b for _, b in pairs))
    return left, right
