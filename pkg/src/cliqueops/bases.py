"""Alternative bases obtained from the label-erasure orders.

One order erases solid edge/base labels, the other erases solid diagonal
labels.  Summing a clique's down-set (unsigned for the first order,
signed by Hamming distance for the second) gives two triangular bases;
Moebius inversion gives the inverse conversions.  Closed composition
formulas in both bases are implemented from their case analyses and are
cross-checked against conversion through the fundamental basis.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .clique import Clique, CliqueError, arc_class, arcs_of, hamming
from .operad import LinComb, partial_compose

H_BASIS = "H"
K_BASIS = "K"
FUNDAMENTAL = "fundamental"

_BOUNDARY, _DIAGONAL = 0, 1


@lru_cache(maxsize=1 << 16)
def _erasure_downset(clique, mode):
    """All cliques obtained by erasing subsets of the selected solid arcs.

    Down-sets only erase labels, never invent them, so they are finite
    even over the integer magma; results are memoized per clique.
    """
    unit = clique.magma.unit
    wanted = ("edge", "base") if mode == _BOUNDARY else ("diagonal",)
    positions = [
        idx for idx, ((x, y), lab) in enumerate(zip(arcs_of(clique.arity), clique.labels))
        if lab != unit and arc_class(clique.arity, x, y) in wanted
    ]
    out = []
    for k in range(len(positions) + 1):
        for subset in combinations(positions, k):
            labels = list(clique.labels)
            for idx in subset:
                labels[idx] = unit
            out.append(Clique._unsafe(clique.magma, clique.arity, tuple(labels)))
    return tuple(out)


def below_be(clique):
    """The down-set of a clique for the erase-edges-and-base order."""
    return list(_erasure_downset(clique, _BOUNDARY))


def below_d(clique):
    """The down-set of a clique for the erase-diagonals order."""
    return list(_erasure_downset(clique, _DIAGONAL))


def d_base(clique):
    """The clique with its base label replaced by the unit."""
    return clique.with_label(1, clique.arity + 1, clique.magma.unit)


def d_edge(clique, i):
    """The clique with its i-th edge label replaced by the unit."""
    if clique.arity < 2:
        raise CliqueError("arity-1 clique has no edges")
    return clique.with_label(i, i + 1, clique.magma.unit)


def from_H(f):
    """Expand an H-tagged combination into the fundamental basis (unsigned down-sets)."""
    out = LinComb.zero(f.magma, f.arity)
    for clique, coeff in f.terms.items():
        out = out + LinComb(f.magma, f.arity, [(q, coeff) for q in below_be(clique)])
    return out


def to_H(f):
    """Write a fundamental combination in the H basis via the signed Moebius sum."""
    out = LinComb.zero(f.magma, f.arity)
    for clique, coeff in f.terms.items():
        terms = [
            (q, coeff * (-1) ** hamming(q, clique))
            for q in below_be(clique)
        ]
        out = out + LinComb(f.magma, f.arity, terms)
    return out


def from_K(f):
    """Expand a K-tagged combination into the fundamental basis (signed down-sets)."""
    out = LinComb.zero(f.magma, f.arity)
    for clique, coeff in f.terms.items():
        terms = [
            (q, coeff * (-1) ** hamming(q, clique))
            for q in below_d(clique)
        ]
        out = out + LinComb(f.magma, f.arity, terms)
    return out


def to_K(f):
    """Write a fundamental combination in the K basis (unsigned Moebius sum)."""
    out = LinComb.zero(f.magma, f.arity)
    for clique, coeff in f.terms.items():
        out = out + LinComb(f.magma, f.arity, [(q, coeff) for q in below_d(clique)])
    return out


def _reject_unit(p, q):
    if p.arity == 1 or q.arity == 1:
        raise CliqueError(
            "composition in the H/K bases is undefined on the arity-1 clique"
        )


def compose_H(p, q, i):
    """Composition of two basis elements in the H basis (four-case formula)."""
    _reject_unit(p, q)
    unit = p.magma.unit
    p_solid = p.edge_label(i) != unit
    q_solid = q.base_label != unit
    terms = [partial_compose(p, q, i)]
    if p_solid:
        terms.append(partial_compose(d_edge(p, i), q, i))
    if q_solid:
        terms.append(partial_compose(p, d_base(q), i))
    if p_solid and q_solid:
        terms.append(partial_compose(d_edge(p, i), d_base(q), i))
    return LinComb(p.magma, p.arity + q.arity - 1, [(t, Fraction(1)) for t in terms])


def compose_K(p, q, i):
    """Composition of two basis elements in the K basis (two-case formula)."""
    _reject_unit(p, q)
    terms = [partial_compose(p, q, i)]
    if p.magma.op(p.edge_label(i), q.base_label) != p.magma.unit:
        terms.append(partial_compose(d_edge(p, i), d_base(q), i))
    return LinComb(p.magma, p.arity + q.arity - 1, [(t, Fraction(1)) for t in terms])


def compose_in_basis(f, g, i, basis):
    """Compose two combinations read in the given basis, returning the same basis."""
    if basis == FUNDAMENTAL:
        from .operad import partial_compose_lin

        return partial_compose_lin(f, g, i)
    rule = compose_H if basis == H_BASIS else compose_K
    out = LinComb.zero(f.magma, f.arity + g.arity - 1)
    for p, a in f.terms.items():
        for q, b in g.terms.items():
            out = out + (a * b) * rule(p, q, i)
    return out
