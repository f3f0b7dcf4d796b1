"""Exhaustive verifiers for the operad laws on decorated cliques.

Associativity is checked on every triple of basis cliques whose
composite arity stays within the bound.  Triples containing the arity-1
clique reduce to the unit law, which is checked separately, so the
triple scan runs over arities >= 2.  Small carriers go through the plain
scalar engine; larger ones (the four-element product magma at composite
arity 5 has ~10^8 instances) run a numpy block engine that evaluates one
(arity-config, i, j) slab at a time.  The two engines are cross-checked
on the small carriers.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from .clique import Clique, arc_index, arcs_of, reflect, relabel, rotate
from .enumeration import clique_space_size, generate_cliques
from .magma import UnitaryMagma, automorphisms, is_right_cancelable
from .operad import (
    COPY_P, COPY_Q, GLUE,
    composition_plan, partial_compose, partial_compose_lin,
)
from .report import VerifyReport

_Z = UnitaryMagma.integers()

# dense unit-law brute force is capped at this many cliques per arity;
# larger spaces fall back to the label-independent plan check
UNIT_LAW_CAP = 1 << 16
VECTOR_CHUNK = 1 << 22  # result cells per numpy slab


def _compose_corrupt(p, q, i):
    # deliberately wrong rule: the glued arc forgets q's base label
    plan = composition_plan(p.arity, q.arity, i)
    unit = p.magma.unit
    glue = p.edge_label(i)
    labels = tuple(
        p.labels[src] if tag == COPY_P
        else q.labels[src] if tag == COPY_Q
        else glue if tag == GLUE
        else unit
        for tag, src in plan
    )
    return Clique._unsafe(p.magma, p.arity + q.arity - 1, labels)


def _axiom_configs(max_arity):
    """Arity triples (all >= 2) whose axiom-1/2 composites stay in bound."""
    configs = []
    for n in range(2, max_arity + 1):
        for m in range(2, max_arity + 1):
            for k in range(2, max_arity + 1):
                if n + m + k - 2 <= max_arity:
                    configs.append((n, m, k))
    return configs


def _unit_law_report(magma, max_arity, compose):
    """x o_i unit = x and unit o_1 x = x, dense up to the cap, by plan beyond."""
    unit = Clique.unit(magma)
    checked = 0
    for n in range(1, max_arity + 1):
        if clique_space_size(magma, n) <= UNIT_LAW_CAP:
            for x in generate_cliques(magma, n):
                for i in range(1, n + 1):
                    checked += 1
                    if compose(x, unit, i) != x:
                        return VerifyReport(
                            "unit-law", False, checked,
                            f"{x!r} o_{i} unit differs from {x!r}",
                        ), checked
                checked += 1
                if compose(unit, x, 1) != x:
                    return VerifyReport(
                        "unit-law", False, checked,
                        f"unit o_1 {x!r} differs from {x!r}",
                    ), checked
        else:
            # the composition factors through an index plan; against the unit
            # the glued label is x_i * unit (resp. unit * x_0), so identity of
            # the plan plus the unit axiom of the magma (checked exhaustively
            # at construction) give the law for every clique of this arity
            src = arc_index(n)
            for i in range(1, n + 1):
                checked += 1
                plan = composition_plan(n, 1, i)
                for (x, y), (tag, idx) in zip(arcs_of(n), plan):
                    expected = (GLUE, None) if (x, y) == (i, i + 1) else (COPY_P, src[(x, y)])
                    if (tag, idx) != expected:
                        return VerifyReport(
                            "unit-law", False, checked,
                            f"plan for arity {n} o_{i} unit moves arc ({x},{y})",
                        ), checked
            checked += 1
            left_plan = composition_plan(1, n, 1)
            for (x, y), (tag, idx) in zip(arcs_of(n), left_plan):
                expected = (
                    (GLUE, None) if (x, y) == (1, n + 1) else (COPY_Q, src[(x, y)])
                )
                if (tag, idx) != expected:
                    return VerifyReport(
                        "unit-law", False, checked,
                        f"plan for unit o_1 arity {n} moves arc ({x},{y})",
                    ), checked
    return None, checked


def _scalar_axioms(magma, max_arity, budget, compose):
    checked = 0
    needed = {a for config in _axiom_configs(max_arity) for a in config}
    cliques = {n: list(generate_cliques(magma, n)) for n in needed}
    for (n, m, k) in _axiom_configs(max_arity):
        for x in cliques[n]:
            for y in cliques[m]:
                for z in cliques[k]:
                    for i in range(1, n + 1):
                        for j in range(1, m + 1):
                            checked += 1
                            lhs = compose(compose(x, y, i), z, i + j - 1)
                            rhs = compose(x, compose(y, z, j), i)
                            if lhs != rhs:
                                return VerifyReport(
                                    "axioms", False, checked,
                                    f"series law fails at {x!r} o_{i} {y!r}, "
                                    f"then z={z!r} at {i + j - 1}",
                                ), checked
                        for j in range(i + 1, n + 1):
                            checked += 1
                            lhs = compose(compose(x, y, i), z, j + m - 1)
                            rhs = compose(compose(x, z, j), y, i)
                            if lhs != rhs:
                                return VerifyReport(
                                    "axioms", False, checked,
                                    f"parallel law fails at {x!r}, {y!r}, {z!r}, "
                                    f"i={i}, j={j}",
                                ), checked
                    if budget is not None and checked > budget:
                        return VerifyReport(
                            "axioms", True, checked, None, complete=False,
                        ), checked
    return None, checked


# -- numpy block engine ---------------------------------------------------------


def _label_block(magma, arity):
    if arity == 1:
        return np.zeros((1, 1), dtype=np.uint8)
    width = len(arcs_of(arity))
    m = magma.size
    count = m ** width
    out = np.empty((count, width), dtype=np.uint8)
    idx = np.arange(count)
    for col in range(width):
        power = m ** (width - 1 - col)
        out[:, col] = (idx // power) % m
    return out


def _compose_block(X, nx, Y, ny, i, star):
    """All pairwise compositions of two label blocks; rows ordered (x, y)."""
    plan = composition_plan(nx, ny, i)
    Nx, Ny = X.shape[0], Y.shape[0]
    out = np.empty((Nx, Ny, len(plan)), dtype=np.uint8)
    ei = arc_index(nx)[(i, i + 1)] if nx >= 2 else 0
    b0 = arc_index(ny)[(1, ny + 1)]
    for r, (tag, src) in enumerate(plan):
        if tag == COPY_P:
            out[:, :, r] = X[:, src][:, None]
        elif tag == COPY_Q:
            out[:, :, r] = Y[:, src][None, :]
        elif tag == GLUE:
            out[:, :, r] = star[X[:, ei][:, None], Y[:, b0][None, :]]
        else:
            out[:, :, r] = 0
    return out.reshape(Nx * Ny, len(plan))


def _first_mismatch(lhs, rhs, shape):
    diff = (lhs != rhs).any(axis=-1).reshape(shape)
    where = np.argwhere(diff)
    return tuple(int(v) for v in where[0])


def _vector_axioms(magma, max_arity, budget):
    star = np.array(magma.table, dtype=np.uint8)
    needed = {a for config in _axiom_configs(max_arity) for a in config}
    blocks = {n: _label_block(magma, n) for n in needed}
    checked = 0
    for (n, m, k) in _axiom_configs(max_arity):
        X, Y, Z = blocks[n], blocks[m], blocks[k]
        Nx, Ny, Nz = X.shape[0], Y.shape[0], Z.shape[0]
        res_arcs = len(arcs_of(n + m + k - 2))
        zstep = max(1, VECTOR_CHUNK // (Nx * Ny * res_arcs))
        for i in range(1, n + 1):
            XY = _compose_block(X, n, Y, m, i, star)
            for j in range(1, m + 1):
                YZ = _compose_block(Y, m, Z, k, j, star).reshape(Ny, Nz, -1)
                for lo in range(0, Nz, zstep):
                    zc = slice(lo, min(lo + zstep, Nz))
                    width = zc.stop - zc.start
                    lhs = _compose_block(
                        XY, n + m - 1, Z[zc], k, i + j - 1, star
                    ).reshape(Nx, Ny, width, res_arcs)
                    yz = YZ[:, zc].reshape(Ny * width, -1)
                    rhs = _compose_block(X, n, yz, m + k - 1, i, star).reshape(
                        Nx, Ny, width, res_arcs
                    )
                    checked += Nx * Ny * width
                    if not np.array_equal(lhs, rhs):
                        xi, yi, zi = _first_mismatch(lhs, rhs, (Nx, Ny, width))
                        return VerifyReport(
                            "axioms", False, checked,
                            f"series law fails for clique indices "
                            f"x={xi}, y={yi}, z={zi + lo} at arities {(n, m, k)}, "
                            f"i={i}, j={j}",
                        ), checked
            for j in range(i + 1, n + 1):
                XZ = _compose_block(X, n, Z, k, j, star).reshape(Nx, Nz, -1)
                for lo in range(0, Nz, zstep):
                    zc = slice(lo, min(lo + zstep, Nz))
                    width = zc.stop - zc.start
                    lhs = _compose_block(
                        XY, n + m - 1, Z[zc], k, j + m - 1, star
                    ).reshape(Nx, Ny, width, res_arcs)
                    xz = XZ[:, zc].reshape(Nx * width, -1)
                    rhs = (
                        _compose_block(xz, n + k - 1, Y, m, i, star)
                        .reshape(Nx, width, Ny, res_arcs)
                        .transpose(0, 2, 1, 3)
                    )
                    checked += Nx * Ny * width
                    if not np.array_equal(lhs, rhs):
                        xi, yi, zi = _first_mismatch(lhs, rhs, (Nx, Ny, width))
                        return VerifyReport(
                            "axioms", False, checked,
                            f"parallel law fails for clique indices "
                            f"x={xi}, y={yi}, z={zi + lo} at arities {(n, m, k)}, "
                            f"i={i}, j={j}",
                        ), checked
        if budget is not None and checked > budget:
            return VerifyReport("axioms", True, checked, None, complete=False), checked
    return None, checked


def verify_operad_axioms(magma, max_arity, budget=None, engine="auto", corrupt=False):
    """Exhaustively check both associativity laws and the unit law.

    Returns a report with the instance count; the first counterexample,
    if any, is spelled out.  `corrupt` swaps in a deliberately broken
    composition rule so tests can watch the verifier catch it.
    """
    if not magma.is_finite:
        raise ValueError("axiom verification enumerates a finite carrier")
    if max_arity < 2:
        raise ValueError("max_arity must be at least 2")
    compose = _compose_corrupt if corrupt else partial_compose
    failure, unit_checked = _unit_law_report(magma, max_arity, compose)
    if failure is not None:
        return failure
    if engine == "auto":
        heavy = any(
            clique_space_size(magma, n) >= 1 << 12 for n in range(2, max_arity)
        )
        engine = "vector" if heavy and not corrupt else "scalar"
    if engine == "vector":
        failure, checked = _vector_axioms(magma, max_arity, budget)
    else:
        failure, checked = _scalar_axioms(magma, max_arity, budget, compose)
    if failure is not None:
        failure.checked += unit_checked
        return failure
    return VerifyReport("axioms", True, checked + unit_checked, None)


# -- symmetry, rotation, basic-basis checks -------------------------------------


def _composable_pairs(max_arity):
    pairs = []
    for n in range(1, max_arity + 1):
        for m in range(1, max_arity + 1):
            if n + m - 1 <= max_arity:
                pairs.append((n, m))
    return pairs


def verify_symmetries(magma, max_arity, samples=1000, seed=0):
    """Reflection is an antiautomorphism; magma automorphisms relabel functorially."""
    checked = 0
    if magma.is_finite:
        autos = automorphisms(magma)
        for (n, m) in _composable_pairs(max_arity):
            ps = list(generate_cliques(magma, n))
            qs = list(generate_cliques(magma, m))
            for p in ps:
                for q in qs:
                    for i in range(1, n + 1):
                        checked += 1
                        lhs = reflect(partial_compose(p, q, i))
                        rhs = partial_compose(reflect(p), reflect(q), n - i + 1)
                        if lhs != rhs:
                            return VerifyReport(
                                "symmetries", False, checked,
                                f"reflection fails on {p!r} o_{i} {q!r}",
                            )
                        for theta in autos:
                            checked += 1
                            lhs = relabel(partial_compose(p, q, i), theta)
                            rhs = partial_compose(relabel(p, theta), relabel(q, theta), i)
                            if lhs != rhs:
                                return VerifyReport(
                                    "symmetries", False, checked,
                                    f"automorphism relabeling fails on {p!r} o_{i} {q!r}",
                                )
        return VerifyReport("symmetries", True, checked, None)
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(1, max_arity)
        m = rng.randint(1, max_arity)
        p = _random_integer_clique(rng, n)
        q = _random_integer_clique(rng, m)
        i = rng.randint(1, n)
        checked += 1
        lhs = reflect(partial_compose(p, q, i))
        rhs = partial_compose(reflect(p), reflect(q), n - i + 1)
        if lhs != rhs:
            return VerifyReport(
                "symmetries", False, checked,
                f"reflection fails on {p!r} o_{i} {q!r}",
            )
    return VerifyReport("symmetries", True, checked, None)


def _random_integer_clique(rng, arity):
    if arity == 1:
        return Clique.unit(_Z)
    labels = tuple(
        rng.choice((-1, 0, 1)) for _ in range(len(arcs_of(arity)))
    )
    return Clique._unsafe(_Z, arity, labels)


def verify_cyclic(magma, max_arity, budget=None):
    """The rotation laws: unit fixed, order n+1 at arity n, and the composition rule."""
    checked = 0
    unit = Clique.unit(magma)
    if rotate(unit) != unit:
        return VerifyReport("cyclic", False, 1, "rotation moves the unit clique")
    for n in range(1, max_arity + 1):
        if budget is not None and clique_space_size(magma, n) > budget:
            continue
        for p in generate_cliques(magma, n):
            current = p
            for _ in range(n + 1):
                current = rotate(current)
            checked += 1
            if current != p:
                return VerifyReport(
                    "cyclic", False, checked, f"rotation order exceeds {n + 1} on {p!r}"
                )
    for (n, m) in _composable_pairs(max_arity):
        for p in generate_cliques(magma, n):
            for q in generate_cliques(magma, m):
                for i in range(1, n + 1):
                    checked += 1
                    lhs = rotate(partial_compose(p, q, i))
                    if i == 1:
                        rhs = partial_compose(rotate(q), rotate(p), m)
                    else:
                        rhs = partial_compose(rotate(p), q, i - 1)
                    if lhs != rhs:
                        return VerifyReport(
                            "cyclic", False, checked,
                            f"rotation law fails on {p!r} o_{i} {q!r}",
                        )
    return VerifyReport("cyclic", True, checked, None)


def verify_basic_set_operad(magma, max_arity):
    """Brute-force injectivity of every right-composition map on basis cliques.

    Returns (report, witness): the witness is a collision (p, p', q, i)
    when one exists.  Agreement with right cancelability is asserted.
    """
    checked = 0
    witness = None
    for (n, m) in _composable_pairs(max_arity):
        ps = list(generate_cliques(magma, n))
        for q in generate_cliques(magma, m):
            for i in range(1, n + 1):
                seen = {}
                for p in ps:
                    checked += 1
                    result = partial_compose(p, q, i)
                    if result in seen and witness is None:
                        witness = (seen[result], p, q, i)
                    seen[result] = p
        if witness is not None:
            break
    injective = witness is None
    cancelable = is_right_cancelable(magma)
    if injective != cancelable:
        raise RuntimeError(
            f"internal failure: injectivity scan over {magma.name} says "
            f"{injective} but right cancelability says {cancelable}"
        )
    report = VerifyReport(
        "basic-basis", injective, checked,
        None if injective else
        f"collision {witness[0]!r} and {witness[1]!r} compose equally "
        f"with {witness[2]!r} at {witness[3]}",
    )
    return report, witness


# -- associative elements ---------------------------------------------------------


def _associative_direct(f):
    return (partial_compose_lin(f, f, 1) - partial_compose_lin(f, f, 2)).is_zero()


def _associative_conditions(f):
    magma = f.magma
    unit = magma.unit
    support = [
        ((p.base_label, p.edge_label(1), p.edge_label(2)), coeff)
        for p, coeff in f.terms.items()
    ]
    acc1 = {}
    acc2 = {}
    acc3 = {}
    for (p0, p1, p2), lam_p in support:
        for (q0, q1, q2), lam_q in support:
            weight = lam_p * lam_q
            delta = magma.op(p1, q0)
            if delta != unit:
                key = (p0, p2, q1, q2, delta)
                acc1[key] = acc1.get(key, Fraction(0)) + weight
            else:
                key = (p0, p2, q1, q2)
                acc2[key] = acc2.get(key, Fraction(0)) + weight
            delta = magma.op(p2, q0)
            if delta != unit:
                key = (p0, p1, q1, q2, delta)
                acc3[key] = acc3.get(key, Fraction(0)) + weight
            else:
                # second summand of the middle condition, reindexed onto the
                # square it produces: lambda(p0,q1,p1) lambda(q0,q2,p2)
                key = (p0, q2, p1, q1)
                acc2[key] = acc2.get(key, Fraction(0)) - weight
    return (
        all(v == 0 for v in acc1.values())
        and all(v == 0 for v in acc2.values())
        and all(v == 0 for v in acc3.values())
    )


def is_associative_element(f):
    """Whether f o_1 f = f o_2 f, decided twice: directly and by the
    coefficient-system conditions; a disagreement is an internal failure."""
    if f.arity != 2:
        raise ValueError("associativity is a property of arity-2 elements")
    if not f.magma.is_finite:
        raise ValueError("the coefficient conditions need a finite magma")
    direct = _associative_direct(f)
    conditions = _associative_conditions(f)
    if direct != conditions:
        raise RuntimeError(
            "internal failure: direct expansion and the coefficient conditions "
            f"disagree on {f!r} ({direct} vs {conditions})"
        )
    return direct


# -- Cartesian product ------------------------------------------------------------


def verify_product_iso(product_magma, max_arity):
    """zip/unzip are mutually inverse and commute with composition."""
    from .operad import unzip_clique, zip_cliques

    m1, m2 = product_magma.factors
    checked = 0
    for (n, m) in _composable_pairs(max_arity):
        for p in generate_cliques(product_magma, n):
            p1, p2 = unzip_clique(p)
            if zip_cliques(product_magma, p1, p2) != p:
                return VerifyReport(
                    "product-iso", False, checked, f"unzip/zip round trip fails on {p!r}"
                )
            for q in generate_cliques(product_magma, m):
                q1, q2 = unzip_clique(q)
                for i in range(1, n + 1):
                    checked += 1
                    composed = partial_compose(p, q, i)
                    c1, c2 = unzip_clique(composed)
                    if c1 != partial_compose(p1, q1, i) or c2 != partial_compose(p2, q2, i):
                        return VerifyReport(
                            "product-iso", False, checked,
                            f"pairing does not commute with o_{i} on {p!r}, {q!r}",
                        )
    return VerifyReport("product-iso", True, checked, None)
