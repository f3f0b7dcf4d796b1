"""Decorated cliques: total arc labelings of a polygon by magma elements.

An arity-n clique labels every arc (x, y), 1 <= x < y <= n + 1, by an
element of its magma.  Arcs labeled by the unit count as missing; the
statistics (degree, crossing, nesting, acyclicity) are those of the
underlying configuration of solid arcs.
"""

from __future__ import annotations

from functools import lru_cache

from .magma import UnitaryMagma, parse_magma_spec


class CliqueError(ValueError):
    """Ill-formed clique data or an inapplicable clique operation."""


@lru_cache(maxsize=None)
def arcs_of(arity):
    """All arcs of an arity-n polygon in lexicographic order."""
    return tuple(
        (x, y) for x in range(1, arity + 1) for y in range(x + 1, arity + 2)
    )


@lru_cache(maxsize=None)
def arc_index(arity):
    return {arc: i for i, arc in enumerate(arcs_of(arity))}


@lru_cache(maxsize=None)
def diagonals_of(arity):
    """Arcs that are neither edges (x, x+1) nor the base (1, arity+1)."""
    return tuple(
        (x, y) for (x, y) in arcs_of(arity)
        if y != x + 1 and (x, y) != (1, arity + 1)
    )


def arc_class(arity, x, y):
    """Classify an arc as "base", "edge", or "diagonal" (derived, never stored)."""
    if not (1 <= x < y <= arity + 1):
        raise CliqueError(f"({x},{y}) is not an arc at arity {arity}")
    if (x, y) == (1, arity + 1):
        return "base"
    if y == x + 1:
        return "edge"
    return "diagonal"


def crossing(a, b):
    """Whether two arcs (x, y) and (x', y') cross: x < x' < y < y' either way."""
    (x, y), (xp, yp) = a, b
    return x < xp < y < yp or xp < x < yp < y


def nested_in(inner, outer):
    """Whether arc `inner` is nested in arc `outer`: x <= x' < y' <= y."""
    (xp, yp), (x, y) = inner, outer
    return x <= xp < yp <= y


class Clique:
    """An immutable M-decorated clique, stored as labels in arc order."""

    __slots__ = ("magma", "arity", "labels", "_hash")

    def __init__(self, magma, arity, labels):
        labels = tuple(labels)
        if arity < 1:
            raise CliqueError("arity must be positive")
        if len(labels) != len(arcs_of(arity)):
            raise CliqueError(
                f"arity {arity} needs {len(arcs_of(arity))} labels, got {len(labels)}"
            )
        for lab in labels:
            if not magma.contains(lab):
                raise CliqueError(f"label {lab!r} is not an element of {magma.name}")
        if arity == 1 and labels[0] != magma.unit:
            raise CliqueError("the only arity-1 clique has its base labeled by the unit")
        self.magma = magma
        self.arity = arity
        self.labels = labels
        self._hash = None

    @classmethod
    def _unsafe(cls, magma, arity, labels):
        # trusted fast path for enumeration loops
        self = object.__new__(cls)
        self.magma = magma
        self.arity = arity
        self.labels = labels
        self._hash = None
        return self

    @staticmethod
    def unit(magma):
        return Clique._unsafe(magma, 1, (magma.unit,))

    @staticmethod
    def from_arcs(magma, arity, arc_labels):
        """Build a clique from a {(x, y): label} mapping; missing arcs get the unit."""
        index = arc_index(arity)
        labels = [magma.unit] * len(index)
        for (x, y), lab in arc_labels.items():
            if (x, y) not in index:
                raise CliqueError(f"({x},{y}) is not an arc at arity {arity}")
            labels[index[(x, y)]] = lab
        return Clique(magma, arity, labels)

    @staticmethod
    def triangle(magma, base, edge1, edge2):
        """The arity-2 clique with the given base and edge labels."""
        return Clique(magma, 2, (edge1, base, edge2))

    # -- access -----------------------------------------------------------

    def label(self, x, y):
        index = arc_index(self.arity)
        if (x, y) not in index:
            raise CliqueError(f"({x},{y}) is not an arc at arity {self.arity}")
        return self.labels[index[(x, y)]]

    @property
    def base_label(self):
        return self.labels[arc_index(self.arity)[(1, self.arity + 1)]]

    def edge_label(self, i):
        if not 1 <= i <= self.arity:
            raise CliqueError(f"no edge {i} at arity {self.arity}")
        if self.arity == 1:
            return self.magma.unit
        return self.labels[arc_index(self.arity)[(i, i + 1)]]

    def is_solid(self, x, y):
        return self.label(x, y) != self.magma.unit

    def solid_arcs(self):
        unit = self.magma.unit
        return tuple(
            arc for arc, lab in zip(arcs_of(self.arity), self.labels) if lab != unit
        )

    def solid_diagonals(self):
        return tuple(
            arc for arc in self.solid_arcs()
            if arc_class(self.arity, *arc) == "diagonal"
        )

    def with_label(self, x, y, lab):
        idx = arc_index(self.arity)[(x, y)]
        labels = list(self.labels)
        labels[idx] = lab
        return Clique(self.magma, self.arity, labels)

    def skeleton(self):
        """Vertex count and the set of solid arcs as undirected pairs."""
        return self.arity + 1, frozenset(frozenset(a) for a in self.solid_arcs())

    def __eq__(self, other):
        return (
            isinstance(other, Clique)
            and self.arity == other.arity
            and self.labels == other.labels
            and self.magma == other.magma
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.arity, self.labels, self.magma))
        return self._hash

    def __lt__(self, other):
        if self.arity != other.arity:
            return self.arity < other.arity
        return self.labels < other.labels

    def __repr__(self):
        solid = ", ".join(
            f"({x},{y})={self.magma.elem_name(lab)}"
            for (x, y), lab in zip(arcs_of(self.arity), self.labels)
            if lab != self.magma.unit
        )
        return f"Clique[{self.magma.name}|{self.arity}|{solid or 'all-unit'}]"


# -- statistics -----------------------------------------------------------


def degree(clique):
    """Maximal number of solid arcs meeting a vertex."""
    counts = [0] * (clique.arity + 2)
    for x, y in clique.solid_arcs():
        counts[x] += 1
        counts[y] += 1
    return max(counts)


def crossing_number(clique):
    """Maximum over solid diagonals of the number of solid diagonals crossing it."""
    diags = clique.solid_diagonals()
    best = 0
    for d in diags:
        best = max(best, sum(1 for e in diags if crossing(d, e)))
    return best


def is_noncrossing(clique):
    diags = clique.solid_diagonals()
    return not any(
        crossing(diags[i], diags[j])
        for i in range(len(diags)) for j in range(i + 1, len(diags))
    )


def is_nesting_free(clique):
    solid = clique.solid_arcs()
    return not any(
        a != b and nested_in(a, b)
        for a in solid for b in solid
    )


def is_acyclic(clique):
    _, arcset = clique.skeleton()
    adjacency = {}
    for pair in arcset:
        x, y = tuple(pair)
        adjacency.setdefault(x, []).append(y)
        adjacency.setdefault(y, []).append(x)
    seen = set()
    for start in adjacency:
        if start in seen:
            continue
        stack = [(start, None)]
        while stack:
            node, parent = stack.pop()
            if node in seen:
                return False
            seen.add(node)
            stack.extend(
                (nxt, node) for nxt in adjacency[node] if nxt != parent
            )
    return True


def is_white(clique):
    """No solid edges and no solid base."""
    return all(
        arc_class(clique.arity, x, y) == "diagonal"
        for (x, y) in clique.solid_arcs()
    )


def is_bubble(clique):
    return not clique.solid_diagonals()


def is_triangle(clique):
    return clique.arity == 2


def is_prime(clique):
    """Whether every diagonal, solid or not, is crossed by some solid diagonal.

    Arity 1 is never prime; triangles have no diagonals and are vacuously
    prime.  Only the solidity of the diagonal labels matters.
    """
    if clique.arity < 2:
        return False
    solid = clique.solid_diagonals()
    return all(
        any(crossing(d, e) for e in solid)
        for d in diagonals_of(clique.arity)
    )


def is_minimal_prime(clique):
    """Prime, and erasing any single solid arc destroys primality."""
    if not is_prime(clique):
        return False
    unit = clique.magma.unit
    return all(
        not is_prime(clique.with_label(x, y, unit))
        for (x, y) in clique.solid_arcs()
    )


def hamming(p, q):
    """Number of arcs on which two same-arity cliques disagree."""
    if p.arity != q.arity or p.magma != q.magma:
        raise CliqueError("Hamming distance needs equal arities and magmas")
    return sum(1 for a, b in zip(p.labels, q.labels) if a != b)


# -- symmetries -------------------------------------------------------------


def reflect(clique):
    """Reflection through the vertical line through the base: (x, y) reads (n-y+2, n-x+2)."""
    n = clique.arity
    src = arc_index(n)
    labels = tuple(
        clique.labels[src[(n - y + 2, n - x + 2)]] for (x, y) in arcs_of(n)
    )
    return Clique._unsafe(clique.magma, n, labels)


def rotate(clique):
    """One counterclockwise rotation step: (x, y) reads (x+1, y+1), wrapping through the base."""
    n = clique.arity
    src = arc_index(n)
    labels = tuple(
        clique.labels[src[(x + 1, y + 1)]] if y <= n else clique.labels[src[(1, x + 1)]]
        for (x, y) in arcs_of(n)
    )
    return Clique._unsafe(clique.magma, n, labels)


def relabel(clique, morphism):
    """Apply a validated magma morphism to every arc label."""
    if morphism.source != clique.magma:
        raise CliqueError("morphism source does not match the clique's magma")
    labels = tuple(morphism(lab) for lab in clique.labels)
    return Clique(morphism.target, clique.arity, labels)


# -- factorization ----------------------------------------------------------


def split_along_diagonal(clique, diag):
    """Factor p = q o_x r along an uncrossed diagonal (x, y).

    q has arity n + x - y + 1 and keeps everything outside the diagonal,
    with the diagonal's label moved to its edge x; r has arity y - x,
    copies the inside, and gets a unit base.
    """
    x, y = diag
    n = clique.arity
    if arc_class(n, x, y) != "diagonal":
        raise CliqueError(f"({x},{y}) is not a diagonal at arity {n}")
    if clique.is_solid(x, y):
        for other in clique.solid_diagonals():
            if crossing((x, y), other):
                raise CliqueError(
                    f"diagonal ({x},{y}) is crossed by solid {other}; no factorization"
                )
    elif any(crossing((x, y), other) for other in clique.solid_diagonals()):
        raise CliqueError(
            f"diagonal ({x},{y}) is crossed by a solid diagonal; no factorization"
        )
    shift = y - x - 1
    outer_arity = n + x - y + 1

    def outer_label(z, t):
        if t <= x:
            return clique.label(z, t)
        if z <= x:
            return clique.label(z, t + shift)
        return clique.label(z + shift, t + shift)

    outer = Clique._unsafe(
        clique.magma, outer_arity,
        tuple(outer_label(z, t) for (z, t) in arcs_of(outer_arity)),
    )
    inner_arity = y - x

    def inner_label(z, t):
        if (z, t) == (1, inner_arity + 1):
            return clique.magma.unit
        return clique.label(z + x - 1, t + x - 1)

    inner = Clique._unsafe(
        clique.magma, inner_arity,
        tuple(inner_label(z, t) for (z, t) in arcs_of(inner_arity)),
    )
    return outer, inner


# -- serialization ------------------------------------------------------------


def clique_to_json(clique):
    """The JSON form: magma spec, arity, and the solid labels keyed "x,y"."""
    if clique.magma.spec is not None:
        magma_field = clique.magma.spec
    elif clique.magma.is_finite:
        magma_field = clique.magma.table_data()
    else:
        raise CliqueError("cannot serialize a clique over an unnamed infinite magma")
    labels = {
        f"{x},{y}": clique.magma.elem_name(lab)
        for (x, y), lab in zip(arcs_of(clique.arity), clique.labels)
        if lab != clique.magma.unit
    }
    return {"magma": magma_field, "arity": clique.arity, "labels": labels}


def clique_from_json(data, magma=None):
    """Read the JSON clique format; arcs omitted from `labels` default to the unit."""
    if magma is None:
        field = data.get("magma")
        if isinstance(field, str):
            magma = parse_magma_spec(field)
        elif isinstance(field, dict):
            magma = UnitaryMagma.from_table_data(field)
        else:
            raise CliqueError("clique JSON needs a magma spec or table object")
    try:
        arity = int(data["arity"])
    except (KeyError, TypeError, ValueError):
        raise CliqueError("clique JSON needs an integer arity")
    arc_labels = {}
    for key, name in data.get("labels", {}).items():
        try:
            x, y = (int(part) for part in key.split(","))
        except ValueError:
            raise CliqueError(f"bad arc key {key!r}")
        arc_labels[(x, y)] = magma.elem(name)
    return Clique.from_arcs(magma, arity, arc_labels)


def format_clique(clique):
    """Human-readable arc table, one row per starting vertex."""
    n = clique.arity
    lines = [f"arity {n} over {clique.magma.name}"]
    width = max(
        (len(clique.magma.elem_name(lab)) for lab in clique.labels), default=1
    )
    for x in range(1, n + 1):
        cells = []
        for y in range(x + 1, n + 2):
            cells.append(f"({x},{y})={clique.magma.elem_name(clique.label(x, y)):>{width}}")
        lines.append("  " + "  ".join(cells))
    return "\n".join(lines)
