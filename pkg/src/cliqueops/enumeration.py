"""Census engines: clique generation, dimension formulas, prime counts,
the Dyck-path bijection for nesting-free cliques, and sequence export.

Counting a label-blind variant walks solid-arc skeletons with pruned
backtracking and weights each skeleton by (m-1)^#arcs, so the cost
scales with the answer rather than with m^#arcs; the dense label stream
remains available (and is what label-sensitive variants use), chunked by
a prefix of the label array when a parallelism degree is requested.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product as iproduct

from .clique import (
    Clique, CliqueError, arcs_of, crossing, diagonals_of, is_nesting_free,
)
from .magma import MagmaError, has_nontrivial_unit_divisors
from .variants import VariantError, variant

DEFAULT_BUDGET = 2 ** 24


class BudgetError(RuntimeError):
    """The requested enumeration exceeds the configured size budget."""


def clique_space_size(magma, arity):
    if arity == 1:
        return 1
    return magma.size ** len(arcs_of(arity))


def generate_cliques(magma, arity):
    """All cliques of the given arity, in lexicographic label order, each once."""
    if not magma.is_finite:
        raise MagmaError("cannot enumerate cliques over an infinite magma")
    if arity < 1:
        raise CliqueError("arity must be positive")
    if arity == 1:
        yield Clique.unit(magma)
        return
    for labels in iproduct(range(magma.size), repeat=len(arcs_of(arity))):
        yield Clique._unsafe(magma, arity, labels)


def generate_white_cliques(magma, arity):
    """Cliques whose solid arcs are diagonals only."""
    if arity == 1:
        yield Clique.unit(magma)
        return
    diags = diagonals_of(arity)
    index = {a: i for i, a in enumerate(arcs_of(arity))}
    base = [magma.unit] * len(arcs_of(arity))
    for labels in iproduct(range(magma.size), repeat=len(diags)):
        current = list(base)
        for arc, lab in zip(diags, labels):
            current[index[arc]] = lab
        yield Clique._unsafe(magma, arity, tuple(current))


# -- closed dimension formulas ----------------------------------------------


def narayana(n, k):
    """The Narayana number C(n-2, k) * C(n-1, k) / (k + 1)."""
    if k < 0 or k > n - 2:
        return 0
    return math.comb(n - 2, k) * math.comb(n - 1, k) // (k + 1)


def dim_all_cliques(m, n):
    if n == 1:
        return 1
    return m ** math.comb(n + 1, 2)


def dim_label_restricted(b, e, d, n):
    if n == 1:
        return 1
    return b * e ** n * d ** ((n + 1) * (n - 2) // 2)


def dim_white(m, n):
    return dim_label_restricted(1, 1, m, n)


def dim_bubble(m, n):
    if n == 1:
        return 1
    return m ** (n + 1)


def dim_nesting_free(m, n):
    if n == 1:
        return 1
    return sum((m - 1) ** k * narayana(n + 2, k) for k in range(n + 1))


def dim_formula(spec, m_or_bed, n):
    """Closed dimension for the variants that have one; others are rejected."""
    kind = spec.partition(":")[0]
    if kind == "all":
        return dim_all_cliques(m_or_bed, n)
    if kind == "lab":
        if not isinstance(m_or_bed, (tuple, list)) or len(m_or_bed) != 3:
            raise VariantError("label-restricted dimensions need (b, e, d) sizes")
        return dim_label_restricted(*m_or_bed, n)
    if kind == "whi":
        return dim_white(m_or_bed, n)
    if kind == "bub":
        return dim_bubble(m_or_bed, n)
    if kind == "nes":
        return dim_nesting_free(m_or_bed, n)
    raise VariantError(f"no closed dimension formula for {spec!r}")


# -- weighted skeleton census -------------------------------------------------


def _census_skeletons(arity, weight, skeleton_ok):
    """Sum weight^#arcs over arc sets accepted by a downward-closed predicate."""
    arcs = arcs_of(arity)
    total = 0

    def walk(idx, chosen, factor):
        nonlocal total
        if idx == len(arcs):
            total += factor
            return
        walk(idx + 1, chosen, factor)
        chosen.append(arcs[idx])
        if skeleton_ok(arity, tuple(chosen)):
            walk(idx + 1, chosen, factor * weight)
        chosen.pop()

    walk(0, [], 1)
    return total


def _count_stream_chunk(args):
    spec, magma, arity, prefix = args
    var = variant(spec, magma)
    index_count = len(arcs_of(arity))
    rest = index_count - len(prefix)
    count = 0
    for tail in iproduct(range(magma.size), repeat=rest):
        clique = Clique._unsafe(magma, arity, prefix + tail)
        if var.in_ambient(clique) and var.member(clique):
            count += 1
    return count


def count_by_streaming(spec, magma, arity, budget=DEFAULT_BUDGET, threads=1):
    """Dense census: stream every clique and count members."""
    space = clique_space_size(magma, arity)
    if budget is not None and space > budget:
        raise BudgetError(
            f"{space} cliques at arity {arity} exceed the budget {budget}; "
            "raise it explicitly to proceed"
        )
    if arity == 1:
        return 1
    if threads > 1 and space >= magma.size ** 2:
        prefixes = [
            (spec, magma, arity, pre)
            for pre in iproduct(range(magma.size), repeat=2)
        ]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return sum(pool.map(_count_stream_chunk, prefixes))
    return _count_stream_chunk((spec, magma, arity, ()))


def count_by_enumeration(spec, magma, arity, budget=DEFAULT_BUDGET, threads=1):
    """Number of arity-n members of the variant, with formula cross-check.

    Label-blind erasure-closed variants go through the weighted skeleton
    walk; everything else streams the full clique space under the budget.
    """
    var = variant(spec, magma)
    if arity == 1:
        return 1
    if var.label_blind and var.erasure_closed:
        count = _census_skeletons(arity, magma.size - 1, var.skeleton_ok)
    else:
        count = count_by_streaming(spec, magma, arity, budget, threads)
    try:
        if var.label_set_sizes is not None:
            expected = dim_formula("lab", var.label_set_sizes, arity)
        else:
            expected = dim_formula(spec, magma.size, arity)
    except VariantError:
        expected = None
    if expected is not None and count != expected:
        raise RuntimeError(
            f"census of {spec} at arity {arity} gave {count}, but the closed "
            f"formula gives {expected}"
        )
    return count


# -- prime census --------------------------------------------------------------


def _diagonal_cross_masks(arity):
    diags = diagonals_of(arity)
    masks = []
    for d in diags:
        mask = 0
        for j, e in enumerate(diags):
            if crossing(d, e):
                mask |= 1 << j
        masks.append(mask)
    return diags, masks


def _prime_patterns_chunk(args):
    arity, weight, lo, hi, want_minimal = args
    _, masks = _diagonal_cross_masks(arity)
    total = 0
    for pattern in range(lo, hi):
        if any(mask & pattern == 0 for mask in masks):
            continue
        if want_minimal:
            live = pattern
            minimal = True
            while live:
                bit = live & -live
                live ^= bit
                if not any(mask & (pattern ^ bit) == 0 for mask in masks):
                    minimal = False
                    break
            if not minimal:
                continue
        total += weight ** pattern.bit_count()
    return total


def _prime_pattern_weight(magma, arity, want_minimal, threads=1):
    # A clique is prime iff every diagonal is crossed by a solid diagonal,
    # so primality is a property of the diagonal-solidity pattern alone.
    if arity < 2:
        return 0
    diags, _ = _diagonal_cross_masks(arity)
    size = 1 << len(diags)
    weight = magma.size - 1
    if threads > 1 and size >= 1 << 10:
        step = (size + threads - 1) // threads
        chunks = [
            (arity, weight, lo, min(lo + step, size), want_minimal)
            for lo in range(0, size, step)
        ]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return sum(pool.map(_prime_patterns_chunk, chunks))
    return _prime_patterns_chunk((arity, weight, 0, size, want_minimal))


def count_white_prime(magma, arity, threads=1):
    """Number of prime cliques with non-solid edges and base."""
    return _prime_pattern_weight(magma, arity, want_minimal=False, threads=threads)


def count_prime(magma, arity, threads=1):
    """Number of prime cliques: m^(n+1) white primes per boundary labeling."""
    if arity < 2:
        return 0
    white = count_white_prime(magma, arity, threads=threads)
    return magma.size ** (arity + 1) * white


def count_minimal_prime(magma, arity, threads=1):
    """Number of minimal prime cliques (all of them are white)."""
    return _prime_pattern_weight(magma, arity, want_minimal=True, threads=threads)


# -- Dyck-path bijection ---------------------------------------------------------


class ColoredDyckWord:
    """A balanced word over {a, b} whose even-position a letters carry colors.

    Positions are 1-based; `colors` maps the position of each colored a
    to a non-unit magma value.
    """

    __slots__ = ("magma", "letters", "colors")

    def __init__(self, magma, letters, colors):
        self.magma = magma
        self.letters = tuple(letters)
        self.colors = dict(colors)
        word = self.letters
        if len(word) % 2:
            raise CliqueError("colored word length must be even")
        depth = 0
        for ch in word:
            if ch not in ("a", "b"):
                raise CliqueError(f"bad letter {ch!r}")
            depth += 1 if ch == "a" else -1
            if depth < 0:
                raise CliqueError("word is not prefix-dominated")
        if depth != 0:
            raise CliqueError("word is not balanced")
        for pos in self.colors:
            if pos % 2 or word[pos - 1] != "a":
                raise CliqueError("colors are allowed exactly on even-position a letters")
            if self.colors[pos] == self.magma.unit:
                raise CliqueError("colors must be non-unit labels")
        for pos in range(2, len(word) + 1, 2):
            if word[pos - 1] == "a" and pos not in self.colors:
                raise CliqueError(f"even-position a at {pos} is uncolored")

    def __eq__(self, other):
        return (
            isinstance(other, ColoredDyckWord)
            and self.magma == other.magma
            and self.letters == other.letters
            and self.colors == other.colors
        )

    def __hash__(self):
        return hash((self.magma, self.letters, tuple(sorted(self.colors.items()))))

    def __str__(self):
        parts = []
        for pos, ch in enumerate(self.letters, start=1):
            if pos in self.colors:
                parts.append(f"a[{self.magma.elem_name(self.colors[pos])}]")
            else:
                parts.append(ch)
        return "".join(parts)


def dyck_encode(clique):
    """Encode a nesting-free clique as a colored Dyck word, vertex by vertex.

    Vertex x contributes `aa` when it only starts a solid arc, `bb` when
    it only ends one, `ba` when it does both, and `ab` otherwise; the
    second letter of a starting vertex carries the arc's label.
    """
    if has_nontrivial_unit_divisors(clique.magma):
        raise VariantError(
            "the Dyck correspondence needs a magma without nontrivial unit divisors"
        )
    if not is_nesting_free(clique):
        raise CliqueError("clique is not nesting-free")
    outgoing = {}
    incoming = set()
    for (x, y) in clique.solid_arcs():
        outgoing[x] = clique.label(x, y)
        incoming.add(y)
    letters = []
    colors = {}
    for vertex in range(1, clique.arity + 2):
        starts = vertex in outgoing
        ends = vertex in incoming
        if starts and not ends:
            letters += ["a", "a"]
            colors[len(letters)] = outgoing[vertex]
        elif ends and not starts:
            letters += ["b", "b"]
        elif starts and ends:
            letters += ["b", "a"]
            colors[len(letters)] = outgoing[vertex]
        else:
            letters += ["a", "b"]
    return ColoredDyckWord(clique.magma, tuple(letters), colors)


def dyck_decode(word):
    """Rebuild the unique nesting-free clique encoded by a colored word."""
    length = len(word.letters)
    if length % 2:
        raise CliqueError("colored word length must be even")
    vertex_count = length // 2
    arity = vertex_count - 1
    if arity < 1:
        raise CliqueError("word too short for a clique")
    starts = []  # start vertices waiting for an end, in order
    arc_labels = {}
    for vertex in range(1, vertex_count + 1):
        first = word.letters[2 * vertex - 2]
        second = word.letters[2 * vertex - 1]
        pair = first + second
        if pair == "ab":
            continue
        if pair in ("bb", "ba"):
            if not starts:
                raise CliqueError("word closes an arc that never opened")
            src, lab = starts.pop(0)
            if vertex <= src:
                raise CliqueError("arc closes before it opens")
            arc_labels[(src, vertex)] = lab
        if pair in ("aa", "ba"):
            starts.append((vertex, word.colors[2 * vertex]))
    if starts:
        raise CliqueError("word leaves an arc open")
    clique = Clique.from_arcs(word.magma, arity, arc_labels)
    if not is_nesting_free(clique):
        raise CliqueError("decoded arc set is not nesting-free")
    return clique


# -- sequence export -----------------------------------------------------------


@dataclass
class SequenceRecord:
    """A computed integer sequence with its provenance."""

    variant: str
    magma_spec: str
    entries: list  # list of (arity, count)
    provenance: str = "enumeration"  # "formula" | "enumeration" | "both"

    def __post_init__(self):
        if self.provenance not in ("formula", "enumeration", "both"):
            raise ValueError(f"bad provenance {self.provenance!r}")


def sequence_for(spec, magma, max_arity, budget=DEFAULT_BUDGET, threads=1):
    """Counts for arities 1..max_arity, with provenance recorded."""
    entries = []
    has_formula = True
    for n in range(1, max_arity + 1):
        count = count_by_enumeration(spec, magma, n, budget=budget, threads=threads)
        entries.append((n, count))
        try:
            dim_formula(spec, magma.size, n)
        except VariantError:
            has_formula = False
    return SequenceRecord(
        spec, magma.spec or magma.name, entries,
        "both" if has_formula else "enumeration",
    )


def export_sequence(record, fmt):
    """Render a sequence as OEIS b-file lines, CSV, or JSON."""
    if fmt == "b":
        return "".join(f"{n} {count}\n" for n, count in record.entries)
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["arity", "count"])
        for n, count in record.entries:
            writer.writerow([n, count])
        return buffer.getvalue()
    if fmt == "json":
        return json.dumps(
            {
                "variant": record.variant,
                "magma": record.magma_spec,
                "provenance": record.provenance,
                "entries": [[n, count] for n, count in record.entries],
            },
            indent=2,
        ) + "\n"
    raise ValueError(f"unknown sequence format {fmt!r}")
