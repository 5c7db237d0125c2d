"""Combinatorial normal forms for the ideals built out of a binomial edge ideal.

Two shapes cover everything that appears:

* :class:`SumIdeal` -- ``(x_s, y_s : s in T) + J_H`` with ``H`` a graph on the
  vertices outside ``T``.  Edges touching ``T`` are absorbed, because
  ``x_i y_j - x_j y_i`` lies in ``(x_i, y_i)``.
* :class:`PrimeIdeal` -- ``P_T(H)``: the killed set ``T`` plus a partition of
  the remaining vertices into blocks, each block carrying the binomial edge
  ideal of the complete graph on it.

Both are immutable and hashable, and equality of values is equality of the
ideals they denote.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Union

from .errors import ContractViolation, InvariantViolation, ResourceLimitExceeded
from .graphcore import (
    Graph,
    components_of,
    iter_bits,
    lowest,
    members,
    to_mask,
)

DEFAULT_CUT_SET_MAX_VERTICES = 16


def _full(n: int) -> int:
    return ((1 << (n + 1)) - 1) ^ 1


def _as_mask(vertices) -> int:
    return vertices if isinstance(vertices, int) else to_mask(vertices)


def _fmt_vars(mask: int) -> str:
    return ",".join(f"x{v},y{v}" for v in iter_bits(mask))


def _fmt_set(mask: int) -> str:
    return "{" + ",".join(str(v) for v in iter_bits(mask)) + "}"


@dataclass(frozen=True)
class PrimeIdeal:
    """``P_T(H)`` stored as ``(n, killed mask, blocks)``.

    ``blocks`` are vertex bitmasks ordered by smallest vertex; together with
    ``killed`` they partition ``{1..n}``.  Singleton blocks are kept since
    they count towards the dimension of the quotient.
    """

    n: int
    killed: int
    blocks: tuple[int, ...]

    @classmethod
    def from_sets(cls, n: int, killed: Iterable[int],
                  blocks: Iterable[Iterable[int]]) -> PrimeIdeal:
        kmask = _as_mask(killed)
        bmasks = tuple(sorted((_as_mask(b) for b in blocks), key=lowest))
        covered = kmask
        for b in bmasks:
            if not b or b & covered:
                raise ContractViolation("blocks must be nonempty and disjoint from each other and the killed set")
            covered |= b
        if covered != _full(n):
            raise ContractViolation("killed set and blocks must partition 1..n")
        return cls(n, kmask, bmasks)

    @property
    def killed_set(self) -> frozenset[int]:
        return members(self.killed)

    @property
    def block_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(members(b) for b in self.blocks)

    @cached_property
    def nbr(self) -> tuple[int, ...]:
        nbr = [0] * (self.n + 1)
        for b in self.blocks:
            for v in iter_bits(b):
                nbr[v] = b ^ (1 << v)
        return tuple(nbr)

    @cached_property
    def as_sum(self) -> SumIdeal:
        return SumIdeal(self.n, self.killed, self.nbr)

    @property
    def height(self) -> int:
        return self.n - len(self.blocks) + bin(self.killed).count("1")

    @property
    def dim(self) -> int:
        """Krull dimension of ``S/q``; ``height + dim == 2n``."""
        return self.n + len(self.blocks) - bin(self.killed).count("1")

    def __add__(self, other):
        return ideal_sum(self, other)

    def __str__(self):
        return render(self)


@dataclass(frozen=True)
class SumIdeal:
    """``(x_s, y_s : s in killed) + J_H`` with ``H`` given by neighbor masks.

    ``nbr[v]`` is the neighbor mask of ``v`` in ``H`` (index 0 unused); killed
    vertices have no neighbors and nothing is adjacent to them.
    """

    n: int
    killed: int
    nbr: tuple[int, ...] = field(repr=False)

    @classmethod
    def from_graph(cls, g: Graph, killed: Iterable[int] = ()) -> SumIdeal:
        kmask = _as_mask(killed)
        keep = ~kmask
        nbr = tuple(0 if kmask >> v & 1 else g.neighbor_mask(v) & keep
                    for v in range(g.n + 1))
        return cls(g.n, kmask, nbr)

    @property
    def killed_set(self) -> frozenset[int]:
        return members(self.killed)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(1, self.n + 1)
                for v in iter_bits(self.nbr[u]) if u < v]

    @property
    def clique_graph(self) -> Graph:
        return Graph(self.n, self.edges)

    @property
    def as_sum(self) -> SumIdeal:
        return self

    def __add__(self, other):
        return ideal_sum(self, other)

    def __str__(self):
        return render(self)


Ideal = Union[PrimeIdeal, SumIdeal]


def render(ideal: Ideal) -> str:
    """Human-readable form, e.g. ``(x2,y2,x4,y4) + J~{1,3,5}``."""
    parts = []
    if ideal.killed:
        parts.append(f"({_fmt_vars(ideal.killed)})")
    if isinstance(ideal, PrimeIdeal):
        parts += [f"J~{_fmt_set(b)}" for b in ideal.blocks if b & (b - 1)]
    else:
        edges = ideal.edges
        if edges:
            parts.append("J[" + ",".join(f"{u}-{v}" for u, v in edges) + "]")
    return " + ".join(parts) if parts else "(0)"


# -- cut point property -------------------------------------------------------

def _count(nbr, within: int) -> int:
    return len(components_of(nbr, within))


def _has_cpp_mask(nbr, vmask: int, t: int) -> bool:
    for i in iter_bits(t):
        rest = vmask & ~(t ^ (1 << i))
        if _count(nbr, rest & ~(1 << i)) <= _count(nbr, rest):
            return False
    return True


def has_cut_point_property(g: Graph, t: Iterable[int]) -> bool:
    """Each ``i`` in ``t`` is a cut vertex of ``g - (t minus i)``; true for ``t = {}``."""
    return _has_cpp_mask(g._nbr, g.vertex_mask, _as_mask(t))


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if not sub:
            return
        sub = (sub - 1) & mask


def _cut_masks(nbr, vmask: int) -> list[int]:
    # every subset is tried; C4 has {1,3} but not {1}, so no pruning
    return sorted((t for t in _submasks(vmask) if _has_cpp_mask(nbr, vmask, t)),
                  key=lambda t: (bin(t).count("1"), sorted(iter_bits(t))))


def cut_sets(g: Graph, max_vertices: int = DEFAULT_CUT_SET_MAX_VERTICES) -> list[frozenset[int]]:
    """All ``T`` with the cut point property, by size then lexicographically."""
    if g.n > max_vertices:
        raise ResourceLimitExceeded(
            f"cut-set enumeration capped at {max_vertices} vertices (graph has {g.n})",
            n=g.n, max_vertices=max_vertices)
    return [members(t) for t in _cut_masks(g._nbr, g.vertex_mask)]


_component_cut_cache: dict[tuple, list[int]] = {}


def _component_cut_masks(nbr, comp: int) -> list[int]:
    key = (comp, tuple(nbr[v] for v in iter_bits(comp)))
    hit = _component_cut_cache.get(key)
    if hit is None:
        hit = _component_cut_cache[key] = _cut_masks(nbr, comp)
    return hit


def minimal_primes_of_graph(g: Graph, max_vertices: int = DEFAULT_CUT_SET_MAX_VERTICES) -> list[PrimeIdeal]:
    """``P_T(G)`` for every ``T`` in ``C(G)``, in cut-set order."""
    if g.n > max_vertices:
        raise ResourceLimitExceeded(
            f"cut-set enumeration capped at {max_vertices} vertices (graph has {g.n})",
            n=g.n, max_vertices=max_vertices)
    vm = g.vertex_mask
    return [PrimeIdeal(g.n, t, tuple(components_of(g._nbr, vm & ~t)))
            for t in _cut_masks(g._nbr, vm)]


def p_empty(g: Graph) -> PrimeIdeal:
    """``P_{}(G)``: one block per connected component, nothing killed."""
    return PrimeIdeal(g.n, 0, tuple(components_of(g._nbr, g.vertex_mask)))


# -- arithmetic -------------------------------------------------------------------

def height(q: PrimeIdeal, n: int | None = None) -> int:
    return q.height


def dim_quotient(q: PrimeIdeal, n: int | None = None) -> int:
    return q.dim


def ideal_sum(a: Ideal, b: Ideal) -> SumIdeal:
    """Sum of two ideals in normal form (edges meeting the new killed set dropped)."""
    if a.n != b.n:
        raise ContractViolation("ideals live in different rings")
    killed = a.killed | b.killed
    keep = ~killed
    an, bn = a.nbr, b.nbr
    nbr = tuple(0 if killed >> v & 1 else (an[v] | bn[v]) & keep
                for v in range(a.n + 1))
    return SumIdeal(a.n, killed, nbr)


def is_prime(ideal: Ideal) -> bool:
    """True iff every connected component of the clique graph is complete."""
    if isinstance(ideal, PrimeIdeal):
        return True
    nbr = ideal.nbr
    for v in range(1, ideal.n + 1):
        closed = nbr[v] | (1 << v)
        for u in iter_bits(nbr[v]):
            if nbr[u] | (1 << u) != closed:
                return False
    return True


def to_prime(ideal: Ideal) -> PrimeIdeal:
    if isinstance(ideal, PrimeIdeal):
        return ideal
    if not is_prime(ideal):
        raise ContractViolation(f"{render(ideal)} is not prime")
    nbr = ideal.nbr
    blocks = []
    seen = ideal.killed
    for v in range(1, ideal.n + 1):
        if not seen >> v & 1:
            b = nbr[v] | (1 << v)
            blocks.append(b)
            seen |= b
    return PrimeIdeal(ideal.n, ideal.killed, tuple(blocks))


def minimal_primes(ideal: Ideal) -> list[PrimeIdeal]:
    """Minimal primes of ``(x_T, y_T) + J_H``.

    For the components ``H_1..H_l`` of ``H`` these are the primes obtained by
    killing ``T`` together with one cut set ``U_j`` of each ``H_j`` and
    completing the components of every ``H_j - U_j``.
    """
    if isinstance(ideal, PrimeIdeal):
        return [ideal]
    n, nbr = ideal.n, ideal.nbr
    free = _full(n) & ~ideal.killed
    comps = components_of(nbr, free)
    singles = tuple(c for c in comps if not c & (c - 1))
    choices = []
    for c in comps:
        if c & (c - 1):
            choices.append([(u, components_of(nbr, c & ~u))
                            for u in _component_cut_masks(nbr, c)])
    out = {}
    for pick in product(*choices):
        killed = ideal.killed
        blocks = list(singles)
        for u, parts in pick:
            killed |= u
            blocks.extend(parts)
        q = PrimeIdeal(n, killed, tuple(sorted(blocks, key=lowest)))
        out.setdefault(q, None)
    return list(out)


def contains(a: Ideal, b: Ideal) -> bool:
    """Whether the ideal ``a`` contains the ideal ``b``.

    ``b``'s killed variables must be killed in ``a``; each surviving binomial
    ``f_ij`` of ``b`` must be a generator of ``a`` (the degree-two binomials
    ``f_ij`` are linearly independent, so membership is edge membership).
    """
    if a.n != b.n:
        raise ContractViolation("ideals live in different rings")
    if b.killed & ~a.killed:
        return False
    keep = ~a.killed
    if isinstance(a, PrimeIdeal) and isinstance(b, PrimeIdeal):
        anbr = a.nbr
        for blk in b.blocks:
            rest = blk & keep
            if rest & (rest - 1):
                v = lowest(rest)
                if rest & ~(anbr[v] | (1 << v)):
                    return False
        return True
    anbr, bnbr = a.nbr, b.nbr
    for v in iter_bits(_full(a.n) & keep):
        if bnbr[v] & keep & ~anbr[v]:
            return False
    return True


def add_p_empty(q: Ideal, g: Graph) -> PrimeIdeal:
    """``q + P_{}(G)`` as a prime; a non-prime sum is reported as an invariant failure."""
    s = ideal_sum(q, p_empty(g))
    if not is_prime(s):
        raise InvariantViolation(
            f"{render(q)} + P_empty(G) = {render(s)} is not prime")
    return to_prime(s)


def maximal_ideal(n: int) -> PrimeIdeal:
    return PrimeIdeal(n, _full(n), ())


def zero_ideal(n: int) -> SumIdeal:
    return SumIdeal(n, 0, (0,) * (n + 1))
