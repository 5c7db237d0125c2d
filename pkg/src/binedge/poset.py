"""The posets Q_G and A_G of prime ideals, plus generic finite-poset tools.

Order convention: ``a <= b`` iff the ideal ``a`` contains the ideal ``b``
(reverse inclusion), so minimal primes of ``J_G`` are the maximal elements
and the open interval ``(q, 1)`` consists of the primes strictly inside ``q``.
"""
from __future__ import annotations

import json
import time
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvariantViolation, ResourceLimitExceeded
from .graphcore import Graph, iter_bits
from .ideals import (
    PrimeIdeal,
    SumIdeal,
    contains,
    ideal_sum,
    is_prime,
    minimal_primes,
    minimal_primes_of_graph,
    p_empty,
    render,
    to_prime,
)

Q = "Q"
A = "A"


@dataclass(frozen=True)
class PosetLimits:
    max_vertices: int = 8
    max_elements: int = 200_000
    timeout_s: float = 600.0


# -- generic finite posets ----------------------------------------------------------

@dataclass(frozen=True)
class FinitePoset:
    """Poset on local indices ``0..k-1``.

    ``up[i]`` is the bitmask of ``j`` with ``i < j`` strictly; ``labels[i]``
    names element ``i`` in whatever larger structure it came from.
    """

    up: tuple[int, ...]
    labels: tuple = ()

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(len(self.up))))

    @classmethod
    def from_relations(cls, k: int, pairs: Iterable[tuple[int, int]], labels: Sequence = ()) -> FinitePoset:
        """Transitive closure of the strict relations ``a < b`` in ``pairs``."""
        up = [0] * k
        for a, b in pairs:
            up[a] |= 1 << b
        changed = True
        while changed:
            changed = False
            for i in range(k):
                new = up[i]
                for j in iter_bits(up[i]):
                    new |= up[j]
                if new != up[i]:
                    up[i] = new
                    changed = True
        if any(up[i] >> i & 1 for i in range(k)):
            raise ValueError("relations contain a cycle")
        return cls(tuple(up), tuple(labels))

    def __len__(self):
        return len(self.up)

    @property
    def down(self) -> tuple[int, ...]:
        down = [0] * len(self.up)
        for i, m in enumerate(self.up):
            for j in iter_bits(m):
                down[j] |= 1 << i
        return tuple(down)

    def leq(self, i: int, j: int) -> bool:
        return i == j or bool(self.up[i] >> j & 1)

    def restrict(self, mask: int) -> FinitePoset:
        idx = list(iter_bits(mask))
        local = {g: k for k, g in enumerate(idx)}
        up = []
        for g in idx:
            m = 0
            for h in iter_bits(self.up[g] & mask):
                m |= 1 << local[h]
            up.append(m)
        return FinitePoset(tuple(up), tuple(self.labels[g] for g in idx))

    def minimum(self) -> int | None:
        k = len(self.up)
        full = (1 << k) - 1
        for i in range(k):
            if self.up[i] | (1 << i) == full:
                return i
        return None

    def maximum(self) -> int | None:
        k = len(self.up)
        full = (1 << k) - 1
        for i, d in enumerate(self.down):
            if d | (1 << i) == full:
                return i
        return None


def meet(p: FinitePoset, a: int, b: int, down: Sequence[int] | None = None) -> int | None:
    """Greatest common lower bound of ``a`` and ``b`` inside ``p``, if any."""
    down = p.down if down is None else down
    lower = (down[a] | 1 << a) & (down[b] | 1 << b)
    for g in iter_bits(lower):
        if lower & ~(down[g] | 1 << g) == 0:
            return g
    return None


def is_meet_contractible(p: FinitePoset, prefer: Sequence[int] = ()) -> int | None:
    """Local index of an element having a meet with every element, if one exists.

    Candidates listed in ``prefer`` are tried first.  The empty poset has no
    witness; callers treat it separately.
    """
    k = len(p.up)
    down = p.down
    order = list(dict.fromkeys([*prefer, *range(k)]))
    for a in order:
        if all(meet(p, a, b, down) is not None for b in range(k)):
            return a
    return None


# -- the ideal posets ------------------------------------------------------------------

def _sort_key(q: PrimeIdeal):
    return (q.height, sorted(iter_bits(q.killed)), [sorted(iter_bits(b)) for b in q.blocks])


@dataclass
class BuildStats:
    nonprime_processed: int = 0
    sums_formed: int = 0
    seconds: float = 0.0


@dataclass(frozen=True)
class IdealPoset:
    """Q_G or A_G: deduplicated primes with reverse inclusion and a formal top."""

    graph: Graph
    variant: str
    elements: tuple[PrimeIdeal, ...]
    order: FinitePoset = field(repr=False)
    stats: BuildStats = field(default_factory=BuildStats, compare=False, repr=False)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, q):
        return q in self.index

    def __iter__(self):
        return iter(self.elements)

    @property
    def index(self) -> dict[PrimeIdeal, int]:
        idx = self.__dict__.get("_index")
        if idx is None:
            idx = {q: i for i, q in enumerate(self.elements)}
            object.__setattr__(self, "_index", idx)
        return idx

    def leq(self, a: PrimeIdeal, b: PrimeIdeal) -> bool:
        return contains(a, b)

    def maximal_elements(self) -> list[PrimeIdeal]:
        return [q for q, u in zip(self.elements, self.order.up) if not u]

    def interval_mask(self, q: PrimeIdeal) -> int:
        return self.order.up[self.index[q]]


def _sum_closure(gens: Iterable[SumIdeal], stats: BuildStats) -> dict[SumIdeal, None]:
    # all sums of nonempty subsets: grow by one generator at a time
    gens = list(dict.fromkeys(gens))
    seen = dict.fromkeys(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for s in frontier:
            for g in gens:
                t = ideal_sum(s, g)
                stats.sums_formed += 1
                if t not in seen:
                    seen[t] = None
                    nxt.append(t)
        frontier = nxt
    return seen


def build_poset(g: Graph, variant: str = Q, limits: PosetLimits = PosetLimits()) -> IdealPoset:
    """Build Q_G (``variant="Q"``) or A_G (``variant="A"``).

    Start from the sums of minimal primes of ``J_G``; every non-prime ideal
    met is replaced by its minimal primes ``q_1..q_t`` (and, for Q, also by
    the ``q_i + P_{}(G)``), whose subset sums are fed back in.  Non-primes
    are expanded once each.
    """
    if variant not in (Q, A):
        raise ValueError(f"unknown variant {variant!r}")
    if g.n > limits.max_vertices:
        raise ResourceLimitExceeded(
            f"poset builds capped at {limits.max_vertices} vertices (graph has {g.n})",
            n=g.n, max_vertices=limits.max_vertices)
    start = time.monotonic()
    stats = BuildStats()
    pe = p_empty(g).as_sum
    primes: dict[PrimeIdeal, None] = {}
    expanded: set[SumIdeal] = set()
    queue: deque[SumIdeal] = deque()

    def absorb(ideals):
        for s in ideals:
            if is_prime(s):
                primes.setdefault(to_prime(s), None)
            elif s not in expanded:
                expanded.add(s)
                queue.append(s)
        if len(primes) + len(expanded) > limits.max_elements:
            raise ResourceLimitExceeded(
                f"poset build exceeded {limits.max_elements} ideals",
                primes=len(primes), nonprimes=len(expanded))
        if time.monotonic() - start > limits.timeout_s:
            raise ResourceLimitExceeded(
                f"poset build exceeded {limits.timeout_s} s",
                primes=len(primes), nonprimes=len(expanded))

    seed = [q.as_sum for q in minimal_primes_of_graph(g)]
    absorb(_sum_closure(seed, stats))
    while queue:
        ideal = queue.popleft()
        stats.nonprime_processed += 1
        qs = [q.as_sum for q in minimal_primes(ideal)]
        if variant == Q:
            qs += [ideal_sum(q, pe) for q in qs]
        absorb(_sum_closure(qs, stats))

    elements = tuple(sorted(primes, key=_sort_key))
    order = _reverse_inclusion(elements)
    stats.seconds = time.monotonic() - start
    return IdealPoset(g, variant, elements, order, stats)


def _reverse_inclusion(elements: Sequence[PrimeIdeal]) -> FinitePoset:
    # index order is by height, and strict containment lowers height,
    # so everything strictly inside elements[i] has a smaller index
    up = []
    for i, a in enumerate(elements):
        m = 0
        for j in range(i):
            if elements[j].height < a.height and contains(a, elements[j]):
                m |= 1 << j
        up.append(m)
    return FinitePoset(tuple(up), tuple(range(len(elements))))


def open_interval(p: IdealPoset, q: PrimeIdeal) -> FinitePoset:
    """``(q, 1)``: the poset elements strictly contained in ``q``.

    ``labels`` of the result are indices into ``p.elements``.
    """
    return p.order.restrict(p.interval_mask(q))


def check_sug2(p: IdealPoset) -> None:
    for q in p.elements:
        if q.dim == 1:
            raise InvariantViolation(f"{render(q)} has a one-dimensional quotient")


# -- Hasse diagram and export ------------------------------------------------------------

def hasse_edges(p: IdealPoset | FinitePoset) -> list[tuple[int, int]]:
    """Covering pairs ``(a, b)`` with ``a < b`` and nothing strictly between."""
    order = p.order if isinstance(p, IdealPoset) else p
    up = order.up
    edges = []
    for a, ua in enumerate(up):
        for b in iter_bits(ua):
            if not any(up[c] >> b & 1 for c in iter_bits(ua & ~(1 << b))):
                edges.append((a, b))
    return edges


def to_dot(p: IdealPoset) -> str:
    lines = [f"digraph {p.variant}_G {{", "  rankdir=BT;"]
    for i, q in enumerate(p.elements):
        lines.append(f'  {i} [label="{render(q)}\\nd={q.dim}"];')
    for a, b in hasse_edges(p):
        lines.append(f"  {a} -> {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def prime_to_json(q: PrimeIdeal) -> dict:
    return {
        "killed": sorted(iter_bits(q.killed)),
        "blocks": [sorted(iter_bits(b)) for b in q.blocks],
        "d": q.dim,
        "text": render(q),
    }


def poset_to_json(p: IdealPoset) -> dict:
    return {
        "variant": p.variant,
        "n": p.graph.n,
        "elements": [prime_to_json(q) for q in p.elements],
        "hasse": [list(e) for e in hasse_edges(p)],
    }


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)
