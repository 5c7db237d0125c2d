"""Local cohomology support, depth, dimension and Cohen-Macaulayness of ``S/J_G``.

Every prime ``q`` of the poset contributes ``H^{d_q}_m(S/q)`` to
``H^i_m(S/J_G)`` with multiplicity ``M_{i,q}``, the dimension of the reduced
(co)homology of the open interval ``(q, 1)`` in degree ``i - d_q - 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from dataclasses import field as dc_field
from typing import Union

from .graphcore import Graph
from .homology import (
    DEFAULT_MAX_CHAINS,
    QQ,
    BettiVector,
    FieldSpec,
    order_complex,
    reduced_betti,
)
from .ideals import PrimeIdeal, p_empty
from .poset import (
    Q,
    IdealPoset,
    PosetLimits,
    build_poset,
    is_meet_contractible,
    open_interval,
)

EMPTY_INTERVAL = BettiVector((1,))


def interval_betti(p: IdealPoset, q: PrimeIdeal, field: FieldSpec = QQ, *,
                   shortcuts: bool = True, max_chains: int = DEFAULT_MAX_CHAINS) -> BettiVector:
    """Reduced Betti numbers of the order complex of ``(q, 1)``.

    With ``shortcuts`` an interval with a least or greatest element, or in
    which ``P_{}(G)`` has a meet with everything, is known to be contractible
    and no matrices are built.
    """
    sub = open_interval(p, q)
    if len(sub) == 0:
        return EMPTY_INTERVAL
    if shortcuts:
        if sub.minimum() is not None or sub.maximum() is not None:
            return BettiVector.zero()
        pe = p.index.get(p_empty(p.graph))
        if pe is not None and pe in sub.labels:
            local = sub.labels.index(pe)
            if is_meet_contractible(sub, prefer=[local]) == local:
                return BettiVector.zero()
    return reduced_betti(order_complex(sub, max_chains), field)


def _as_poset(source: Union[Graph, IdealPoset], variant: str, limits: PosetLimits) -> IdealPoset:
    if isinstance(source, IdealPoset):
        return source
    return build_poset(source, variant, limits)


def multiplicities(source: Union[Graph, IdealPoset], field: FieldSpec = QQ, variant: str = Q, *,
                   limits: PosetLimits = PosetLimits(), shortcuts: bool = True,
                   max_chains: int = DEFAULT_MAX_CHAINS) -> dict[PrimeIdeal, BettiVector]:
    p = _as_poset(source, variant, limits)
    return {q: interval_betti(p, q, field, shortcuts=shortcuts, max_chains=max_chains)
            for q in p.elements}


@dataclass
class LCTable:
    """Support of ``H^i_m(S/J_G)``: ``rows[i]`` lists ``(d, multiplicity)`` pairs."""

    rows: dict[int, tuple[tuple[int, int], ...]]
    depth: int
    dim: int
    cm: bool
    field: FieldSpec = QQ
    variant: str = Q
    betti: dict[PrimeIdeal, BettiVector] = dc_field(default_factory=dict, repr=False, compare=False)

    def to_json(self) -> dict:
        return {
            "depth": self.depth,
            "dim": self.dim,
            "cohen_macaulay": self.cm,
            "field": self.field.characteristic,
            "variant": self.variant,
            "rows": {str(i): [{"d": d, "m": m} for d, m in pairs]
                     for i, pairs in sorted(self.rows.items())},
        }

    def render(self) -> str:
        lines = [f"field {self.field}, variant {self.variant}"]
        for i, pairs in sorted(self.rows.items()):
            terms = " + ".join(f"H^{d}(S/q)^{m}" if m > 1 else f"H^{d}(S/q)" for d, m in pairs)
            lines.append(f"  H^{i}_m(S/J_G) ~ {terms}")
        lines.append(f"depth {self.depth}, dim {self.dim}, "
                     + ("Cohen-Macaulay" if self.cm else "not Cohen-Macaulay"))
        return "\n".join(lines)


def assemble(p: IdealPoset, betti: dict[PrimeIdeal, BettiVector], field: FieldSpec = QQ) -> LCTable:
    acc: dict[int, dict[int, int]] = {}
    for q, b in betti.items():
        for j, m in b.nonzero().items():
            i = q.dim + j + 1
            acc.setdefault(i, {})
            acc[i][q.dim] = acc[i].get(q.dim, 0) + m
    rows = {i: tuple(sorted(ds.items())) for i, ds in sorted(acc.items())}
    depth = min(rows)
    dim = max(q.dim for q in p.maximal_elements())
    return LCTable(rows, depth, dim, depth == dim, field, p.variant, betti)


def lc_table(source: Union[Graph, IdealPoset], field: FieldSpec = QQ, variant: str = Q, *,
             limits: PosetLimits = PosetLimits(), shortcuts: bool = True,
             max_chains: int = DEFAULT_MAX_CHAINS) -> LCTable:
    p = _as_poset(source, variant, limits)
    betti = multiplicities(p, field, shortcuts=shortcuts, max_chains=max_chains)
    return assemble(p, betti, field)


def depth(g: Graph, field: FieldSpec = QQ, **kwargs) -> int:
    return lc_table(g, field, Q, **kwargs).depth


def dimension(g: Graph) -> int:
    """Krull dimension of ``S/J_G`` straight from the minimal primes."""
    from .ideals import minimal_primes_of_graph
    return max(q.dim for q in minimal_primes_of_graph(g))
