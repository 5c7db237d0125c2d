"""Closed-form depth bounds and the depth-4 characterization for ``S/J_G``."""
from __future__ import annotations

from dataclasses import asdict, dataclass

from .graphcore import (
    Graph,
    component_masks,
    is_block_graph,
    is_clique,
    is_complete,
    is_connected,
    is_cycle,
    join_2k1_witness,
    vertex_connectivity,
)
from .ideals import minimal_primes_of_graph


def _component_profile(g: Graph) -> tuple[int, list[int]]:
    """Number of non-complete components and the sizes of the complete ones."""
    r = 0
    complete_sizes = []
    for c in component_masks(g):
        if is_clique(g, c):
            complete_sizes.append(bin(c).count("1"))
        else:
            r += 1
    return r, complete_sizes


def component_lower_bound(g: Graph) -> int:
    """``4r + sum over complete components of (size + 1)``."""
    r, sizes = _component_profile(g)
    return 4 * r + sum(s + 1 for s in sizes)


def bigheight(g: Graph) -> int:
    return max(q.height for q in minimal_primes_of_graph(g))


def faltings_lower_bound(g: Graph) -> int | None:
    """``floor((2n - 1) / bigheight J_G)``; ``None`` when ``J_G = 0``."""
    if g.num_edges() == 0:
        return None
    return (2 * g.n - 1) // bigheight(g)


def bn_upper_bound(g: Graph) -> int | None:
    """``n - kappa(G) + 2`` for connected non-complete graphs, else ``None``."""
    if not is_connected(g) or is_complete(g):
        return None
    return g.n - vertex_connectivity(g) + 2


def inequality_chain(g: Graph) -> tuple[int, int, int, int] | None:
    """``(floor((2n-1)/bigheight), r+t+1, 4r+2t, component bound)``.

    Only defined when some component is not complete; the four numbers are
    expected to be non-decreasing.
    """
    r, sizes = _component_profile(g)
    if r == 0:
        return None
    t = len(sizes)
    return ((2 * g.n - 1) // bigheight(g), r + t + 1, 4 * r + 2 * t, component_lower_bound(g))


def family_oracle(g: Graph) -> tuple[str, int] | None:
    """Known depth for cycles (``n``, ``n > 3``) and connected block graphs (``n + 1``)."""
    if is_cycle(g) and g.n > 3:
        return ("cycle", g.n)
    if is_connected(g) and is_block_graph(g):
        return ("block", g.n + 1)
    return None


@dataclass(frozen=True)
class Depth4Verdict:
    passed: bool
    depth: int
    witness: tuple[int, int] | None

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        return f"{status}: depth={self.depth}, join-2K1 witness={self.witness}"


def check_depth4_characterization(g: Graph, computed_depth: int) -> Depth4Verdict:
    """Depth 4 iff ``G = G' * 2K_1``; only meaningful for ``n >= 4``."""
    if g.n < 4:
        raise ValueError("the depth-4 characterization needs at least 4 vertices")
    w = join_2k1_witness(g)
    return Depth4Verdict((computed_depth == 4) == (w is not None), computed_depth, w)


@dataclass(frozen=True)
class BoundsReport:
    component_lower: int
    faltings_lower: int | None
    bn_upper: int | None
    bigheight: int
    join2k1: tuple[int, int] | None
    family_oracle: tuple[str, int] | None

    def to_json(self) -> dict:
        d = asdict(self)
        d["join2k1"] = list(self.join2k1) if self.join2k1 else None
        d["family_oracle"] = (
            {"family": self.family_oracle[0], "depth": self.family_oracle[1]}
            if self.family_oracle else None)
        return d

    def render(self) -> str:
        lines = [
            f"  component lower bound: {self.component_lower}",
            f"  bigheight lower bound: {self.faltings_lower if self.faltings_lower is not None else '-'}"
            f" (bigheight {self.bigheight})",
            f"  connectivity upper bound: {self.bn_upper if self.bn_upper is not None else '-'}",
            f"  join-2K1 witness: {self.join2k1 if self.join2k1 else '-'}",
        ]
        if self.family_oracle:
            lines.append(f"  known family: {self.family_oracle[0]} (depth {self.family_oracle[1]})")
        return "\n".join(lines)


def bounds_report(g: Graph) -> BoundsReport:
    return BoundsReport(
        component_lower=component_lower_bound(g),
        faltings_lower=faltings_lower_bound(g),
        bn_upper=bn_upper_bound(g),
        bigheight=bigheight(g),
        join2k1=join_2k1_witness(g) if g.n >= 2 else None,
        family_oracle=family_oracle(g),
    )
