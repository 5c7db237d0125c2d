"""Per-graph invariant checks, exhaustive surveys and field comparisons."""
from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from . import bounds as bnd
from .depthengine import LCTable, assemble, interval_betti
from .errors import InvariantViolation, ResourceLimitExceeded
from .graphcore import Graph, all_labeled_graphs, to_graph6
from .homology import DEFAULT_MAX_CHAINS, FieldSpec
from .ideals import add_p_empty, maximal_ideal, minimal_primes_of_graph, p_empty, render
from .poset import A, Q, IdealPoset, PosetLimits, build_poset, is_meet_contractible, open_interval

PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"

CHECK_NAMES = (
    "closure_under_p_empty",
    "no_dim_one_quotient",
    "corner_multiplicities_vanish",
    "maximal_ideal_interval_contractible",
    "maximal_elements_are_min_primes",
    "a_subset_of_q",
    "variant_depth_agreement",
    "variant_table_agreement",
    "bounds_sandwich",
    "depth4_characterization",
    "family_oracle",
)


@dataclass(frozen=True)
class RunConfig:
    characteristic: int = 0
    variant: str = Q  # "Q", "A" or "both"
    max_n: int = 8
    max_elements: int = 200_000
    max_chains: int = DEFAULT_MAX_CHAINS
    timeout_s: float = 600.0

    def __post_init__(self):
        FieldSpec(self.characteristic)
        if self.variant not in (Q, A, "both"):
            raise ValueError(f"variant must be Q, A or both, not {self.variant!r}")
        if min(self.max_n, self.max_elements, self.max_chains) <= 0 or self.timeout_s <= 0:
            raise ValueError("caps must be positive")

    @property
    def field(self) -> FieldSpec:
        return FieldSpec(self.characteristic)

    @property
    def limits(self) -> PosetLimits:
        return PosetLimits(self.max_n, self.max_elements, self.timeout_s)


def compute_table(p: IdealPoset, cfg: RunConfig, deadline: float | None = None) -> LCTable:
    betti = {}
    for q in p.elements:
        if deadline is not None and time.monotonic() > deadline:
            raise ResourceLimitExceeded(f"exceeded {cfg.timeout_s} s computing multiplicities",
                                        done=len(betti), elements=len(p))
        betti[q] = interval_betti(p, q, cfg.field, max_chains=cfg.max_chains)
    return assemble(p, betti, cfg.field)


@dataclass
class CheckItem:
    name: str
    status: str
    detail: str = ""


@dataclass
class CheckReport:
    graph: Graph
    items: list[CheckItem]
    depth: dict[str, int] = field(default_factory=dict)
    dim: int | None = None
    sizes: dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(it.status != FAIL for it in self.items)

    def item(self, name: str) -> CheckItem:
        return next(it for it in self.items if it.name == name)

    def to_json(self) -> dict:
        return {
            "graph6": to_graph6(self.graph),
            "n": self.graph.n,
            "depth": self.depth,
            "dim": self.dim,
            "poset_sizes": self.sizes,
            "items": [{"name": it.name, "status": it.status, "detail": it.detail}
                      for it in self.items],
        }

    def render(self) -> str:
        lines = [f"graph {to_graph6(self.graph)} (n={self.graph.n})"]
        lines += [f"  {it.status:7s} {it.name}" + (f"  [{it.detail}]" if it.detail else "")
                  for it in self.items]
        return "\n".join(lines)


def _verdict(ok: bool, detail: str = "") -> tuple[str, str]:
    return (PASS if ok else FAIL), detail


def check_graph(g: Graph, cfg: RunConfig = RunConfig()) -> CheckReport:
    """Run every structural and numerical invariant against one graph."""
    deadline = time.monotonic() + cfg.timeout_s
    try:
        pq = build_poset(g, Q, cfg.limits)
        pa = build_poset(g, A, cfg.limits)
        tq = compute_table(pq, cfg, deadline)
        ta = compute_table(pa, cfg, deadline)
    except ResourceLimitExceeded as exc:
        return CheckReport(g, [CheckItem(name, SKIPPED, str(exc)) for name in CHECK_NAMES])

    items: list[CheckItem] = []

    def add(name, fn):
        try:
            status, detail = fn()
        except ResourceLimitExceeded as exc:
            status, detail = SKIPPED, str(exc)
        except InvariantViolation as exc:
            status, detail = FAIL, str(exc)
        items.append(CheckItem(name, status, detail))

    qset, aset = set(pq.elements), set(pa.elements)

    def closure():
        bad = [q for q in pq.elements if add_p_empty(q, g) not in qset]
        return _verdict(not bad, "; ".join(render(q) for q in bad[:3]))

    def sug2():
        bad = [q for q in (*pq.elements, *pa.elements) if q.dim == 1]
        return _verdict(not bad, "; ".join(render(q) for q in bad[:3]))

    corners = [q for q in pq.elements if g.n >= 2 and bin(q.killed).count("1") >= g.n - 1]

    def corner_betti():
        if not corners:
            return PASS, "vacuous: no such element"
        bad = [q for q in corners
               if not interval_betti(pq, q, cfg.field, shortcuts=False,
                                     max_chains=cfg.max_chains).is_zero()]
        return _verdict(not bad, f"{len(corners)} checked" + "".join(f"; {render(q)}" for q in bad[:3]))

    def north():
        if not corners:
            return PASS, "vacuous: no such element"
        pe = pq.index[p_empty(g)]
        notes = []
        for q in corners:
            sub = open_interval(pq, q)
            prefer = [sub.labels.index(pe)] if pe in sub.labels else []
            if is_meet_contractible(sub, prefer) is None:
                return FAIL, f"no meet witness in ({render(q)}, 1)"
            betti = interval_betti(pq, q, cfg.field, shortcuts=False, max_chains=cfg.max_chains)
            if not betti.is_zero():
                return FAIL, f"({render(q)}, 1) has homology {betti.nonzero()}"
            notes.append("m" if q == maximal_ideal(g.n) else "m^")
        return PASS, "checked " + ",".join(notes)

    def maximal():
        mins = set(minimal_primes_of_graph(g))
        ok = set(pq.maximal_elements()) == mins and set(pa.maximal_elements()) == mins
        return _verdict(ok)

    def subset():
        ok = aset <= qset
        return _verdict(ok, f"|A|={len(aset)} |Q|={len(qset)} " + ("strict" if aset < qset else "equal"))

    def variant_depth():
        return _verdict(tq.depth == ta.depth, f"Q={tq.depth} A={ta.depth}")

    def variant_table():
        return _verdict(tq.rows == ta.rows)

    def sandwich():
        rep = bnd.bounds_report(g)
        lower = max(rep.component_lower, rep.faltings_lower or 0)
        upper = rep.bn_upper
        ok = lower <= tq.depth and (upper is None or tq.depth <= upper)
        chain = bnd.inequality_chain(g)
        if chain is not None:
            ok = ok and all(a <= b for a, b in zip(chain, chain[1:]))
        return _verdict(ok, f"{lower} <= {tq.depth} <= {upper if upper is not None else '-'}"
                        + (f"; chain {chain}" if chain else ""))

    def small():
        if g.n < 4:
            return PASS, "vacuous: n < 4"
        v = bnd.check_depth4_characterization(g, tq.depth)
        return _verdict(v.passed, str(v))

    def family():
        fam = bnd.family_oracle(g)
        if fam is None:
            return PASS, "vacuous: no known family"
        return _verdict(fam[1] == tq.depth, f"{fam[0]}: expected {fam[1]}, got {tq.depth}")

    for name, fn in zip(CHECK_NAMES, (closure, sug2, corner_betti, north, maximal, subset,
                                      variant_depth, variant_table, sandwich, small, family)):
        add(name, fn)
    return CheckReport(g, items, {Q: tq.depth, A: ta.depth}, tq.dim, {Q: len(pq), A: len(pa)})


# -- surveys --------------------------------------------------------------------------------

@dataclass
class SurveySummary:
    graphs: int = 0
    status_counts: dict[str, Counter] = field(default_factory=dict)
    failures: list[tuple[str, str, str]] = field(default_factory=list)
    depth_histogram: Counter = field(default_factory=Counter)
    depth4: int = 0
    join_witness: int = 0

    @property
    def failed(self) -> int:
        return len(self.failures)

    def to_json(self) -> dict:
        return {
            "graphs": self.graphs,
            "status_counts": {k: dict(sorted(v.items())) for k, v in self.status_counts.items()},
            "failures": [{"graph6": g6, "item": item, "detail": d} for g6, item, d in self.failures],
            "depth_histogram": {str(k): v for k, v in sorted(self.depth_histogram.items())},
            "depth4_graphs": self.depth4,
            "join_2k1_graphs": self.join_witness,
        }

    def render(self) -> str:
        lines = [f"graphs checked: {self.graphs}", "item counts:"]
        for name in CHECK_NAMES:
            c = self.status_counts.get(name, Counter())
            lines.append(f"  {name:38s} " + " ".join(f"{s}={c[s]}" for s in (PASS, FAIL, SKIPPED)))
        lines.append("depth histogram: " + ", ".join(
            f"{d}:{c}" for d, c in sorted(self.depth_histogram.items())))
        lines.append(f"depth-4 graphs (n>=4): {self.depth4}; join-2K1 graphs (n>=4): {self.join_witness}")
        lines.append(f"failures: {self.failed}")
        lines += [f"  {g6} {item}: {d}" for g6, item, d in self.failures]
        return "\n".join(lines)


def survey(graphs: Iterable[Graph], cfg: RunConfig = RunConfig()) -> SurveySummary:
    out = SurveySummary(status_counts={name: Counter() for name in CHECK_NAMES})
    for g in graphs:
        rep = check_graph(g, cfg)
        out.graphs += 1
        for it in rep.items:
            out.status_counts[it.name][it.status] += 1
            if it.status == FAIL:
                out.failures.append((to_graph6(g), it.name, it.detail))
        if Q in rep.depth:
            out.depth_histogram[rep.depth[Q]] += 1
            if g.n >= 4:
                out.depth4 += rep.depth[Q] == 4
        if g.n >= 4:
            out.join_witness += bnd.join_2k1_witness(g) is not None
    return out


def survey_n(n: int, cfg: RunConfig = RunConfig()) -> SurveySummary:
    if n > cfg.max_n:
        raise ResourceLimitExceeded(f"survey capped at n={cfg.max_n}", n=n)
    return survey(all_labeled_graphs(n), cfg)


@dataclass
class FieldComparison:
    characteristics: tuple[int, ...]
    depths: list[tuple[str, tuple[int, ...]]]

    @property
    def disagreements(self) -> list[tuple[str, tuple[int, ...]]]:
        return [(g6, ds) for g6, ds in self.depths if len(set(ds)) > 1]

    def to_json(self) -> dict:
        return {
            "characteristics": list(self.characteristics),
            "graphs": len(self.depths),
            "disagreements": [{"graph6": g6, "depths": list(ds)} for g6, ds in self.disagreements],
        }

    def render(self) -> str:
        head = "/".join(str(FieldSpec(c)) for c in self.characteristics)
        lines = [f"depth over {head} on {len(self.depths)} graphs: "
                 f"{len(self.disagreements)} disagreement(s)"]
        lines += [f"  FLAG {g6}: " + ", ".join(f"{FieldSpec(c)}={d}" for c, d in zip(self.characteristics, ds))
                  for g6, ds in self.disagreements]
        return "\n".join(lines)


def field_comparison(graphs: Iterable[Graph], characteristics=(0, 2, 3),
                     cfg: RunConfig = RunConfig()) -> FieldComparison:
    """Depth of every graph over each field; differences are reported, not asserted."""
    rows = []
    for g in graphs:
        p = build_poset(g, Q, cfg.limits)
        ds = tuple(compute_table(p, RunConfig(c, max_chains=cfg.max_chains)).depth
                   for c in characteristics)
        rows.append((to_graph6(g), ds))
    return FieldComparison(tuple(characteristics), rows)
