"""Exact reduced simplicial homology of order complexes.

Ranks are computed by sparse row reduction: over a prime field with modular
inverses, and in characteristic zero by integer-preserving (fraction-free)
elimination, so no floating point is ever involved.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Mapping, Sequence

from .errors import ResourceLimitExceeded
from .graphcore import iter_bits
from .poset import FinitePoset

DEFAULT_MAX_CHAINS = 5_000_000


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``characteristic`` 0 means the rationals."""

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not _is_prime(c):
            raise ValueError(f"field characteristic must be 0 or a prime, got {c}")

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = FieldSpec(0)


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers; ``values[0]`` is degree -1."""

    values: tuple[int, ...] = ()

    def __getitem__(self, degree: int) -> int:
        k = degree + 1
        return self.values[k] if 0 <= k < len(self.values) else 0

    def is_zero(self) -> bool:
        return not any(self.values)

    def nonzero(self) -> dict[int, int]:
        return {j - 1: b for j, b in enumerate(self.values) if b}

    @classmethod
    def zero(cls) -> BettiVector:
        return cls(())

    def __eq__(self, other):
        if not isinstance(other, BettiVector):
            return NotImplemented
        return self.nonzero() == other.nonzero()

    def __hash__(self):
        return hash(tuple(sorted(self.nonzero().items())))


@dataclass(frozen=True)
class SimplicialComplexOfChains:
    """Faces grouped by dimension: ``faces[d + 1]`` holds the ``d``-faces.

    Each face is a sorted tuple of vertex ids; ``faces[0]`` is ``[()]`` when
    the empty face is present and ``[]`` for the void complex.
    """

    faces: tuple[tuple[tuple[int, ...], ...], ...]

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]]) -> SimplicialComplexOfChains:
        found: set[tuple[int, ...]] = set()
        for f in facets:
            f = tuple(sorted(set(f)))
            if f in found:
                continue
            k = len(f)
            for bits in range(1 << k):
                found.add(tuple(f[i] for i in range(k) if bits >> i & 1))
        return cls._group(found)

    @classmethod
    def void(cls) -> SimplicialComplexOfChains:
        return cls(((),))

    @classmethod
    def _group(cls, faces: Iterable[tuple[int, ...]]) -> SimplicialComplexOfChains:
        by_dim: dict[int, list] = {}
        for f in faces:
            by_dim.setdefault(len(f), []).append(f)
        top = max(by_dim, default=0)
        return cls(tuple(tuple(sorted(by_dim.get(k, []))) for k in range(top + 1)))

    @property
    def dimension(self) -> int:
        return len(self.faces) - 2

    def f_vector(self) -> list[int]:
        """Face counts starting at dimension -1."""
        return [len(level) for level in self.faces]

    @property
    def facets(self) -> list[tuple[int, ...]]:
        out = []
        for k, level in enumerate(self.faces):
            bigger = set()
            if k + 1 < len(self.faces):
                for f in self.faces[k + 1]:
                    for i in range(len(f)):
                        bigger.add(f[:i] + f[i + 1:])
            out += [f for f in level if f not in bigger]
        return out


def order_complex(p: FinitePoset, max_chains: int = DEFAULT_MAX_CHAINS) -> SimplicialComplexOfChains:
    """All chains of ``p`` (including the empty chain), as faces on local indices.

    The empty poset gives ``{()}``.
    """
    up = p.up
    levels: list[list[tuple[int, ...]]] = [[()]]
    count = 1
    stack = [((i,), up[i]) for i in range(len(up) - 1, -1, -1)]
    while stack:
        chain, ext = stack.pop()
        k = len(chain)
        if k >= len(levels):
            levels.append([])
        levels[k].append(tuple(sorted(chain)))
        count += 1
        if count > max_chains:
            raise ResourceLimitExceeded(
                f"order complex exceeded {max_chains} chains", chains=count, poset_size=len(up))
        for j in iter_bits(ext):
            stack.append((chain + (j,), up[j]))
    return SimplicialComplexOfChains(tuple(tuple(sorted(lv)) for lv in levels))


# -- exact rank ----------------------------------------------------------------------------

def _rank_mod_p(rows: Iterable[Mapping[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {c: v % p for c, v in row.items() if v % p}
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(r[c], -1, p)
                pivots[c] = {k: v * inv % p for k, v in r.items()}
                break
            f = r[c]
            for k, v in piv.items():
                nv = (r.get(k, 0) - f * v) % p
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return len(pivots)


def _rank_integer(rows: Iterable[Mapping[int, int]]) -> int:
    # integer row operations r <- b*r - a*pivot, then divide out the content
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                pivots[c] = r
                break
            a, b = r[c], piv[c]
            new = {k: b * v for k, v in r.items()}
            for k, v in piv.items():
                nv = new.get(k, 0) - a * v
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
                if g == 1:
                    break
            r = {k: v // g for k, v in new.items()} if g > 1 else new
    return len(pivots)


def rank_exact(matrix, characteristic: int = 0) -> int:
    """Exact rank of an integer matrix over QQ or GF(p).

    ``matrix`` is a dense list of rows or a list of sparse ``{col: value}`` rows.
    """
    rows = [r if isinstance(r, Mapping) else {j: v for j, v in enumerate(r) if v}
            for r in matrix]
    if characteristic:
        return _rank_mod_p(rows, characteristic)
    return _rank_integer(rows)


def boundary_rows(cx: SimplicialComplexOfChains, d: int) -> list[dict[int, int]]:
    """Rows of the reduced boundary map from ``d``-faces to ``(d-1)``-faces.

    ``d = 0`` is the augmentation onto the empty face.
    """
    faces = cx.faces
    if d + 1 >= len(faces) or d < 0:
        return []
    lower = {f: i for i, f in enumerate(faces[d])}
    rows = []
    for f in faces[d + 1]:
        row = {}
        for i in range(len(f)):
            face = f[:i] + f[i + 1:]
            if face in lower:
                row[lower[face]] = -1 if i & 1 else 1
        rows.append(row)
    return rows


def reduced_betti(cx: SimplicialComplexOfChains, field: FieldSpec = QQ) -> BettiVector:
    """Reduced Betti numbers ``b~_d = dim ker d_d - rank d_{d+1}`` for ``d >= -1``."""
    f = cx.f_vector()
    if not f or f[0] == 0:
        return BettiVector.zero()
    top = len(f) - 2
    ranks = [rank_exact(boundary_rows(cx, d), field.characteristic) for d in range(top + 1)]
    # ranks[d] = rank of boundary from d-faces; boundary from (-1)-faces is zero
    values = []
    for d in range(-1, top + 1):
        r_out = ranks[d] if d >= 0 else 0
        r_in = ranks[d + 1] if d + 1 <= top else 0
        values.append(f[d + 1] - r_out - r_in)
    while values and values[-1] == 0:
        values.pop()
    return BettiVector(tuple(values))


def euler_poincare_holds(cx: SimplicialComplexOfChains, betti: BettiVector) -> bool:
    """Reduced Euler characteristic from faces equals the alternating Betti sum."""
    f = cx.f_vector()
    lhs = sum((-1) ** (k + 1) * n for k, n in enumerate(f))  # empty face has sign -1
    rhs = sum((-1) ** (k + 1) * b for k, b in enumerate(betti.values))
    return lhs == rhs
