"""Betti tables and degree-1 coranks, from matrices and from formulas.

At a fixed weight w the chain complex looks like

    0 <- C_{w,1} <- C_{w,2} <- C_{w,3} <- ...

so the Betti number in degree m is ker(d_m) - rank(d_{m+1}), with d_1 the
zero map.  The degree-1 corank crk(w, 2n) = dim C_{w,1} - rank(d_2) can
also be produced without any matrix work:

* recursively, crk(w, 2n) = 4 + 4 * sum_{1<=i<=w} crk(i, 2n-2)
  - 3 * crk(w, 2n-2), anchored at crk(w, 2) = 4 for w > 0;
* in closed form for 2n in {2, 4, 6}: 4, then 16w - 8, then
  4(8w^2 - 12w + 7);
* for the degenerate product structure on an n-torus pairing only 2m
  coordinates, crk(w, n) = sum_i crk(i, 2m) * dim V_{w-i} on the
  (n-2m)-torus.

Weight 0 is the central class of constants; its corank is 1 by convention
on the torus and no complex is assembled for it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache
from math import comb

from .basis import BasisKind, dim_graded_piece
from .bracket import PoissonStructure
from .chains import boundary_matrix, chain_basis, chain_dim
from .linalg import rank


@dataclass(frozen=True)
class DegreeCell:
    dim: int
    ker: int | None
    betti: int | None

    @property
    def skipped(self) -> bool:
        return self.ker is None or self.betti is None


@dataclass(frozen=True)
class BettiTable:
    w: int
    n: int
    kind: BasisKind
    pi: PoissonStructure
    cells: dict[int, DegreeCell] = field(compare=False)

    @property
    def degrees(self) -> list[int]:
        return sorted(self.cells)

    def row(self, what: str) -> list:
        return [getattr(self.cells[m], what) for m in self.degrees]


@dataclass(frozen=True)
class CorankSeries:
    two_n: int
    values: dict[int, int | None] = field(compare=False)
    source: str = "computed"  # or "recursive" / "closed"


def _boundary_rank(w, m, n, kind, pi, policy, seed, cache_store, bases):
    """Rank of d: C_{w,m} -> C_{w,m-1}, going through the cache if given."""
    M = None
    if cache_store is not None:
        M = cache_store.load(n=n, kind=kind, rank2m=pi.rank2m, w=w, m=m)
    if M is None:
        if m not in bases:
            bases[m] = chain_basis(w, m, n, kind, pi)
        if m - 1 not in bases:
            bases[m - 1] = chain_basis(w, m - 1, n, kind, pi)
        M = boundary_matrix(w, m, n, kind, pi, source=bases[m], target=bases[m - 1])
        if cache_store is not None:
            cache_store.store(M, n=n, kind=kind, rank2m=pi.rank2m, w=w, m=m)
    r, _cert = rank(M, policy=policy, seed=seed)
    return r


def betti_table(
    w: int,
    n: int,
    kind: BasisKind,
    pi: PoissonStructure,
    max_m: int,
    policy: str = "fast",
    seed: int = 0,
    budget: int | None = None,
    cache_store=None,
) -> BettiTable:
    """Exact dims, kernel dims and Betti numbers for degrees 1..max_m.

    Degrees whose boundary matrices exceed ``budget`` (by the smaller of
    rows and cols) are reported with ker/betti set to None, never
    approximated.
    """
    if max_m < 1:
        raise ValueError("need at least degree 1")
    dims = {m: chain_dim(w, m, n, kind, pi) for m in range(1, max_m + 2)}
    ranks: dict[int, int | None] = {1: 0}
    bases: dict[int, object] = {}
    for m in range(2, max_m + 2):
        if dims[m] == 0 or dims[m - 1] == 0:
            ranks[m] = 0
            continue
        if budget is not None and min(dims[m], dims[m - 1]) > budget:
            ranks[m] = None
            continue
        ranks[m] = _boundary_rank(w, m, n, kind, pi, policy, seed, cache_store, bases)
    cells = {}
    for m in range(1, max_m + 1):
        ker = None if ranks[m] is None else dims[m] - ranks[m]
        betti = None if (ker is None or ranks[m + 1] is None) else ker - ranks[m + 1]
        cells[m] = DegreeCell(dims[m], ker, betti)
    return BettiTable(w, n, kind, pi, cells)


def corank_computed(
    w: int,
    n: int,
    kind: BasisKind,
    pi: PoissonStructure,
    policy: str = "fast",
    seed: int = 0,
    cache_store=None,
) -> int:
    """dim C_{w,1} minus the rank of the boundary from degree 2."""
    if kind.on_torus:
        if w < 0:
            raise ValueError("torus weights are non-negative")
        if w == 0:
            return 1  # the central class of constants
    dim1 = chain_dim(w, 1, n, kind, pi)
    if dim1 == 0:
        return 0
    if chain_dim(w, 2, n, kind, pi) == 0:
        return dim1
    r = _boundary_rank(w, 2, n, kind, pi, policy, seed, cache_store, {})
    return dim1 - r


@cache
def corank_recursive(w: int, two_n: int) -> int:
    """Degree-1 corank on the symplectic torus, by pure arithmetic."""
    if two_n < 2 or two_n % 2:
        raise ValueError("torus dimension must be even and positive")
    if w < 0:
        raise ValueError("weight must be non-negative")
    if w == 0:
        return 1
    if two_n == 2:
        return 4
    return (
        4
        + 4 * sum(corank_recursive(i, two_n - 2) for i in range(1, w + 1))
        - 3 * corank_recursive(w, two_n - 2)
    )


def corank_closed(w: int, two_n: int) -> int | None:
    """Closed-form corank where one is known (2n in {2, 4, 6})."""
    if w < 1:
        raise ValueError("closed forms cover positive weights only")
    if two_n == 2:
        return 4
    if two_n == 4:
        return 16 * w - 8
    if two_n == 6:
        return 4 * (8 * w * w - 12 * w + 7)
    return None


def alternating_identity_check(w: int, n_param: int) -> bool:
    """Check sum_k (-1)^k C(n,k) crk(w-k, 2n+2) == 2^(2n+2) for w > n."""
    if n_param < 1 or w <= n_param:
        raise ValueError("the identity needs w > n >= 1")
    total = sum(
        (-1) ** k * comb(n_param, k) * corank_recursive(w - k, 2 * n_param + 2)
        for k in range(n_param + 1)
    )
    return total == 2 ** (2 * n_param + 2)


def corank_poisson_product(w: int, n: int, m: int) -> int:
    """Degree-1 corank for the product structure pairing 2m of n torus
    coordinates: convolution of the symplectic corank with the dimensions
    of the untouched (n-2m)-torus factors."""
    if m < 1 or 2 * m > n:
        raise ValueError("need 1 <= m and 2m <= n")
    if 2 * m == n:
        return corank_recursive(w, 2 * m)
    free = n - 2 * m
    total = 0
    for i in range(0, w + 1):
        total += corank_recursive(i, 2 * m) * dim_graded_piece(
            free, w - i, BasisKind.PRODUCT
        )
    return total


def corank_series(
    two_n: int,
    weights,
    source: str = "computed",
    kind: BasisKind = BasisKind.PRODUCT,
    pi: PoissonStructure | None = None,
    policy: str = "fast",
    seed: int = 0,
    cache_store=None,
) -> CorankSeries:
    """Corank-vs-weight sequence from one of the three sources."""
    values: dict[int, int | None] = {}
    for w in weights:
        if source == "computed":
            struct = pi if pi is not None else PoissonStructure.symplectic(two_n)
            values[w] = corank_computed(
                w, struct.n, kind, struct, policy=policy, seed=seed, cache_store=cache_store
            )
        elif source == "recursive":
            values[w] = corank_recursive(w, two_n)
        elif source == "closed":
            values[w] = 1 if w == 0 else corank_closed(w, two_n)
        else:
            raise ValueError(f"unknown corank source {source!r}")
    return CorankSeries(two_n, values, source)
