"""Interlace polynomials of graphs.

The single-variable polynomial qn comes in five independent
implementations that must agree:

  recursive  pivot-and-delete recursion on edges
  closed     subset sum of (x-1)**nullity over all induced subgraphs
  bouchet    local-complementation recursion (three relations)
  avdh       column-choice sum over the [A | I] matrix
  isotropic  restricted Tutte-Martin polynomial of the graphic system

The two-variable polynomial q2 has a closed subset-sum form and an
independent reduction that moves through graphs with loops; qn is its
x=2 specialization.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from math import comb
from typing import Dict, List, Optional, Tuple

from ._workers import PARALLEL_THRESHOLD, resolve_workers
from .gf2 import rank
from .graph import SimpleGraph
from .poly import BiPoly, UniPoly, poly_from_shift_counts

QN_METHODS = ("recursive", "closed", "bouchet", "avdh", "isotropic")

# Subset-sum methods enumerate 2**n induced subgraphs.
SUBSET_SUM_CAP = 24

_qn_recursive_memo: Dict[bytes, Tuple[int, ...]] = {}
_qn_bouchet_memo: Dict[bytes, Tuple[int, ...]] = {}
_q2_reduction_memo: Dict[bytes, BiPoly] = {}


def clear_caches() -> None:
    _qn_recursive_memo.clear()
    _qn_bouchet_memo.clear()
    _q2_reduction_memo.clear()


def qn(g: SimpleGraph, method: str = "closed",
       workers: Optional[int] = None) -> UniPoly:
    """Single-variable interlace polynomial of a loopless graph.

    Args:
        g: loopless graph.
        method: one of QN_METHODS.
        workers: process count for the closed method (default: the
            INTERLACEPOLY_WORKERS environment variable, else the
            machine's available parallelism).

    Returns:
        UniPoly in x with nonnegative integer coefficients.
    """
    if method == "recursive":
        return qn_recursive(g)
    if method == "closed":
        return qn_closed(g, workers=workers)
    if method == "bouchet":
        return qn_bouchet(g)
    if method == "avdh":
        return qn_avdh(g)
    if method == "isotropic":
        return qn_isotropic(g)
    raise ValueError(f"unknown method {method!r}; expected one of {QN_METHODS}")


# -- recursive ----------------------------------------------------------


def qn_recursive(g: SimpleGraph) -> UniPoly:
    """Pivot-and-delete recursion: on the lexicographically least edge vw,
    qn(G) = qn(G - v) + qn(pivot(G, v, w) - w); qn of n isolated vertices
    is x**n.  Memoized on the exact labeled graph."""
    _require_loopless(g)
    return UniPoly(_qn_recursive_rec(g))


def _qn_recursive_rec(g: SimpleGraph) -> Tuple[int, ...]:
    key = g.canonical_key()
    hit = _qn_recursive_memo.get(key)
    if hit is not None:
        return hit
    edge = _least_edge(g)
    if edge is None:
        coeffs: Tuple[int, ...] = (0,) * g.n + (1,)
    else:
        v, w = edge
        a = _qn_recursive_rec(g.delete_vertex(v))
        b = _qn_recursive_rec(g.pivot(v, w).delete_vertex(w))
        coeffs = _add_coeffs(a, b)
    _qn_recursive_memo[key] = coeffs
    return coeffs


def _least_edge(g: SimpleGraph) -> Optional[Tuple[int, int]]:
    # Least v with a neighbor, then its least neighbor w; since the least
    # endpoint is found first, w > v and (v, w) is the lex-least edge.
    for v in range(g.n):
        row = g.adj[v]
        if row:
            return v, (row & -row).bit_length() - 1
    return None


def _add_coeffs(a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))


# -- closed subset sum --------------------------------------------------


def qn_closed(g: SimpleGraph, workers: Optional[int] = None) -> UniPoly:
    """Sum of (x-1)**(|W| - rank(A[W])) over all vertex subsets W, the
    rank taken over GF(2) of the induced adjacency submatrix."""
    _require_loopless(g)
    _require_subset_size(g.n)
    counts = _nullity_distribution(g.adj, g.n, resolve_workers(workers))
    return poly_from_shift_counts(counts)


def qn_closed_reference(g: SimpleGraph) -> UniPoly:
    """The same subset sum, spelled with the generic matrix machinery
    instead of the tuned inner loop.  Slow; kept as the reference the
    fast path is tested against."""
    _require_loopless(g)
    _require_subset_size(g.n)
    acc = UniPoly.zero()
    for mask in range(1 << g.n):
        subset = [v for v in range(g.n) if (mask >> v) & 1]
        nullity = len(subset) - rank(g.adjacency_matrix(subset))
        acc = acc.add_shifted_power(nullity, -1)
    return acc


def _nullity_distribution(adj: Tuple[int, ...], n: int, workers: int) -> List[int]:
    total = 1 << n
    if workers <= 1 or n < PARALLEL_THRESHOLD:
        return _nullity_counts(adj, n, 0, total)
    # Contiguous ranges are prefixes on the high subset bits; several
    # chunks per worker since low ranges hold the sparser subsets.
    step = max(1, total // (workers * 4))
    counts = [0] * (n + 1)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        jobs = [pool.submit(_nullity_counts, adj, n, start, min(start + step, total))
                for start in range(0, total, step)]
        for job in jobs:
            for k, c in enumerate(job.result()):
                counts[k] += c
    return counts


def _nullity_counts(adj: Tuple[int, ...], n: int, start: int, stop: int) -> List[int]:
    counts = [0] * (n + 1)
    for m in range(start, stop):
        rank_ = 0
        piv: Dict[int, int] = {}
        w = m
        while w:
            v = (w & -w).bit_length() - 1
            w &= w - 1
            r = adj[v] & m
            while r:
                h = r.bit_length()
                p = piv.get(h)
                if p is None:
                    piv[h] = r
                    rank_ += 1
                    break
                r ^= p
        counts[m.bit_count() - rank_] += 1
    return counts


# -- column-choice sum --------------------------------------------------


def qn_avdh(g: SimpleGraph) -> UniPoly:
    """Sum of (x-1)**corank over the 2**n admissible column choices from
    the n x 2n matrix [A | I]: for each index i take either the i-th
    adjacency column or the i-th identity column.

    Computed by depth-first search over the choices, keeping one shared
    elimination state that is extended on descent and popped on return.
    """
    _require_loopless(g)
    _require_subset_size(g.n)
    n = g.n
    adj = g.adj
    counts = [0] * (n + 1)
    piv: Dict[int, int] = {}

    def go(i: int, rank_: int) -> None:
        if i == n:
            counts[n - rank_] += 1
            return
        for vec in (adj[i], 1 << i):
            r = vec
            while r:
                h = r.bit_length()
                p = piv.get(h)
                if p is None:
                    break
                r ^= p
            if r:
                h = r.bit_length()
                piv[h] = r
                go(i + 1, rank_ + 1)
                del piv[h]
            else:
                go(i + 1, rank_)

    go(0, 0)
    return poly_from_shift_counts(counts)


# -- local-complementation recursion --------------------------------------


def qn_bouchet(g: SimpleGraph) -> UniPoly:
    """Recursion by local complementations: qn of the empty graph is 1;
    for isolated v, qn(G) = x * qn(G - v); for an edge vw,
    qn(G) = qn(G - v) + qn(lc(lc(lc(G, v), w), v) - v), where lc is
    local complementation.  Memoized on the exact labeled graph."""
    _require_loopless(g)
    return UniPoly(_qn_bouchet_rec(g))


def _qn_bouchet_rec(g: SimpleGraph) -> Tuple[int, ...]:
    if g.n == 0:
        return (1,)
    key = g.canonical_key()
    hit = _qn_bouchet_memo.get(key)
    if hit is not None:
        return hit
    row = g.adj[0]
    if row == 0:
        coeffs: Tuple[int, ...] = (0,) + _qn_bouchet_rec(g.delete_vertex(0))
    else:
        w = (row & -row).bit_length() - 1
        a = _qn_bouchet_rec(g.delete_vertex(0))
        flipped = g.local_complement(0).local_complement(w).local_complement(0)
        b = _qn_bouchet_rec(flipped.delete_vertex(0))
        coeffs = _add_coeffs(a, b)
    _qn_bouchet_memo[key] = coeffs
    return coeffs


# -- isotropic-system route -----------------------------------------------


def qn_isotropic(g: SimpleGraph) -> UniPoly:
    """qn via the restricted Tutte-Martin polynomial of the graphic
    isotropic system of g, with the canonical presentation."""
    from .isotropic import tutte_martin_canonical
    return tutte_martin_canonical(g)


# -- two-variable polynomial ----------------------------------------------


def q2_closed(g: SimpleGraph) -> BiPoly:
    """Sum of (x-1)**rank * (y-1)**nullity over all vertex subsets W,
    rank and nullity of the induced adjacency submatrix over GF(2).
    Loops contribute diagonal ones."""
    _require_subset_size(g.n)
    n = g.n
    adj = g.adj
    counts: Dict[Tuple[int, int], int] = {}
    for m in range(1 << n):
        rank_ = 0
        piv: Dict[int, int] = {}
        w = m
        while w:
            v = (w & -w).bit_length() - 1
            w &= w - 1
            r = adj[v] & m
            while r:
                h = r.bit_length()
                p = piv.get(h)
                if p is None:
                    piv[h] = r
                    rank_ += 1
                    break
                r ^= p
        key = (rank_, m.bit_count() - rank_)
        counts[key] = counts.get(key, 0) + 1
    return _bipoly_from_rank_counts(counts)


def q2_reduction(g: SimpleGraph) -> BiPoly:
    """q2 by reduction.  On the least edge ab whose endpoints both lack
    loops (other vertices may be looped):
    q2(G) = q2(G - a) + q2(G' - b) + ((x-1)**2 - 1) * q2(G' - a - b)
    with G' = pivot(G, a, b).  With no such edge, the least looped
    vertex a gives q2(G) = q2(G - a) + (x-1) * q2(lc(G, a) - a); local
    complementation at a looped vertex flips loops as well.  A graph
    with neither (edgeless) is the base case y**n."""
    return _q2_reduction_rec(g)


_X_MINUS_1 = BiPoly({(1, 0): 1, (0, 0): -1})
_X_MINUS_1_SQ_MINUS_1 = BiPoly({(2, 0): 1, (1, 0): -2})


def _q2_reduction_rec(g: SimpleGraph) -> BiPoly:
    key = g.canonical_key()
    hit = _q2_reduction_memo.get(key)
    if hit is not None:
        return hit
    edge = _least_loopless_edge(g)
    if edge is not None:
        a, b = edge
        # The pivot endpoints are loop-free; other vertices need not be,
        # so this goes through the endpoint-checked internal entry.
        pivoted = g._pivot_unchecked(a, b)
        minus_b = pivoted.delete_vertex(b)
        res = (_q2_reduction_rec(g.delete_vertex(a))
               + _q2_reduction_rec(minus_b)
               + _X_MINUS_1_SQ_MINUS_1 * _q2_reduction_rec(minus_b.delete_vertex(a)))
    else:
        looped = None
        for v in range(g.n):
            if (g.adj[v] >> v) & 1:
                looped = v
                break
        if looped is not None:
            a = looped
            res = (_q2_reduction_rec(g.delete_vertex(a))
                   + _X_MINUS_1 * _q2_reduction_rec(g.local_complement(a).delete_vertex(a)))
        else:
            res = BiPoly({(0, g.n): 1})
    _q2_reduction_memo[key] = res
    return res


def _least_loopless_edge(g: SimpleGraph) -> Optional[Tuple[int, int]]:
    """Lex-least edge ab with neither endpoint looped, as (a, b), a < b."""
    unlooped = 0
    for v in range(g.n):
        if not (g.adj[v] >> v) & 1:
            unlooped |= 1 << v
    for a in range(g.n):
        if not (unlooped >> a) & 1:
            continue
        row = g.adj[a] & unlooped
        if row:
            # Any qualifying neighbor below a would have been found first.
            return a, (row & -row).bit_length() - 1
    return None


def qn_from_q2(g: SimpleGraph) -> UniPoly:
    """The x=2 specialization of q2, which equals qn for loopless graphs;
    returned in the variable y that the specialization leaves free."""
    _require_loopless(g)
    return q2_closed(g).eval_at(2)


# -- shared helpers -------------------------------------------------------


def _require_loopless(g: SimpleGraph) -> None:
    if g.has_loops():
        raise ValueError("qn is defined for loopless graphs only")


def _require_subset_size(n: int) -> None:
    if n > SUBSET_SUM_CAP:
        raise ValueError(
            f"subset-sum methods are capped at {SUBSET_SUM_CAP} vertices, got {n}")


def _bipoly_from_rank_counts(counts: Dict[Tuple[int, int], int],
                             vars: Tuple[str, str] = ("x", "y")) -> BiPoly:
    """Expand sum over (r, u) of counts[(r, u)] * (x-1)**r * (y-1)**u."""
    terms: Dict[Tuple[int, int], int] = {}
    for (r, u), c in counts.items():
        for i in range(r + 1):
            ci = c * comb(r, i) * (-1) ** (r - i)
            for j in range(u + 1):
                cij = ci * comb(u, j) * (-1) ** (u - j)
                if cij:
                    terms[(i, j)] = terms.get((i, j), 0) + cij
    return BiPoly(terms, vars)
