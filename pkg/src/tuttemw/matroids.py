"""Brute-force matroid ground truth via explicit rank tables.

Subsets of the ground set {0, ..., m-1} are bitmasks and a matroid is a
table of 2^m rank values. Everything here is an oracle for cross-checking
the closed forms at small sizes, so every operation carries a hard size
guard: the production path never goes through this module.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .errors import InvalidParametersError, NotABasisError, SizeLimitError
from .exact import BivariatePoly, binomial

MAX_ORACLE_ELEMENTS = 22
MAX_UNIFORM_ELEMENTS = 24
MAX_AXIOM_ELEMENTS = 16


class RankOracleMatroid:
    """Explicit matroid on m <= 24 elements given by its full rank table."""

    __slots__ = ("m", "ranks")

    def __init__(self, m: int, ranks: Sequence[int]):
        if m < 0:
            raise InvalidParametersError(f"ground-set size must be non-negative, got {m}")
        if len(ranks) != 1 << m:
            raise InvalidParametersError(
                f"rank table for m={m} needs {1 << m} entries, got {len(ranks)}"
            )
        self.m = m
        self.ranks = list(ranks)

    @property
    def full_rank(self) -> int:
        return self.ranks[-1]

    def rank(self, subset: int) -> int:
        return self.ranks[subset]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RankOracleMatroid):
            return NotImplemented
        return self.m == other.m and self.ranks == other.ranks

    def __repr__(self) -> str:
        return f"RankOracleMatroid(m={self.m}, rank={self.full_rank})"

    def to_text(self) -> str:
        """Fixture format: first line m, then the 2^m rank values."""
        return f"{self.m}\n{' '.join(map(str, self.ranks))}\n"

    @classmethod
    def from_text(cls, text: str) -> "RankOracleMatroid":
        tokens = text.split()
        if not tokens:
            raise InvalidParametersError("empty rank-table text")
        m = int(tokens[0])
        return cls(m, [int(t) for t in tokens[1:]])


def _require_size(m: int, limit: int, what: str) -> None:
    if m > limit:
        raise SizeLimitError(f"{what} is limited to {limit} elements, got {m}")


def uniform_oracle(n: int, r: int) -> RankOracleMatroid:
    """Rank table of U(n, r): rank of S is min(|S|, r)."""
    _require_size(n, MAX_UNIFORM_ELEMENTS, "uniform_oracle")
    if not (0 <= r <= n):
        raise InvalidParametersError(f"need 0 <= r <= n, got n={n}, r={r}")
    return RankOracleMatroid(n, [min(s.bit_count(), r) for s in range(1 << n)])


def rank_axioms_check(matroid: RankOracleMatroid) -> bool:
    """True iff the table is a matroid rank function.

    Checks normalization, unit-increase monotonicity, and submodularity in
    its local form r(S+e) + r(S+f) >= r(S+e+f) + r(S), which together with
    unit increase is equivalent to full submodularity but needs only
    2^m * m^2 probes instead of 4^m.
    """
    m = matroid.m
    _require_size(m, MAX_AXIOM_ELEMENTS, "rank_axioms_check")
    ranks = matroid.ranks
    if ranks[0] != 0:
        return False
    for subset in range(1 << m):
        rs = ranks[subset]
        outside = [e for e in range(m) if not subset >> e & 1]
        for e in outside:
            re = ranks[subset | 1 << e]
            if not rs <= re <= rs + 1:
                return False
        for a in range(len(outside)):
            e_bit = 1 << outside[a]
            re = ranks[subset | e_bit]
            for b in range(a + 1, len(outside)):
                f_bit = 1 << outside[b]
                if re + ranks[subset | f_bit] < ranks[subset | e_bit | f_bit] + rs:
                    return False
    return True


def subset_expansion_tutte(matroid: RankOracleMatroid) -> BivariatePoly:
    """Tutte polynomial by the corank-nullity sum over all 2^m subsets.

    Subsets are first binned by (corank, nullity); each bin expands its
    (x-1)^a (y-1)^b contribution once.
    """
    m = matroid.m
    _require_size(m, MAX_ORACLE_ELEMENTS, "subset_expansion_tutte")
    full = matroid.full_rank
    ranks = matroid.ranks
    counts = [[0] * (m - full + 1) for _ in range(full + 1)]
    for subset in range(1 << m):
        rs = ranks[subset]
        counts[full - rs][subset.bit_count() - rs] += 1
    coeffs: dict[tuple[int, int], int] = {}
    for a, row in enumerate(counts):
        for b, cnt in enumerate(row):
            if not cnt:
                continue
            for i in range(a + 1):
                cx = cnt * binomial(a, i) * (-1 if (a - i) & 1 else 1)
                for j in range(b + 1):
                    c = cx * binomial(b, j) * (-1 if (b - j) & 1 else 1)
                    key = (i, j)
                    coeffs[key] = coeffs.get(key, 0) + c
    return BivariatePoly(coeffs)


def thicken_matroid(matroid: RankOracleMatroid, k: int) -> RankOracleMatroid:
    """Replace each element by k parallel copies.

    Copy c of element e becomes bit k*e + c, so the first copies sit at
    bits k*e; the rank of a subset is the base rank of its support.
    """
    if k < 1:
        raise InvalidParametersError(f"thickening multiplicity must be >= 1, got k={k}")
    m2 = matroid.m * k
    _require_size(m2, MAX_ORACLE_ELEMENTS, "thicken_matroid")
    bit_support = [1 << (i // k) for i in range(m2)]
    base = matroid.ranks
    support = [0] * (1 << m2)
    ranks = [0] * (1 << m2)
    for subset in range(1, 1 << m2):
        low = subset & -subset
        sup = support[subset ^ low] | bit_support[low.bit_length() - 1]
        support[subset] = sup
        ranks[subset] = base[sup]
    return RankOracleMatroid(m2, ranks)


def lifted_basis(basis: int, k: int) -> int:
    """Image of a basis under thickening: the first copy of each element."""
    mask = 0
    e = 0
    while basis >> e:
        if basis >> e & 1:
            mask |= 1 << (k * e)
        e += 1
    return mask


def dual_matroid(matroid: RankOracleMatroid) -> RankOracleMatroid:
    """Dual via the corank formula r*(S) = |S| + r(E - S) - r(E)."""
    m = matroid.m
    _require_size(m, MAX_ORACLE_ELEMENTS, "dual_matroid")
    full = matroid.full_rank
    everything = (1 << m) - 1
    ranks = matroid.ranks
    return RankOracleMatroid(
        m, [s.bit_count() + ranks[everything ^ s] - full for s in range(1 << m)]
    )


def direct_sum(a: RankOracleMatroid, b: RankOracleMatroid) -> RankOracleMatroid:
    """Disjoint union; a's elements keep their bits, b's shift up by a.m."""
    m = a.m + b.m
    _require_size(m, MAX_ORACLE_ELEMENTS, "direct_sum")
    mask_a = (1 << a.m) - 1
    ranks = [a.ranks[s & mask_a] + b.ranks[s >> a.m] for s in range(1 << m)]
    return RankOracleMatroid(m, ranks)


def bases(matroid: RankOracleMatroid) -> list[int]:
    """All bases as bitmasks in ascending order."""
    _require_size(matroid.m, MAX_ORACLE_ELEMENTS, "bases")
    full = matroid.full_rank
    ranks = matroid.ranks
    return [
        s for s in range(1 << matroid.m) if s.bit_count() == full and ranks[s] == full
    ]


def loops_coloops(matroid: RankOracleMatroid) -> tuple[frozenset[int], frozenset[int]]:
    """Elements of rank zero, and elements in every basis."""
    m = matroid.m
    _require_size(m, MAX_ORACLE_ELEMENTS, "loops_coloops")
    full = matroid.full_rank
    everything = (1 << m) - 1
    ranks = matroid.ranks
    loops = frozenset(e for e in range(m) if ranks[1 << e] == 0)
    coloops = frozenset(e for e in range(m) if ranks[everything ^ (1 << e)] == full - 1)
    return loops, coloops


@dataclass(frozen=True)
class ExchangeGraph:
    """Local basis exchange graph: basis elements left, the rest right.

    adj[i] is a bitmask over right positions; bit j is set when swapping
    left vertex i for right vertex j yields another basis.
    """

    left: tuple
    right: tuple
    adj: tuple[int, ...]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj)

    def is_complete_bipartite(self) -> bool:
        full_row = (1 << len(self.right)) - 1
        return all(row == full_row for row in self.adj)

    def canonical_form(self) -> tuple:
        """Isomorphism invariant: minimal sorted column masks over left relabelings.

        Sides are never swapped (basis vs non-basis is structural), so two
        graphs are isomorphic iff their canonical forms agree. Exponential
        in the left side; meant for the tiny oracle instances only.
        """
        n_left = len(self.left)
        columns = [
            sum((self.adj[i] >> j & 1) << i for i in range(n_left))
            for j in range(len(self.right))
        ]
        best = None
        for perm in permutations(range(n_left)):
            relabeled = tuple(
                sorted(sum((col >> perm[p] & 1) << p for p in range(n_left)) for col in columns)
            )
            if best is None or relabeled < best:
                best = relabeled
        return (n_left, len(self.right), best)

    def isomorphic_to(self, other: "ExchangeGraph") -> bool:
        return (
            len(self.left) == len(other.left)
            and len(self.right) == len(other.right)
            and self.canonical_form() == other.canonical_form()
        )


def exchange_graph(matroid: RankOracleMatroid, basis: int) -> ExchangeGraph:
    """Bipartite swap graph of one basis: edge (b, c) iff B - b + c is a basis."""
    m = matroid.m
    _require_size(m, MAX_ORACLE_ELEMENTS, "exchange_graph")
    full = matroid.full_rank
    ranks = matroid.ranks
    if basis < 0 or basis >= 1 << m or basis.bit_count() != full or ranks[basis] != full:
        raise NotABasisError(f"subset {basis:#x} is not a basis of {matroid!r}")
    left = [e for e in range(m) if basis >> e & 1]
    right = [e for e in range(m) if not basis >> e & 1]
    adj = []
    for b in left:
        removed = basis ^ (1 << b)
        row = 0
        for pos, c in enumerate(right):
            if ranks[removed | 1 << c] == full:
                row |= 1 << pos
        adj.append(row)
    return ExchangeGraph(tuple(left), tuple(right), tuple(adj))


def thicken_exchange_graph(graph: ExchangeGraph) -> ExchangeGraph:
    """2-thickening acting on an exchange graph.

    Every right vertex gains a twin with the same neighborhood and every
    left vertex gains a private pendant neighbor; this matches the
    exchange graph of the 2-thickened matroid at the lifted basis.
    """
    n_right = len(graph.right)
    right = (
        tuple(graph.right)
        + tuple(("twin", c) for c in graph.right)
        + tuple(("pendant", b) for b in graph.left)
    )
    adj = tuple(
        row | row << n_right | 1 << (2 * n_right + i) for i, row in enumerate(graph.adj)
    )
    return ExchangeGraph(graph.left, right, adj)
