"""Linear codes over GF(q) given by parity-check matrices, plus the
brute-force oracles everything else is checked against.

The full coset census walks the whole ambient space F_q^n exactly once
in odometer order (vectorized in blocks), bucketing vector weights by
syndrome, then groups syndromes with identical weight distributions.
The low-weight census enumerates every vector of weight <= wmax instead;
it is exact as far as it looks and is the tool of choice when q^n is
over budget but only small coset weights matter.

Enumeration budgets are explicit; anything over budget is refused with
the budget named, never silently sampled.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .gf import GF

DEFAULT_BUDGET = 200_000_000
DEFAULT_BLOCK = 6_000_000
_SUBSET_BUDGET = 2_000_000


class BudgetExceededError(RuntimeError):
    """An exhaustive enumeration would exceed its configured budget."""


@dataclass(frozen=True)
class WeightDistribution:
    """Exact vector counts per Hamming weight, B_0..B_n."""

    counts: tuple[int, ...]

    def __post_init__(self):
        if not self.counts:
            raise ValueError("a weight distribution needs at least B_0")
        for c in self.counts:
            if not isinstance(c, int):
                raise ValueError("weight distribution counts must be ints")

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    def total(self) -> int:
        return sum(self.counts)

    def num_nonzero_weights(self) -> int:
        """s(C): how many positive weights occur."""
        return sum(1 for c in self.counts[1:] if c)

    def min_positive_weight(self) -> int | None:
        for w in range(1, self.n + 1):
            if self.counts[w]:
                return w
        return None

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.counts)


class Matrix:
    """Dense matrix over GF(q); entries are canonical element labels."""

    def __init__(self, field: GF, rows: list[list[int]], ncols: int | None = None):
        self.field = field
        self.rows = [list(r) for r in rows]
        if self.rows:
            ncols_seen = len(self.rows[0])
            if any(len(r) != ncols_seen for r in self.rows):
                raise ValueError("ragged rows")
            if ncols is not None and ncols != ncols_seen:
                raise ValueError("ncols disagrees with row length")
            self.ncols = ncols_seen
        else:
            if ncols is None:
                raise ValueError("empty matrix needs an explicit column count")
            self.ncols = ncols
        for r in self.rows:
            for a in r:
                field.check(a)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def column(self, j: int) -> list[int]:
        return [r[j] for r in self.rows]

    def columns(self) -> list[list[int]]:
        return [self.column(j) for j in range(self.ncols)]

    def drop_columns(self, idxs) -> "Matrix":
        drop = set(idxs)
        keep = [j for j in range(self.ncols) if j not in drop]
        return Matrix(self.field, [[r[j] for j in keep] for r in self.rows], ncols=len(keep))

    def rank(self) -> int:
        reduced, pivots = _rref(self.field, self.rows)
        return len(pivots)

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols} over GF({self.field.q}))"


def _rref(field: GF, rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over GF(q); returns (nonzero rows, pivot columns)."""
    work = [list(r) for r in rows]
    nrows = len(work)
    ncols = len(work[0]) if work else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if work[i][c] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        scale = field.inv(work[r][c])
        work[r] = [field.mul(scale, x) for x in work[r]]
        for i in range(nrows):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return work[:r], pivots


class LinearCode:
    """A length-n linear code over GF(q) defined by a full-rank parity-check matrix."""

    def __init__(self, H: Matrix):
        rank = H.rank()
        if rank != H.nrows:
            raise ValueError(
                f"parity-check matrix is rank-deficient: rank {rank} < {H.nrows} rows")
        self.H = H
        self.field = H.field
        self.n = H.ncols
        self.k = H.ncols - H.nrows
        self._G: Matrix | None = None
        self._d: int | None = None
        self._R: int | None = None

    @property
    def r(self) -> int:
        """Redundancy n - k (number of parity checks)."""
        return self.n - self.k

    def syndrome(self, x) -> tuple[int, ...]:
        if len(x) != self.n:
            raise ValueError(f"vector length {len(x)} != code length {self.n}")
        f = self.field
        for a in x:
            f.check(a)
        return tuple(
            reduce(f.add, (f.mul(row[j], x[j]) for j in range(self.n)), 0)
            for row in self.H.rows)

    @property
    def generator_matrix(self) -> Matrix:
        """A generator matrix derived from H by elimination; H G^T = 0 is asserted."""
        if self._G is None:
            reduced, pivots = _rref(self.field, self.H.rows)
            pivot_set = set(pivots)
            free = [c for c in range(self.n) if c not in pivot_set]
            rows = []
            for c in free:
                g = [0] * self.n
                g[c] = 1
                for t, pc in enumerate(pivots):
                    g[pc] = self.field.neg(reduced[t][c])
                rows.append(g)
            G = Matrix(self.field, rows, ncols=self.n)
            zero = (0,) * self.r
            for g in rows:
                assert self.syndrome(g) == zero
            self._G = G
        return self._G

    @property
    def is_mds(self) -> bool:
        return self.min_distance() == self.n - self.k + 1

    def min_distance(self, budget: int = DEFAULT_BUDGET) -> int:
        if self._d is None:
            if self.k == 0:
                raise ValueError("minimum distance is undefined for the zero code")
            if self.field.q ** self.k <= budget:
                dist = brute_weight_distribution(self, budget)
                self._d = dist.min_positive_weight()
            else:
                self._d = self._min_distance_by_columns()
        return self._d

    def _min_distance_by_columns(self) -> int:
        # d equals the smallest number of linearly dependent parity-check columns
        checked = 0
        for delta in range(1, self.r + 1):
            for combo in itertools.combinations(range(self.n), delta):
                checked += 1
                if checked > _SUBSET_BUDGET:
                    raise BudgetExceededError(
                        f"column-subset distance search over {_SUBSET_BUDGET} subsets")
                sub = Matrix(self.field, [[self.H.rows[t][c] for c in combo]
                                          for t in range(self.r)], ncols=delta)
                if sub.rank() < delta:
                    return delta
        return self.r + 1

    def covering_radius(self, budget: int = DEFAULT_BUDGET) -> int:
        """Max coset weight; ambient census when affordable, else a low-weight
        census grown until every syndrome is reached."""
        if self._R is None:
            if self.field.q ** self.n <= budget:
                census = coset_census(self, budget)
                self._R = max(cls.weight for cls in census.classes)
            else:
                for wmax in range(1, self.r + 1):
                    lw = low_weight_census(self, wmax, budget)
                    if lw.fully_covered:
                        self._R = int(lw.weights.max())
                        break
                else:
                    raise AssertionError("syndromes uncovered at weight n-k")
        return self._R

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}] over GF({self.field.q}))"


def code_from_parity(H: Matrix) -> LinearCode:
    return LinearCode(H)


# --- packed-syndrome helpers -------------------------------------------------
#
# A syndrome vector s in F_q^r is packed as sum(s[t] * q^t).  Packed values
# add componentwise in the field: XOR for characteristic 2, otherwise via the
# (q, q) addition table applied digit by digit.

def syndrome_index(q: int, svec) -> int:
    return sum(int(s) * q**t for t, s in enumerate(svec))


def _contrib_digits(code: LinearCode) -> list[np.ndarray]:
    """contrib[j][c] = syndrome digit vector of c * (column j), shape (q, r)."""
    f, H, r = code.field, code.H, code.r
    out = []
    for j in range(code.n):
        col = H.column(j)
        out.append(np.array([[f.mul(c, col[t]) for t in range(r)]
                             for c in range(f.q)], dtype=np.uint16))
    return out


def _pack(digits: np.ndarray, q: int) -> np.ndarray:
    """Pack a (..., r) digit array into base-q integers."""
    r = digits.shape[-1]
    acc = np.zeros(digits.shape[:-1], dtype=np.int64)
    for t in range(r):
        acc += digits[..., t].astype(np.int64) * q**t
    return acc


def _group_add_outer(field: GF, r: int, packed: np.ndarray,
                     other: np.ndarray) -> np.ndarray:
    """All pairwise field sums of two packed-syndrome arrays, flattened."""
    if field.p == 2:
        return (packed[:, None] ^ other[None, :]).reshape(-1)
    q = field.q
    add_t = field.add_table()
    out = np.zeros((packed.size, other.size), dtype=np.int64)
    for t in range(r):
        da = (packed // q**t) % q
        db = (other // q**t) % q
        out += add_t[da[:, None], db[None, :]].astype(np.int64) * q**t
    return out.reshape(-1)


@dataclass(frozen=True)
class CosetClass:
    """All cosets sharing one weight distribution."""

    weight: int
    distribution: WeightDistribution
    count: int


class CosetCensus:
    """Partition of all q^(n-k) syndromes by full coset weight distribution."""

    def __init__(self, code: LinearCode, table: np.ndarray):
        self.code = code
        q, n, k = code.field.q, code.n, code.k
        self.total_cosets = q ** code.r
        self.table = table  # (q^r, n+1) exact counts
        weights = (table > 0).argmax(axis=1)
        keyed = np.concatenate([weights[:, None], table], axis=1)
        uniq, counts = np.unique(keyed, axis=0, return_counts=True)
        classes = []
        for row, cnt in zip(uniq, counts):
            dist = WeightDistribution(tuple(int(x) for x in row[1:]))
            classes.append(CosetClass(int(row[0]), dist, int(cnt)))
        self.classes = classes  # np.unique sorts by (weight, distribution)
        assert sum(c.count for c in self.classes) == self.total_cosets
        assert sum(c.count * c.distribution.total() for c in self.classes) == q**n
        zero_classes = [c for c in self.classes if c.weight == 0]
        assert len(zero_classes) == 1 and zero_classes[0].count == 1

    def classes_of_weight(self, W: int) -> list[CosetClass]:
        return [c for c in self.classes if c.weight == W]

    def count_of_weight(self, W: int) -> int:
        return sum(c.count for c in self.classes if c.weight == W)

    def max_weight(self) -> int:
        return max(c.weight for c in self.classes)

    def code_distribution(self) -> WeightDistribution:
        return next(c for c in self.classes if c.weight == 0).distribution

    def distribution_of_syndrome(self, svec) -> WeightDistribution:
        idx = syndrome_index(self.code.field.q, svec)
        return WeightDistribution(tuple(int(x) for x in self.table[idx]))

    def scalar_invariance_holds(self) -> bool:
        """Buckets of s and alpha*s agree for every syndrome and alpha != 0."""
        f = self.code.field
        q, r = f.q, self.code.r
        idxs = np.arange(q**r)
        digits = [((idxs // q**t) % q) for t in range(r)]
        for alpha in range(2, q):
            mul_row = np.array([f.mul(alpha, x) for x in range(q)], dtype=np.int64)
            mapped = sum(mul_row[digits[t]] * q**t for t in range(r))
            if not np.array_equal(self.table, self.table[mapped]):
                return False
        return True


def coset_census(code: LinearCode, budget: int = DEFAULT_BUDGET,
                 block_cap: int = DEFAULT_BLOCK) -> CosetCensus:
    """Exact weight distribution of every coset, by one pass over F_q^n.

    Vectors are visited in odometer order (rightmost coordinate fastest);
    the trailing coordinates are expanded into arrays of at most block_cap
    entries and the leading ones are walked one prefix at a time, with the
    running prefix weight and syndrome folded in.
    """
    f = code.field
    q, n, r = f.q, code.n, code.r
    ambient = q ** n
    if ambient > budget:
        raise BudgetExceededError(
            f"coset census needs {ambient} vector visits, over the budget of {budget}")

    contribs = _contrib_digits(code)
    nsuffix = 0
    size = 1
    while nsuffix < n and size * q <= max(block_cap, q):
        size *= q
        nsuffix += 1
    suffix_cols = list(range(n - nsuffix, n))
    wbit = (np.arange(q) != 0).astype(np.uint8)

    char2 = f.p == 2
    if char2:
        P = np.zeros(1, dtype=np.int64)
        Wt = np.zeros(1, dtype=np.uint8)
        for col in suffix_cols:
            packs = _pack(contribs[col].astype(np.int64), q)
            P = (P[:, None] ^ packs[None, :]).reshape(-1)
            Wt = (Wt[:, None] + wbit[None, :]).reshape(-1)
    else:
        add_t = f.add_table()
        D = np.zeros((1, r), dtype=np.uint8)
        Wt = np.zeros(1, dtype=np.uint8)
        for col in suffix_cols:
            cd = contribs[col].astype(np.uint8)
            D = add_t[D[:, None, :], cd[None, :, :]].reshape(-1, r)
            Wt = (Wt[:, None] + wbit[None, :]).reshape(-1)

    hist = np.zeros(q**r * (n + 1), dtype=np.int64)
    qpow = [q**t for t in range(r)]
    for prefix in itertools.product(range(q), repeat=n - nsuffix):
        pw = sum(1 for c in prefix if c)
        ps = [0] * r
        for i, c in enumerate(prefix):
            if c:
                for t in range(r):
                    ps[t] = f.add(ps[t], int(contribs[i][c, t]))
        if char2:
            ps_packed = sum(ps[t] * qpow[t] for t in range(r))
            bucket = (P ^ ps_packed) * (n + 1) + (Wt.astype(np.int64) + pw)
        else:
            acc = np.zeros(len(D), dtype=np.int64)
            for t in range(r):
                acc += add_t[ps[t], D[:, t]].astype(np.int64) * qpow[t]
            bucket = acc * (n + 1) + (Wt.astype(np.int64) + pw)
        hist += np.bincount(bucket, minlength=hist.size)

    table = hist.reshape(q**r, n + 1)
    assert int(table.sum()) == ambient
    assert np.all(table.sum(axis=1) == q**code.k)
    return CosetCensus(code, table)


class LowWeightCensus:
    """Per-syndrome counts of vectors of weight <= wmax.

    Exact wherever it looks; a syndrome reached by no vector of weight
    <= wmax has weight -1 here (meaning: bigger than wmax).
    """

    def __init__(self, code: LinearCode, wmax: int, table: np.ndarray):
        self.code = code
        self.wmax = wmax
        self.table = table  # (q^r, wmax+1)
        reached = table > 0
        has = reached.any(axis=1)
        self.weights = np.where(has, reached.argmax(axis=1), -1)
        self.fully_covered = bool(has.all())
        self.uncovered_count = int((~has).sum())

    def syndromes_of_weight(self, W: int) -> np.ndarray:
        return np.flatnonzero(self.weights == W)

    def profile_at(self, W: int) -> dict[int, int]:
        """How many weight-W cosets have each value of B_W."""
        idxs = self.syndromes_of_weight(W)
        vals, counts = np.unique(self.table[idxs, W], return_counts=True)
        return {int(v): int(c) for v, c in zip(vals, counts)}

    def prefix_of_index(self, idx: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self.table[idx])


def low_weight_census(code: LinearCode, wmax: int,
                      budget: int = DEFAULT_BUDGET) -> LowWeightCensus:
    """Syndrome census of every vector of weight <= wmax (exact enumeration)."""
    f = code.field
    q, n, r = f.q, code.n, code.r
    if not 0 <= wmax <= n:
        raise ValueError(f"wmax={wmax} outside [0, {n}]")
    from .combinat import binom
    total = sum(binom(n, w) * (q - 1)**w for w in range(wmax + 1))
    if total > budget:
        raise BudgetExceededError(
            f"low-weight census needs {total} vector visits, over the budget of {budget}")

    contribs = _contrib_digits(code)
    packed_nz = [_pack(contribs[j][1:].astype(np.int64), q) for j in range(n)]
    hist = np.zeros((q**r, wmax + 1), dtype=np.int64)
    hist[0, 0] = 1
    for w in range(1, wmax + 1):
        parts = []
        for combo in itertools.combinations(range(n), w):
            arr = np.zeros(1, dtype=np.int64)
            for col in combo:
                arr = _group_add_outer(f, r, arr, packed_nz[col])
            parts.append(arr)
        allv = np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)
        hist[:, w] += np.bincount(allv, minlength=q**r)
    return LowWeightCensus(code, wmax, hist)


def brute_weight_distribution(code: LinearCode,
                              budget: int = DEFAULT_BUDGET) -> WeightDistribution:
    """Exact codeword weight counts by enumerating all q^k codewords."""
    f = code.field
    q, n, k = f.q, code.n, code.k
    total = q ** k
    if total > budget:
        raise BudgetExceededError(
            f"codeword enumeration needs {total} visits, over the budget of {budget}")
    counts = [0] * (n + 1)
    if k == 0:
        counts[0] = 1
        return WeightDistribution(tuple(counts))
    G = code.generator_matrix
    char2 = f.p == 2
    add_t = None if char2 else f.add_table()
    scaled = [np.array([[f.mul(c, G.rows[i][j]) for j in range(n)] for c in range(q)],
                       dtype=np.uint8) for i in range(k)]

    # expand trailing message coordinates into one array block, walk the rest
    ksuf = 0
    size = 1
    while ksuf < k and size * q * n <= 8 * DEFAULT_BLOCK:
        size *= q
        ksuf += 1
    M = np.zeros((1, n), dtype=np.uint8)
    for i in range(k - ksuf, k):
        tab = scaled[i]
        if char2:
            M = (M[:, None, :] ^ tab[None, :, :]).reshape(-1, n)
        else:
            M = add_t[M[:, None, :], tab[None, :, :]].reshape(-1, n)

    hist = np.zeros(n + 1, dtype=np.int64)
    for prefix in itertools.product(range(q), repeat=k - ksuf):
        base = np.zeros(n, dtype=np.uint8)
        for i, c in enumerate(prefix):
            if c:
                if char2:
                    base ^= scaled[i][c]
                else:
                    base = add_t[base, scaled[i][c]]
        rows = (M ^ base[None, :]) if char2 else add_t[M, base[None, :]]
        hist += np.bincount((rows != 0).sum(axis=1), minlength=n + 1)
    dist = WeightDistribution(tuple(int(c) for c in hist))
    assert dist.total() == total
    return dist
