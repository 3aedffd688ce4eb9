"""Generalized Reed-Solomon parity-check constructions and the closed-form
MDS weight distribution.

The doubly-extended family puts, over GF(q), the q-1 Vandermonde columns
v_i * (1, a_i, a_i^2, ..., a_i^(d-2)) next to the two extension columns
v_q * (1, 0, ..., 0) and v_{q+1} * (0, ..., 0, 1), giving a
(d-1) x (q+1) matrix.  For even q the triply-extended d = 4 family adds
the column (0, 1, 0) (the nucleus of the conic the first q+1 columns
trace out in PG(2, q)).

Column removals yield the shorter MDS codes whose coset structure the
rest of the library classifies; the removal always re-verifies rank and
MDS-ness instead of trusting the construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .codes import DEFAULT_BUDGET, LinearCode, Matrix, WeightDistribution
from .combinat import binom
from .gf import GF, field_of_order


@dataclass(frozen=True)
class MdsConstruction:
    """Pinned recipe for one constructed code: family, field, multipliers,
    and which columns of the full family matrix were removed."""

    family: str  # "gdrs" or "gtrs"
    q: int
    d: int
    alphas: tuple[int, ...]
    vs: tuple[int, ...]
    removed: tuple[int, ...]

    @property
    def delta(self) -> int:
        return len(self.removed)

    @property
    def full_length(self) -> int:
        return self.q + 2 if self.family == "gtrs" else self.q + 1


def gdrs_parity(field: GF, d: int, alphas=None, vs=None) -> Matrix:
    """The (d-1) x (q+1) doubly-extended parity-check matrix over GF(q)."""
    q = field.q
    if d < 3:
        raise ValueError(f"design distance must be >= 3, got {d}")
    if d > q + 1:
        raise ValueError(f"design distance {d} too large for a length-{q + 1} code over GF({q})")
    if alphas is None:
        alphas = tuple(range(1, q))
    else:
        alphas = tuple(field.check(a) for a in alphas)
    if len(alphas) != q - 1 or len(set(alphas)) != q - 1 or 0 in alphas:
        raise ValueError("alphas must be the q-1 distinct nonzero elements in some order")
    if vs is None:
        vs = (1,) * (q + 1)
    else:
        vs = tuple(field.check(v) for v in vs)
    if len(vs) != q + 1 or 0 in vs:
        raise ValueError(f"need {q + 1} nonzero column multipliers")
    rows = []
    for t in range(d - 1):
        row = [field.mul(vs[i], field.power(alphas[i], t)) for i in range(q - 1)]
        row.append(vs[q - 1] if t == 0 else 0)
        row.append(vs[q] if t == d - 2 else 0)
        rows.append(row)
    M = Matrix(field, rows)
    if M.rank() != d - 1:
        raise ValueError("constructed parity-check matrix is rank-deficient")
    return M


def gtrs_parity(field: GF, vs=None) -> Matrix:
    """The 3 x (q+2) triply-extended parity-check matrix; q must be even."""
    q = field.q
    if field.p != 2:
        raise ValueError(f"triple extension requires even q, got q={q}")
    if vs is None:
        vs = (1,) * (q + 2)
    else:
        vs = tuple(field.check(v) for v in vs)
    if len(vs) != q + 2 or 0 in vs:
        raise ValueError(f"need {q + 2} nonzero column multipliers")
    base = gdrs_parity(field, 4, vs=vs[: q + 1])
    rows = [row[:] for row in base.rows]
    extra = [0, vs[q + 1], 0]
    for t in range(3):
        rows[t].append(extra[t])
    M = Matrix(field, rows)
    if M.rank() != 3:
        raise ValueError("constructed parity-check matrix is rank-deficient")
    return M


def remove_columns(matrix: Matrix, idxs) -> Matrix:
    """Drop parity-check columns, guarding rank and the design distance."""
    idxs = sorted(set(int(i) for i in idxs))
    if not idxs:
        raise ValueError("no columns to remove")
    if idxs[0] < 0 or idxs[-1] >= matrix.ncols:
        raise ValueError(f"column index out of range 0..{matrix.ncols - 1}")
    design_d = matrix.nrows + 1
    if matrix.ncols - len(idxs) < design_d:
        raise ValueError(
            f"too many removals: {matrix.ncols - len(idxs)} columns cannot carry distance {design_d}")
    out = matrix.drop_columns(idxs)
    if out.rank() < out.nrows:
        raise ValueError("rank collapse after column removal")
    return out


@lru_cache(maxsize=None)
def mds_weight_distribution(n: int, d: int, q: int) -> WeightDistribution:
    """Closed-form codeword weight counts A_w of an [n, n-d+1, d]_q MDS code:

        A_w = C(n,w) * sum_{j=0}^{w-d} (-1)^j C(w,j) (q^(w-d+1-j) - 1),  w >= d.
    """
    if not 3 <= d <= n:
        raise ValueError(f"need 3 <= d <= n, got d={d}, n={n}")
    if n > q + 2:
        raise ValueError(f"no MDS parameters with n={n} > q+2={q + 2}")
    counts = [0] * (n + 1)
    counts[0] = 1
    for w in range(d, n + 1):
        acc = 0
        for j in range(w - d + 1):
            term = binom(w, j) * (q ** (w - d + 1 - j) - 1)
            acc += -term if j % 2 else term
        counts[w] = binom(n, w) * acc
    dist = WeightDistribution(tuple(counts))
    assert dist.total() == q ** (n - d + 1)
    return dist


def build_code(field: GF, family: str, d: int | None = None,
               removed=(), vs=None,
               budget: int = DEFAULT_BUDGET) -> tuple[LinearCode, MdsConstruction]:
    """Build a family code, apply removals, and certify MDS-ness by oracle.

    `removed` indexes columns of the full family matrix (0-based).  The
    "grs" family is the doubly-extended matrix with its last column
    dropped, matching the singly-extended construction.
    """
    q = field.q
    if family == "gtrs":
        if d not in (None, 4):
            raise ValueError("the triply-extended family has d = 4")
        d = 4
        H_full = gtrs_parity(field, vs=vs)
        fam = "gtrs"
        drop = tuple(sorted(set(int(i) for i in removed)))
    elif family in ("gdrs", "grs"):
        if d is None:
            raise ValueError("design distance required")
        H_full = gdrs_parity(field, d, vs=vs)
        fam = "gdrs"
        drop = set(int(i) for i in removed)
        if family == "grs":
            drop.add(q)  # the trailing (0,...,0,1) column
        drop = tuple(sorted(drop))
    else:
        raise ValueError(f"unknown family {family!r} (expected gdrs, grs, or gtrs)")
    H = remove_columns(H_full, drop) if drop else H_full
    code = LinearCode(H)
    alphas = tuple(range(1, q))
    vs_rec = tuple(vs) if vs is not None else (1,) * H_full.ncols
    construction = MdsConstruction(fam, q, d, alphas, vs_rec, drop)
    dist = code.min_distance(budget)
    if dist != code.n - code.k + 1:
        raise ValueError(
            f"construction is not MDS: distance {dist} != {code.n - code.k + 1}")
    return code, construction


def truncated_gdrs(field: GF, d: int, n: int,
                   budget: int = DEFAULT_BUDGET) -> tuple[LinearCode, MdsConstruction]:
    """[n, n-d+1, d]_q code from the doubly-extended matrix minus its last
    q+1-n columns (the pinned default removal choice)."""
    q = field.q
    if not d <= n <= q + 1:
        raise ValueError(f"need d <= n <= q+1, got n={n}")
    removed = tuple(range(n, q + 1))
    return build_code(field, "gdrs", d, removed=removed, budget=budget)


def parent_code(construction: MdsConstruction,
                field: GF | None = None) -> tuple[LinearCode, MdsConstruction]:
    """The full-length family code a removal construction came from."""
    if field is None:
        field = field_of_order(construction.q)
    return build_code(field, construction.family, construction.d,
                      removed=(), vs=None if all(v == 1 for v in construction.vs)
                      else construction.vs)
