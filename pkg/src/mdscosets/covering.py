"""Covering-theoretic classification: multiple coverings of the
farthest-off points (deep holes), their density, and the translation to
multiple saturating sets.

Every vector of a weight-W coset lies at distance exactly W from the
code and sees exactly B_W codewords at that distance, so the farthest-off
structure of a code is read off the per-syndrome counts at weight R:
mu is the minimum B_R over weight-R cosets, the covering is almost
perfect when every weight-R coset shares that value, perfect when
additionally d >= 2R, and the mu-density is the exact rational

    gamma_mu = sum(B_R over weight-R cosets) / (mu * #weight-R cosets).

When the ambient space is over budget the classification falls back to
the low-weight census grown until every syndrome is reached, which is
exact because the covering radius of an MDS code never exceeds d - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .codes import (DEFAULT_BUDGET, LinearCode, coset_census,
                    low_weight_census)
from .combinat import binom
from .mds import MdsConstruction, parent_code


class DeepHoleMismatchError(RuntimeError):
    """The exhaustive census contradicts the claimed deep-hole coset count."""


@dataclass(frozen=True)
class McfReport:
    """Certificate that a code multiply covers its farthest-off points."""

    n: int
    k: int
    q: int
    d: int
    R: int
    mu: int
    is_apmcf: bool
    is_pmcf: bool
    mu_density: Fraction
    deep_hole_coset_count: int
    farthest_profile: tuple[tuple[int, int], ...]  # (B_R value, coset count)

    @property
    def is_mcf(self) -> bool:
        return self.mu >= 1


def _farthest_profile(code: LinearCode, budget: int) -> tuple[int, dict[int, int]]:
    """(R, {B_R value: number of weight-R cosets}) via the affordable census."""
    q = code.field.q
    if q ** code.n <= budget:
        census = coset_census(code, budget)
        R = census.max_weight()
        profile: dict[int, int] = {}
        for cls in census.classes_of_weight(R):
            b = cls.distribution.counts[R]
            profile[b] = profile.get(b, 0) + cls.count
        return R, profile
    for wmax in range(1, code.r + 1):
        lw = low_weight_census(code, wmax, budget)
        if lw.fully_covered:
            R = int(lw.weights.max())
            return R, lw.profile_at(R)
    raise AssertionError("syndromes uncovered at weight n-k")


def mcf_classify(code: LinearCode, budget: int = DEFAULT_BUDGET) -> McfReport:
    R, profile = _farthest_profile(code, budget)
    d = code.min_distance(budget)
    mu = min(profile)
    total = sum(profile.values())
    weighted = sum(b * c for b, c in profile.items())
    apmcf = len(profile) == 1
    density = Fraction(weighted, mu * total)
    assert (density == 1) == apmcf
    return McfReport(
        n=code.n, k=code.k, q=code.field.q, d=d, R=R, mu=mu,
        is_apmcf=apmcf, is_pmcf=apmcf and d >= 2 * R,
        mu_density=density, deep_hole_coset_count=total,
        farthest_profile=tuple(sorted(profile.items())))


def mu_density_closed_form(n: int, k: int, q: int, mu: int) -> Fraction:
    """gamma_mu for covering radius 2 and d > 3:
    C(n,2)(q-1)^2 / (mu (q^(n-k) - 1 - n(q-1)))."""
    return Fraction(binom(n, 2) * (q - 1) ** 2,
                    mu * (q ** (n - k) - 1 - n * (q - 1)))


@dataclass(frozen=True)
class DeepHoleReport:
    """Count of weight-(d-1) cosets of a column-removal code, checked
    against (q-1)*Delta: equality when the parent reaches only d-2,
    the lower bound otherwise."""

    count: int
    bound: int
    delta: int
    parent_R: int
    equality_required: bool


def _weight_top_coset_count(code: LinearCode, d: int, budget: int) -> int:
    """Number of weight-(d-1) cosets, exactly.  Over budget, syndromes not
    reached by weight <= d-2 are precisely the weight-(d-1) cosets since
    an MDS code has R <= d-1."""
    q = code.field.q
    if q ** code.n <= budget:
        return coset_census(code, budget).count_of_weight(d - 1)
    return low_weight_census(code, d - 2, budget).uncovered_count


def covering_radius_capped(code: LinearCode, d: int, budget: int = DEFAULT_BUDGET) -> int:
    """Covering radius of an MDS code of distance d, using R <= d-1 so a
    weight-(d-2) census settles it even when q^n is out of budget."""
    q = code.field.q
    if q ** code.n <= budget:
        return code.covering_radius(budget)
    lw = low_weight_census(code, d - 2, budget)
    if lw.fully_covered:
        return int(lw.weights.max())
    return d - 1


def count_deep_hole_cosets(code: LinearCode, construction: MdsConstruction,
                           budget: int = DEFAULT_BUDGET,
                           parent_R: int | None = None) -> DeepHoleReport:
    if construction.delta < 1:
        raise ValueError("the deep-hole count applies to column-removal codes")
    d = construction.d
    delta = construction.delta
    q = construction.q
    if parent_R is None:
        parent, _ = parent_code(construction, code.field)
        parent_R = covering_radius_capped(parent, d, budget)
    count = _weight_top_coset_count(code, d, budget)
    bound = (q - 1) * delta
    equality = parent_R == d - 2
    if equality and count != bound:
        raise DeepHoleMismatchError(
            f"deep-hole census/formula mismatch: census {count}, formula {bound}")
    if count < bound:
        raise DeepHoleMismatchError(
            f"deep-hole census below the lower bound: census {count} < {bound}")
    return DeepHoleReport(count, bound, delta, parent_R, equality)


def saturating_set_report(code: LinearCode, report: McfReport) -> dict:
    """Translate an MCF certificate into the statement about the
    parity-check columns as a multiple saturating set in PG(n-k-1, q)."""
    if not report.is_mcf or report.R < 1:
        return {"certified": False,
                "reason": "input certificate does not cover the farthest-off points"}
    kind = "OS" if report.is_apmcf else "saturating"
    rho = report.R - 1
    space = f"PG({code.n - code.k - 1},{code.field.q})"
    return {
        "certified": True,
        "space": space,
        "set_size": code.n,
        "rho": rho,
        "mu": report.mu,
        "kind": kind,
        "statement": (f"the {code.n} parity-check columns form a "
                      f"({rho},{report.mu})-{kind} set in {space}"),
    }
