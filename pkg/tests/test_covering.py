import itertools
import random
from dataclasses import replace
from fractions import Fraction

import pytest

from mdscosets.codes import coset_census
from mdscosets.covering import (DeepHoleMismatchError, count_deep_hole_cosets,
                                covering_radius_capped, mcf_classify,
                                mu_density_closed_form, saturating_set_report)
from mdscosets.gf import field_of_order
from mdscosets.mds import build_code, truncated_gdrs


def test_apmcf_certificate_for_shortened_conic_code():
    f5 = field_of_order(5)
    code, _ = truncated_gdrs(f5, 4, 5)
    rep = mcf_classify(code)
    assert (rep.R, rep.mu) == (3, 10)
    assert rep.is_mcf and rep.is_apmcf and not rep.is_pmcf
    assert rep.mu_density == 1
    assert rep.deep_hole_coset_count == 4
    assert rep.farthest_profile == ((10, 4),)


def test_pmcf_certificate_for_triply_extended_code():
    f4 = field_of_order(4)
    code, _ = build_code(f4, "gtrs")
    rep = mcf_classify(code)
    assert (rep.R, rep.mu) == (2, 3)
    assert rep.is_apmcf and rep.is_pmcf  # d = 4 = 2R


def test_mu_density_of_odd_conic_codes():
    for q in (5, 7):
        f = field_of_order(q)
        code, _ = build_code(f, "gdrs", 4)
        rep = mcf_classify(code)
        assert rep.R == 2
        assert rep.mu == (q - 1) // 2
        assert not rep.is_apmcf
        assert rep.mu_density == 1 + Fraction(1, q)
        assert mu_density_closed_form(rep.n, rep.k, q, rep.mu) == rep.mu_density


def test_mu_density_over_budget_codes_use_low_weight_path():
    # 9^10 and 11^12 ambient spaces are both far over the default budget
    for q in (9, 11):
        f = field_of_order(q)
        code, _ = build_code(f, "gdrs", 4)
        rep = mcf_classify(code)
        assert rep.mu_density == 1 + Fraction(1, q)


def test_mcf_profile_agrees_with_full_census():
    f5 = field_of_order(5)
    code, _ = build_code(f5, "gdrs", 4)
    rep = mcf_classify(code)
    census = coset_census(code)
    want = {}
    for cls in census.classes_of_weight(rep.R):
        b = cls.distribution.counts[rep.R]
        want[b] = want.get(b, 0) + cls.count
    assert dict(rep.farthest_profile) == want


def test_distance_and_multiplicity_spot_check():
    # every vector of a weight-W coset sits at distance W from the code and
    # sees exactly B_W codewords at that distance
    f5 = field_of_order(5)
    code, _ = truncated_gdrs(f5, 4, 5)
    census = coset_census(code)
    G = code.generator_matrix
    codewords = []
    for msg in itertools.product(range(5), repeat=code.k):
        w = [0] * code.n
        for m, row in zip(msg, G.rows):
            if m:
                w = [f5.add(a, f5.mul(m, b)) for a, b in zip(w, row)]
        codewords.append(tuple(w))
    rng = random.Random(11)
    for _ in range(200):
        x = tuple(rng.randrange(5) for _ in range(code.n))
        dists = [sum(1 for a, b in zip(x, c) if a != b) for c in codewords]
        dmin = min(dists)
        dist = census.distribution_of_syndrome(code.syndrome(x))
        if dmin == 0:
            assert dist.counts[0] == 1
        else:
            assert dist.min_positive_weight() == dmin
            assert dists.count(dmin) == dist.counts[dmin]


def test_deep_hole_counts_where_the_formula_holds():
    f5 = field_of_order(5)
    code, cons = truncated_gdrs(f5, 4, 5)
    rep = count_deep_hole_cosets(code, cons)
    assert rep.count == rep.bound == 4
    assert rep.equality_required and rep.parent_R == 2
    f7 = field_of_order(7)
    code7, cons7 = truncated_gdrs(f7, 4, 6)
    assert count_deep_hole_cosets(code7, cons7).count == 12


def test_deep_hole_inequality_branch_for_even_parent():
    # the even-q conic parent has R = 3 != d-2, so only the bound applies
    f4 = field_of_order(4)
    code, cons = truncated_gdrs(f4, 4, 4)
    rep = count_deep_hole_cosets(code, cons)
    assert not rep.equality_required
    assert rep.parent_R == 3
    assert rep.count == 6 >= rep.bound == 3


def test_deep_hole_requires_a_removal_construction():
    f5 = field_of_order(5)
    code, cons = build_code(f5, "gdrs", 4)
    with pytest.raises(ValueError, match="column-removal"):
        count_deep_hole_cosets(code, cons)


def test_deep_hole_formula_counterexample_is_a_hard_failure():
    # exhaustive enumeration refutes the claimed equality for [5,1,5]_5:
    # the census finds 24 weight-4 cosets, the formula predicts (q-1)*Delta = 4
    f5 = field_of_order(5)
    code, cons = truncated_gdrs(f5, 5, 5)
    with pytest.raises(DeepHoleMismatchError, match="census 24, formula 4"):
        count_deep_hole_cosets(code, cons)


def test_covering_radius_capped_matches_census():
    f5 = field_of_order(5)
    for (d, n, want) in [(4, 6, 2), (4, 5, 3), (5, 6, 3)]:
        code, _ = truncated_gdrs(f5, d, n)
        assert covering_radius_capped(code, d) == want
    # forced onto the low-weight path by a small budget
    code, _ = truncated_gdrs(f5, 4, 6)
    assert covering_radius_capped(code, 4, budget=10_000) == 2


def test_even_q_conic_code_has_radius_3():
    # the nucleus keeps the even-q length-(q+1) code at R = d-1 = 3
    f8 = field_of_order(8)
    code, _ = build_code(f8, "gdrs", 4)
    assert covering_radius_capped(code, 4, budget=10**6) == 3
    f4 = field_of_order(4)
    code4, _ = build_code(f4, "gdrs", 4)
    assert code4.covering_radius() == 3


def test_saturating_set_statements():
    f5 = field_of_order(5)
    code, _ = truncated_gdrs(f5, 4, 5)
    rep = mcf_classify(code)
    sat = saturating_set_report(code, rep)
    assert sat["certified"]
    assert sat["kind"] == "OS"
    assert sat["rho"] == 2 and sat["mu"] == 10
    assert sat["space"] == "PG(2,5)"

    f4 = field_of_order(4)
    gtrs, _ = build_code(f4, "gtrs")
    sat4 = saturating_set_report(gtrs, mcf_classify(gtrs))
    assert sat4["rho"] == 1 and sat4["mu"] == 3 and sat4["kind"] == "OS"

    conic5, _ = build_code(f5, "gdrs", 4)
    rep5 = mcf_classify(conic5)
    sat5 = saturating_set_report(conic5, rep5)
    assert sat5["kind"] == "saturating"  # MCF but not almost perfect

    fake = replace(rep, mu=0)
    assert not saturating_set_report(code, fake)["certified"]
