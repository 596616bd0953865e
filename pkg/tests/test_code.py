import json

import numpy as np
import pytest

from mincodes.code import (
    WeightDistribution,
    _class_values,
    ab_check,
    codeword,
    dimension,
    functional_count,
    is_minimal_direct,
    projective_functionals,
    summarize,
    weight,
    weight_distribution_bruteforce,
)
from mincodes.field import make_field
from mincodes.pointset import (
    BudgetExceeded,
    DefiningSet,
    ParameterError,
    family1,
    family2,
    family4,
    tilde_join,
)
from conftest import brute_weight_distribution


def full_space(gf, k):
    import itertools
    pts = [pt for pt in itertools.product(range(gf.q), repeat=k)
           if any(pt)]
    return DefiningSet(field=gf, dim=k, points=tuple(pts))


def test_projective_functionals():
    gf3 = make_field(3)
    fs = list(projective_functionals(gf3, 2))
    assert fs == [(0, 1), (1, 0), (1, 1), (1, 2)]
    assert len(fs) == functional_count(3, 2)
    fs4 = list(projective_functionals(gf3, 3))
    assert len(fs4) == functional_count(3, 3) == 13
    assert all(f[next(i for i, x in enumerate(f) if x)] == 1 for f in fs4)


def test_codeword_example():
    gf3 = make_field(3)
    d = family4(gf3, 2, 2, relaxed=True)
    assert d.points == ((0, 1), (0, 2), (1, 0), (2, 0))
    assert codeword(d, (1, 0)) == (0, 0, 1, 2)
    assert weight(codeword(d, (1, 0))) == 2
    with pytest.raises(ParameterError):
        codeword(d, (1, 0, 0))


def test_codeword_scalar_multiples_share_weight():
    gf5 = make_field(5)
    d = family4(gf5, 3, 3)
    c1 = codeword(d, (1, 2, 3))
    c2 = codeword(d, (2, 4, 1))  # 2 * (1, 2, 3)
    assert weight(c1) == weight(c2)
    assert c2 == tuple(gf5.mul(2, x) for x in c1)


def test_dimension():
    gf3 = make_field(3)
    assert dimension(family4(gf3, 3, 3)) == 3
    line = DefiningSet(field=gf3, dim=3, points=((1, 1, 1), (2, 2, 2)))
    assert dimension(line) == 1
    assert dimension(tilde_join(family4(gf3, 3, 3),
                                family4(gf3, 3, 3))) == 4


def test_weight_distribution_examples():
    gf3 = make_field(3)
    d = family4(gf3, 3, 3)
    dist = weight_distribution_bruteforce(d)
    assert dist.counts() == {0: 1, 10: 6, 12: 8, 14: 12}
    assert dist.total == 27
    d5 = family4(make_field(5), 3, 3)
    assert weight_distribution_bruteforce(d5).counts() == {
        0: 1, 36: 12, 48: 64, 52: 48}


def test_distribution_matches_scalar_oracle():
    # cross-check the vectorized projective enumerator against a plain
    # all-functionals loop
    for d in (family4(make_field(3), 3, 3),
              family2(make_field(2, 2), 3, 3),
              family1(make_field(2, 2), 4, 4, relaxed=True)):
        assert (weight_distribution_bruteforce(d).counts()
                == brute_weight_distribution(d))


def test_simplex_code_is_single_weight():
    for q, k in ((2, 3), (3, 2), (4, 2), (5, 2)):
        gf = make_field(*( (q, 1) if q in (2, 3, 5) else (2, 2) ))
        d = full_space(gf, k)
        dist = weight_distribution_bruteforce(d)
        assert dist.nonzero_entries() == (
            (gf.q ** (k - 1) * (gf.q - 1), gf.q ** k - 1),)


def test_counts_sum_to_field_size_power():
    for d in (family4(make_field(3), 4, 3), family2(make_field(5), 3, 3)):
        dist = weight_distribution_bruteforce(d)
        assert dist.total == d.field.q ** d.dim


def test_empty_defining_set():
    d = DefiningSet(field=make_field(3), dim=2, points=())
    assert weight_distribution_bruteforce(d).counts() == {0: 9}


def test_budget_exceeded_reports_cost():
    d = family4(make_field(3), 4, 3)
    classes = functional_count(3, 4)
    with pytest.raises(BudgetExceeded) as exc:
        weight_distribution_bruteforce(d, budget=100)
    assert exc.value.required == classes * len(d)


def test_class_values_chunk_invariance():
    d = family4(make_field(2, 2), 3, 3)
    whole = np.vstack([v for _, v in _class_values(d, chunk=10 ** 6)])
    small = np.vstack([v for _, v in _class_values(d, chunk=3)])
    assert np.array_equal(whole, small)


def test_ab_check():
    gf3 = make_field(3)
    dist = weight_distribution_bruteforce(family4(gf3, 3, 3))
    # 3 * 10 > 2 * 14
    assert ab_check(dist, 3)
    dist5 = weight_distribution_bruteforce(family4(make_field(5), 3, 3))
    # 5 * 36 < 4 * 52
    assert not ab_check(dist5, 5)


def test_minimality():
    assert is_minimal_direct(family4(make_field(3), 3, 3)).minimal
    # minimal even though the AB criterion fails
    assert is_minimal_direct(family4(make_field(5), 3, 3)).minimal
    res = is_minimal_direct(
        family4(make_field(3), 2, 2, relaxed=True))
    assert not res.minimal
    assert res.witness == ((1, 1), (0, 1))
    # witness really is a support containment of non-proportional words
    d = family4(make_field(3), 2, 2, relaxed=True)
    big, small = (codeword(d, f) for f in res.witness)
    assert all(b != 0 for b, s in zip(big, small) if s != 0)


def test_scale_invariant_weights_divisible():
    # scale-invariant defining set => every weight divisible by q - 1
    gf5 = make_field(5)
    dist = weight_distribution_bruteforce(family4(gf5, 3, 3))
    assert all(w % 4 == 0 for w, _ in dist.entries)
    dist7 = weight_distribution_bruteforce(family2(make_field(7), 3, 3))
    assert all(w % 6 == 0 for w, _ in dist7.entries)


def test_summarize():
    s = summarize(family4(make_field(3), 3, 3))
    assert (s.n, s.dim, s.d) == (18, 3, 10)
    assert s.ab_holds and s.minimal and s.minimality_method == "direct"
    t = summarize(tilde_join(family4(make_field(3), 3, 3),
                             family4(make_field(3), 3, 3)))
    assert (t.n, t.dim, t.d) == (36, 4, 18)
    f2 = summarize(family2(make_field(7), 3, 3))
    assert (f2.n, f2.dim, f2.d) == (126, 3, 78)
    assert f2.minimal
    j = s.to_json_dict()
    assert j["minimal_direct"] is True and "witness" not in j


def test_summarize_falls_back_to_ab():
    d = family4(make_field(3), 3, 3)
    dist_cost = functional_count(3, 3) * len(d)
    s = summarize(d, budget=dist_cost)  # distribution fits, direct check too
    assert s.minimality_method == "direct"


def test_distribution_serialization_round_trips():
    dist = weight_distribution_bruteforce(family4(make_field(3), 3, 3))
    assert WeightDistribution.from_csv(dist.to_csv()) == dist
    parsed = json.loads(dist.to_json(18, 3))
    assert parsed["n"] == 18 and parsed["dim"] == 3
    assert {e["w"]: e["count"] for e in parsed["weights"]} == dist.counts()
    nz = dist.without_zero()
    assert not nz.includes_zero_word
    assert nz.with_zero() == dist
