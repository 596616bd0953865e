"""Shared brute-force oracles, kept independent of the library's
closed-form code paths: everything here counts by direct enumeration
over field tuples."""

import itertools

import pytest

from mincodes.field import field_of_order


def brute_sum_count(s, q, target, coeffs=None):
    """Count all-nonzero s-tuples over GF(q) with sum(a_i * x_i) == target
    by direct enumeration (coeffs default to all ones)."""
    gf = field_of_order(q)
    coeffs = coeffs or (1,) * s
    count = 0
    for xs in itertools.product(gf.nonzero_elements(), repeat=s):
        total = 0
        for a, x in zip(coeffs, xs):
            total = gf.add(total, gf.mul(a, x))
        if total == target:
            count += 1
    return count


def brute_block_system_count(parts, alphas, q, gamma):
    """Count all-nonzero solutions of the paired block-sum system: total
    sum == gamma and sum of alpha_i * (block i sum) == 0."""
    gf = field_of_order(q)
    s = sum(parts)
    count = 0
    for xs in itertools.product(gf.nonzero_elements(), repeat=s):
        total = 0
        for x in xs:
            total = gf.add(total, x)
        if total != gamma:
            continue
        weighted = 0
        pos = 0
        for a, r in zip(alphas, parts):
            block = 0
            for x in xs[pos : pos + r]:
                block = gf.add(block, x)
            weighted = gf.add(weighted, gf.mul(a, block))
            pos += r
        if weighted == 0:
            count += 1
    return count


def brute_gamma_cap(h, q):
    """Count h-tuples with all entries nonzero and no two entries
    summing to zero."""
    gf = field_of_order(q)
    count = 0
    for xs in itertools.product(gf.nonzero_elements(), repeat=h):
        if all(
            gf.add(xs[i], xs[j]) != 0
            for i in range(h)
            for j in range(i + 1, h)
        ):
            count += 1
    return count


def brute_points(q, k, predicate):
    """All nonzero points of AG(k,q) satisfying a predicate, lex order."""
    gf = field_of_order(q)
    return [
        pt
        for pt in itertools.product(range(q), repeat=k)
        if any(pt) and predicate(gf, pt)
    ]


def brute_weight_distribution(d):
    """Weight counts over all q^k functionals, one scalar product at a
    time (no projective shortcut, no numpy)."""
    gf, k = d.field, d.dim
    counts = {}
    for f in itertools.product(range(gf.q), repeat=k):
        w = sum(1 for pt in d.points if gf.dot(f, pt) != 0)
        counts[w] = counts.get(w, 0) + 1
    return counts


@pytest.fixture
def gf3():
    return field_of_order(3)


@pytest.fixture
def gf5():
    return field_of_order(5)
