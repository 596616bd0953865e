"""Closed-form lengths, minimum weights, and weight distributions for the
four defining-set families and their tilde lifts.

Weights for Family 1 are always derived as n - Lambda + 1 from the two
solution-count formulas (the printed spectrum expression disagrees with
them in sign; the enumeration oracle confirms n - Lambda + 1).  Equal
weights arising from different formula terms are always aggregated, and
every aggregated entry keeps the symbolic provenance of its terms so a
failing comparison pinpoints the responsible term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import combinat
from .combinat import exact_div, gamma_cap, multinomial, psi
from .code import WeightDistribution
from .pointset import ParameterError


def char_of(q: int) -> int:
    """Prime characteristic of the field of order q."""
    for p in range(2, q + 1):
        if q % p == 0:
            return p
    raise ParameterError(f"bad field order {q}")


def _check_params(name: str, q: int, k: int, h: int, h_min: int = 1) -> None:
    if q < 2 or k < 1 or not (h_min <= h <= k):
        raise ParameterError(
            f"{name} requires {h_min} <= h <= k and q >= 2; "
            f"got q={q}, k={k}, h={h}"
        )


@dataclass(frozen=True)
class SpectrumReport:
    """A closed-form weight distribution with symbolic provenance."""

    family: int
    q: int
    k: int
    h: int
    tilde: bool
    n: int
    dim: int
    distribution: WeightDistribution
    provenance: tuple[tuple[int, str], ...]

    def to_json_dict(self) -> dict:
        out = self.distribution.to_json_dict(self.n, self.dim)
        out["family"] = self.family
        out["q"], out["k"], out["h"] = self.q, self.k, self.h
        out["tilde"] = self.tilde
        out["provenance"] = [
            {"w": w, "origin": label} for w, label in self.provenance
        ]
        return out

    def to_markdown(self) -> str:
        """Weight table in the layout of the published tables."""
        prov: dict[int, list[str]] = {}
        for w, label in self.provenance:
            prov.setdefault(w, []).append(label)
        lines = [
            "| Weight i | B_i | origin |",
            "|---|---|---|",
        ]
        for w, c in self.distribution.entries:
            origins = " = ".join(prov.get(w, ["zero word"]))
            lines.append(f"| {w} | {c} | {origins} |")
        return "\n".join(lines) + "\n"


def _aggregate(
    family: int, q: int, k: int, h: int, tilde: bool, n: int, dim: int,
    terms: list[tuple[int, int, str]], include_zero: bool = True,
) -> SpectrumReport:
    counts: dict[int, int] = {0: 1} if include_zero else {}
    prov: list[tuple[int, str]] = []
    for w, c, label in terms:
        if c == 0:
            continue
        counts[w] = counts.get(w, 0) + c
        prov.append((w, label))
    dist = WeightDistribution.from_counts(counts,
                                          includes_zero_word=include_zero)
    return SpectrumReport(
        family=family, q=q, k=k, h=h, tilde=tilde, n=n, dim=dim,
        distribution=dist, provenance=tuple(sorted(prov)),
    )


# -- Family 1 ----------------------------------------------------------------

def family1_length(q: int, k: int, h: int) -> int:
    _check_params("family1_length", q, k, h)
    inner = q ** (h + 1) - (q - 1) ** (h + 1) + (-1) ** h * (q - 1)
    if k > h:
        return q ** (k - h - 1) * inner - 1
    return exact_div(inner, q) - 1


def lambda_r_pos(q: int, k: int, h: int) -> int:
    """Hyperplane-intersection size when some coefficient beyond the
    first h coordinates is nonzero; the codeword weight is n - Lambda + 1."""
    if k <= h:
        raise ParameterError("lambda_r_pos requires k > h")
    return q ** (k - h - 1) * (q ** h + psi(h, q) - (q - 1) ** h)


def lambda_r_zero(q: int, k: int, h: int, s: int,
                  parts: tuple[int, ...]) -> int:
    """Hyperplane-intersection size when all nonzero coefficients sit in
    the first h coordinates, taking s of them with value multiset given
    by ``parts`` (composition of s, at most q-1 distinct blocks)."""
    _check_params("lambda_r_zero", q, k, h)
    if not (1 <= s <= h) or sum(parts) != s:
        raise ParameterError(f"parts {parts} must sum to s in 1..h; s={s}")
    if len(parts) > q - 1:
        raise ParameterError(
            f"{len(parts)} distinct nonzero coefficients do not exist "
            f"in GF({q})"
        )
    # the appended h-s block carries no coefficient-distinctness
    # constraint, so the raw recursion is used (A_{...,0} = A_{...})
    a = combinat._A(parts + (h - s,) if s < h else parts, q)
    return (
        q ** (k - 1)
        - (q - 1) ** (h - s) * q ** (k - h) * psi(s, q)
        + q ** (k - h) * a
    )


def family1_distribution(q: int, k: int, h: int,
                         relaxed: bool = False) -> SpectrumReport:
    _check_params("family1_distribution", q, k, h,
                  h_min=1 if relaxed else 4)
    n = family1_length(q, k, h)
    terms: list[tuple[int, int, str]] = []
    if k > h:
        w = n - lambda_r_pos(q, k, h) + 1
        terms.append((w, q ** k - q ** h, "r>=1"))
    for s in range(1, h + 1):
        for parts, mult_type in combinat.enumerate_part_multisets(
                s, min(s, q - 1)):
            lam = lambda_r_zero(q, k, h, s, parts)
            count = (
                math.comb(h, s)
                * multinomial(s, parts)
                * multinomial(len(parts), mult_type)
                * math.comb(q - 1, len(parts))
            )
            label = f"r=0, s={s}, partition {{{','.join(map(str, parts))}}}"
            terms.append((n - lam + 1, count, label))
    return _aggregate(1, q, k, h, False, n, k, terms)


# -- Families 2 and 3: lengths and minimum weights ---------------------------

def family2_length(q: int, k: int, h: int) -> int:
    _check_params("family2_length", q, k, h)
    p = char_of(q)
    if p == 2:
        if h > q:
            return q ** k - 1
        falling = q
        for t in range(1, h):
            falling *= q - t
        return q ** (k - h) * (q ** h - falling) - 1
    return q ** (k - h) * (
        q ** h - gamma_cap(h, q) - h * gamma_cap(h - 1, q)
    ) - 1


def family3_length(q: int, k: int, h: int) -> int:
    _check_params("family3_length", q, k, h)
    p = char_of(q)
    if p == 2:
        if h > q + 1:
            return q ** k - 1
        falling = 1
        for t in range(1, h + 1):
            falling *= q - t
        return q ** (k - h) * (q ** h - falling) - 1
    return q ** (k - h) * (q ** h - gamma_cap(h, q)) - 1


def family4_length(q: int, k: int, h: int) -> int:
    _check_params("family4_length", q, k, h)
    return q ** (k - h) * (q ** h - (q - 1) ** h) - 1


def _require_large_odd(name: str, q: int) -> None:
    if q <= 5 or char_of(q) == 2:
        raise ParameterError(
            f"{name} is only established for q > 5 with odd characteristic"
        )


def family2_min_weight(q: int, k: int, h: int
                       ) -> tuple[int, list[tuple[int, ...]]]:
    """Minimum weight n - q^(k-1) + 1, achieved exactly by the
    hyperplanes x_i + x_j = 0, 1 <= i < j <= h."""
    _check_params("family2_min_weight", q, k, h, h_min=3)
    _require_large_odd("family2_min_weight", q)
    n = family2_length(q, k, h)
    witnesses = []
    for i in range(h):
        for j in range(i + 1, h):
            f = [0] * k
            f[i] = f[j] = 1
            witnesses.append(tuple(f))
    return n - q ** (k - 1) + 1, witnesses


def family3_min_weight(q: int, k: int, h: int
                       ) -> tuple[int, list[tuple[int, ...]]]:
    """Minimum weight n - q^(k-1) + 1, achieved exactly by the
    hyperplanes x_i + x_j = 0 and x_i = 0, indices within the first h."""
    _check_params("family3_min_weight", q, k, h, h_min=3)
    _require_large_odd("family3_min_weight", q)
    n = family3_length(q, k, h)
    witnesses = []
    for i in range(h):
        f = [0] * k
        f[i] = 1
        witnesses.append(tuple(f))
    for i in range(h):
        for j in range(i + 1, h):
            f = [0] * k
            f[i] = f[j] = 1
            witnesses.append(tuple(f))
    return n - q ** (k - 1) + 1, witnesses


# -- Family 4 ----------------------------------------------------------------

def family4_distribution(q: int, k: int, h: int,
                         relaxed: bool = False) -> SpectrumReport:
    _check_params("family4_distribution", q, k, h,
                  h_min=1 if relaxed else 3)
    n = family4_length(q, k, h)
    terms: list[tuple[int, int, str]] = []
    if k > h:
        w = n - q ** (k - 1) + q ** (k - h - 1) * (q - 1) ** h + 1
        terms.append((w, q ** k - q ** h, "w"))
    for s in range(1, h + 1):
        w_s = n - q ** (k - 1) + q ** (k - h) * (q - 1) ** (h - s) \
            * psi(s, q) + 1
        terms.append((w_s, math.comb(h, s) * (q - 1) ** s, f"w_{s}"))
    return _aggregate(4, q, k, h, False, n, k, terms)


# -- tilde lifts --------------------------------------------------------------

def tilde_transfer(base: WeightDistribution, n: int,
                   q: int) -> WeightDistribution:
    """Distribution of the doubled code C_[D,D]~ from the distribution of
    C_D, for scale-invariant D of size n.

    Every base entry (w, A) contributes (2w, A) and
    (n + (q-2)w/(q-1), (q-1)A); in particular the zero word maps to the
    zero word plus weight n with count q-1.  Equal images are merged.
    """
    if not base.includes_zero_word:
        raise ParameterError("tilde_transfer needs the base zero word")
    if n % (q - 1):
        raise ParameterError(
            f"base length {n} not divisible by q-1: D cannot be "
            "scale-invariant"
        )
    counts: dict[int, int] = {}
    for w, a in base.entries:
        if w % (q - 1):
            raise ParameterError(
                f"base weight {w} not divisible by q-1: base is not the "
                "distribution of a scale-invariant defining set"
            )
        counts[2 * w] = counts.get(2 * w, 0) + a
        lifted = n + exact_div((q - 2) * w, q - 1)
        counts[lifted] = counts.get(lifted, 0) + (q - 1) * a
    return WeightDistribution.from_counts(counts)


def _tilde_report(base: SpectrumReport) -> SpectrumReport:
    q, n = base.q, base.n
    dist = tilde_transfer(base.distribution.with_zero(), n, q)
    prov: list[tuple[int, str]] = [(0, "zero word"), (n, "n (base zero word)")]
    for w, label in base.provenance:
        prov.append((2 * w, f"2*({label})"))
        prov.append((n + (q - 2) * w // (q - 1), f"n+(q-2)/(q-1)*({label})"))
    return SpectrumReport(
        family=base.family, q=q, k=base.k + 1, h=base.h, tilde=True,
        n=2 * n, dim=base.k + 1, distribution=dist,
        provenance=tuple(sorted(set(prov))),
    )


def family4_tilde_distribution(q: int, k: int, h: int,
                               relaxed: bool = False) -> SpectrumReport:
    """Distribution of the [2n, k+1, n] code lifted from family 4."""
    return _tilde_report(family4_distribution(q, k, h, relaxed=relaxed))


def family1_tilde_distribution(q: int, k: int, h: int,
                               relaxed: bool = False) -> SpectrumReport:
    """Distribution of the doubled code lifted from family 1, with
    collisions aggregated unconditionally."""
    return _tilde_report(family1_distribution(q, k, h, relaxed=relaxed))


# -- dispatch helpers ---------------------------------------------------------

LENGTHS = {
    1: family1_length,
    2: family2_length,
    3: family3_length,
    4: family4_length,
}

DISTRIBUTIONS = {
    1: family1_distribution,
    4: family4_distribution,
}

TILDE_DISTRIBUTIONS = {
    1: family1_tilde_distribution,
    4: family4_tilde_distribution,
}


def closed_form_report(family: int, q: int, k: int, h: int,
                       tilde: bool = False,
                       relaxed: bool = False) -> SpectrumReport:
    """Closed-form SpectrumReport, available for families 1 and 4 (and
    their tilde lifts); raises ParameterError otherwise."""
    table = TILDE_DISTRIBUTIONS if tilde else DISTRIBUTIONS
    if family not in table:
        raise ParameterError(
            f"no closed-form weight distribution for family {family}"
            f"{' tilde' if tilde else ''}"
        )
    return table[family](q, k, h, relaxed=relaxed)
