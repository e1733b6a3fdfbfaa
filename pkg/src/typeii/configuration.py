"""Intersection-count systems for extremal Type II codes and their verdicts.

For a length-n extremal Type II code C with minimal weight d = d(n), the
counts lambda_j(cbar) = #{c in the minimal shell : wt(c & cbar) = j} satisfy
one linear equation per zonal harmonic degree (the shell is a design, so the
zonal sums vanish) plus the sum equation whose right-hand side is the
extremal enumerator coefficient A_d.  Odd-j counts vanish by self-duality
and counts with j > d/2 vanish for a minimal-weight coset representative, so
the unknowns are lambda_0, lambda_2, ..., lambda_{d/2}.

Written with s = wt(cbar) kept formal, the system is overdetermined: its
extended determinant must vanish at any realizable s, yet as a rational
function of s it is not identically zero.  Its integer roots therefore
decide the configuration question per scenario:

  quotient scenario   cbar ranges over C / <minimal shell>; no integer root
                      with s > d means every class collapses, i.e. the code
                      is generated by its minimal-weight words.
  dual-of-span scenario   cbar ranges over <minimal shell>^perp / <minimal
                      shell>; if every positive integer root is divisible by
                      4 the dual of the span is doubly even, hence
                      self-orthogonal, which forces dim <shell span> >= n/2
                      and again generation by minimal words.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import Polynomial, RationalFunction, S, det_ratfun, integer_roots
from .gf2 import Code, Word
from .gleason import extremal_min_weight, extremal_weight_enumerator, sigma
from .harmonic import ZonalPoint, zonal_eval

QUOTIENT_OF_CODE = "quotient_of_code"
DUAL_OF_SPAN = "dual_of_span"

GENERATED = "generated_by_minimal"
COUNTEREXAMPLE = "counterexample_at"
ROOTS_MULT_4 = "roots_all_multiples_of_4"
INDETERMINATE = "indeterminate"

SUPPORTED_LENGTHS = (8, 16, 24, 32, 48, 56, 72, 96)
_DUAL_SCENARIO_LENGTHS = frozenset({56, 96})


def scenario_for(n: int) -> str:
    _check_supported(n)
    return DUAL_OF_SPAN if n in _DUAL_SCENARIO_LENGTHS else QUOTIENT_OF_CODE


def _check_supported(n: int):
    if n not in SUPPORTED_LENGTHS:
        raise ValueError(f"unsupported length {n}; supported: {SUPPORTED_LENGTHS}")


def kept_degree_set(n: int) -> list[int]:
    """Zonal degrees retained in the system: of the available degrees
    {1..sigma} plus sigma+2, keep the lowest d(n)/4 + 1 (the sum equation
    fills the remaining row), discarding the highest degrees first."""
    _check_supported(n)
    available = list(range(1, sigma(n) + 1)) + [sigma(n) + 2]
    need = extremal_min_weight(n) // 4 + 1
    if need > len(available):
        raise ValueError(f"not enough zonal equations for length {n}")
    return available[:need]


@dataclass(frozen=True)
class ConfigRow:
    tag: str                                  # "sum" or "zonal"
    degree: int | None                        # zonal degree, None for the sum row
    coefficients: tuple[RationalFunction, ...]
    rhs: RationalFunction


@dataclass(frozen=True)
class ConfigSystem:
    n: int
    scenario: str
    variables: tuple[str, ...]                # lambda_0, lambda_2, ...
    rows: tuple[ConfigRow, ...]
    kept_degrees: tuple[int, ...]

    @property
    def min_weight(self) -> int:
        return extremal_min_weight(self.n)

    def extended_matrix(self) -> list[list[RationalFunction]]:
        return [list(row.coefficients) + [row.rhs] for row in self.rows]


def build_system(n: int) -> ConfigSystem:
    """The sum row plus one symbolic zonal row per kept degree, in the
    unknowns lambda_{2j'} for 0 <= j' <= d(n)/4."""
    _check_supported(n)
    d_min = extremal_min_weight(n)
    weights = list(range(0, d_min // 2 + 1, 2))
    variables = tuple(f"lambda_{j}" for j in weights)
    a_d = extremal_weight_enumerator(n)[d_min]
    one = RationalFunction(1)
    rows = [
        ConfigRow("sum", None, tuple(one for _ in weights), RationalFunction(a_d))
    ]
    degrees = kept_degree_set(n)
    for d in degrees:
        coeffs = tuple(
            zonal_eval(ZonalPoint(n, None, d_min, a), d) for a in weights
        )
        rows.append(ConfigRow("zonal", d, coeffs, RationalFunction(0)))
    return ConfigSystem(n, scenario_for(n), variables, tuple(rows), tuple(degrees))


def extended_determinant(n: int) -> RationalFunction:
    """Determinant of the square extended matrix (coefficients plus the
    right-hand-side column); must vanish at any s admitting a solution."""
    return det_ratfun(build_system(n).extended_matrix())


@dataclass(frozen=True)
class NumeratorFactors:
    content: Fraction                        # rational scale, sign included
    linear: tuple[tuple[int, int], ...]      # (integer root, multiplicity)
    residual: Polynomial                     # integer-root-free cofactor


def factor_numerator(p: Polynomial) -> NumeratorFactors:
    if p.is_zero:
        raise ValueError("zero numerator cannot be factored")
    prim = p.primitive()
    content = p.content() if p.leading() > 0 else -p.content()
    linear: list[tuple[int, int]] = []
    for r in sorted(integer_roots(prim)):
        mult = 0
        lin = S - r
        while lin.divides(prim):
            prim = prim.exact_div(lin)
            mult += 1
        linear.append((r, mult))
    return NumeratorFactors(content, tuple(linear), prim)


@dataclass(frozen=True)
class Verdict:
    n: int
    scenario: str
    determinant: RationalFunction
    factors: NumeratorFactors
    integer_roots: frozenset[int]            # all integer roots of the numerator
    relevant_roots: frozenset[int]           # restricted to the scenario's range
    conclusion: str
    generated_by_minimal: bool
    counterexample_weight: int | None = None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "scenario": self.scenario,
            "determinant": {
                "numerator": self.determinant.num.to_json(),
                "denominator": self.determinant.den.to_json(),
                "display": str(self.determinant),
            },
            "numerator_factors": {
                "content": str(self.factors.content),
                "linear": [list(f) for f in self.factors.linear],
                "residual": self.factors.residual.to_json(),
            },
            "integer_roots": sorted(self.integer_roots),
            "relevant_roots": sorted(self.relevant_roots),
            "conclusion": self.conclusion,
            "generated_by_minimal": self.generated_by_minimal,
            "counterexample_weight": self.counterexample_weight,
        }


def analyze(n: int) -> Verdict:
    """Integer-root analysis of the extended determinant for length n.

    The verdict restricts roots to the scenario's meaningful range: a
    quotient-scenario counterexample class has minimal weight s > d(n), and a
    dual-scenario representative has s > 0 (denominator-clearing artifacts at
    small s must not flip verdicts)."""
    det = extended_determinant(n)
    if det.is_zero:
        raise ArithmeticError(f"extended determinant for n={n} vanished identically")
    factors = factor_numerator(det.num)
    roots = frozenset(integer_roots(det.num.primitive()))
    d_min = extremal_min_weight(n)
    scenario = scenario_for(n)
    if scenario == QUOTIENT_OF_CODE:
        relevant = frozenset(r for r in roots if r > d_min)
        if not relevant:
            conclusion, generated, cw = GENERATED, True, None
        else:
            cw = min(relevant)
            conclusion, generated = COUNTEREXAMPLE, False
    else:
        relevant = frozenset(r for r in roots if r > 0)
        if relevant and all(r % 4 == 0 for r in relevant):
            conclusion, generated, cw = ROOTS_MULT_4, True, None
        elif not relevant:
            conclusion, generated, cw = GENERATED, True, None
        else:
            conclusion, generated, cw = INDETERMINATE, False, None
    return Verdict(
        n=n,
        scenario=scenario,
        determinant=det,
        factors=factors,
        integer_roots=roots,
        relevant_roots=relevant,
        conclusion=conclusion,
        generated_by_minimal=generated,
        counterexample_weight=cw,
    )


# Reference analysis results the tool is expected to reproduce: the required
# polynomial factor of each determinant numerator, the published integer
# prefactor, and the published denominator (the latter two are informational).
@dataclass(frozen=True)
class ReferenceResult:
    factor: Polynomial
    constant: int
    denominator_root_powers: tuple[tuple[int, int], ...]
    conclusion: str

    def denominator(self) -> Polynomial:
        out = Polynomial([1])
        for root, power in self.denominator_root_powers:
            out = out * (S - root) ** power
        return out


def _poly(*coeffs_desc: int) -> Polynomial:
    return Polynomial(list(reversed(coeffs_desc)))


REFERENCE: dict[int, ReferenceResult] = {
    8: ReferenceResult(
        _poly(3, -10), 2**7 * 3 * 7, ((1, 1), (0, 1)), GENERATED
    ),
    16: ReferenceResult(
        _poly(1, -8), -93184, ((1, 1), (0, 1)), COUNTEREXAMPLE
    ),
    24: ReferenceResult(
        _poly(7, -98, 344), 2**15 * 3**2 * 5 * 7 * 11**2 * 23,
        ((2, 1), (1, 2), (0, 2)), GENERATED
    ),
    32: ReferenceResult(
        _poly(7, -126, 584), 2**17 * 3 * 5**2 * 7 * 29 * 31,
        ((2, 1), (1, 2), (0, 2)), GENERATED
    ),
    48: ReferenceResult(
        _poly(11, -396, 4906, -20736),
        2**26 * 3**5 * 5**2 * 7 * 11**2 * 23**2 * 43 * 47,
        ((3, 1), (2, 2), (1, 3), (0, 3)), GENERATED
    ),
    56: ReferenceResult(
        _poly(1, -16) * _poly(3, -112, 1368, -5120),
        -(2**27) * 3**7 * 5**3 * 7**3 * 11 * 13**2 * 17 * 53,
        ((4, 1), (3, 1), (2, 2), (1, 3), (0, 3)), ROOTS_MULT_4
    ),
    72: ReferenceResult(
        _poly(39, -2600, 67410, -800440, 3650496),
        2**42 * 3**5 * 5**2 * 7**2 * 11**2 * 13 * 17**3 * 23**2 * 67**2 * 71,
        ((4, 1), (3, 2), (2, 3), (1, 4), (0, 4)), GENERATED
    ),
    96: ReferenceResult(
        _poly(1, -24) * _poly(68, -6936, 289901, -6153306, 65640728, -277774080),
        -(2**59) * 3**9 * 5**4 * 7**2 * 11**2 * 13**2 * 17 * 19 * 23**3
        * 29 * 31**2 * 43 * 47**2 * 89**2,
        ((6, 1), (5, 1), (4, 2), (3, 3), (2, 4), (1, 5), (0, 5)), ROOTS_MULT_4
    ),
}


def reference_ratio(n: int) -> RationalFunction:
    """Computed determinant divided by the full reference value; a constant
    +-1 means the conventions match the published computation exactly."""
    ref = REFERENCE[n]
    published = RationalFunction(ref.factor * ref.constant, ref.denominator())
    return extended_determinant(n) / published


# ------------------------------------------------------------ concrete codes

@dataclass(frozen=True)
class CodeReport:
    n: int
    k: int
    min_weight: int
    extremal: bool
    shell_size: int
    matches_enumerator: bool
    span_dimension: int
    generated_by_minimal: bool
    coset_min_weights: tuple[int, ...]
    lambda_rows_consistent: bool
    intersection_bound_holds: bool
    sampled_weights: tuple[int, ...]

    @property
    def all_checks_pass(self) -> bool:
        return (
            self.extremal
            and self.matches_enumerator
            and self.lambda_rows_consistent
            and self.intersection_bound_holds
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "min_weight": self.min_weight,
            "extremal": self.extremal,
            "shell_size": self.shell_size,
            "matches_enumerator": self.matches_enumerator,
            "span_dimension": self.span_dimension,
            "generated_by_minimal": self.generated_by_minimal,
            "coset_min_weights": list(self.coset_min_weights),
            "lambda_rows_consistent": self.lambda_rows_consistent,
            "intersection_bound_holds": self.intersection_bound_holds,
            "sampled_weights": list(self.sampled_weights),
            "all_checks_pass": self.all_checks_pass,
        }


def observed_lambda(shell, cbar: Word) -> dict[int, int]:
    """Intersection-weight counts of the minimal shell against cbar."""
    counts: dict[int, int] = {}
    for word in shell:
        a = (word.bits & cbar.bits).bit_count()
        counts[a] = counts.get(a, 0) + 1
    return counts


def _sample_codewords(code: Code, per_weight: int = 3) -> list[Word]:
    """Deterministic spread of nonzero codewords, a few per weight class."""
    from .gf2 import _gray_sweep

    buckets: dict[int, list[int]] = {}
    for bits in _gray_sweep(code.rref_rows, 0, 1 << code.k):
        if bits == 0:
            continue
        bucket = buckets.setdefault(bits.bit_count(), [])
        if len(bucket) < per_weight:
            bucket.append(bits)
    return [Word(code.n, b) for key in sorted(buckets) for b in buckets[key]]


def verify_on_code(code: Code, threads: int = 1) -> CodeReport:
    """End-to-end configuration check on a constructed code: extremality,
    span of the minimal shell, coset minimal weights, and exact consistency
    of observed lambda vectors with every kept zonal equation."""
    n = code.n
    _check_supported(n)
    d_min = extremal_min_weight(n)
    dist = code.weight_distribution(threads=threads)
    min_weight = next(w for w in range(1, n + 1) if dist[w])
    extremal = min_weight == d_min
    shell = code.shell(d_min, threads=threads)
    enum = extremal_weight_enumerator(n)
    matches_enumerator = tuple(dist) == enum.coefficients
    span = Code(n, (w.bits for w in shell)) if shell else Code(n, [0])
    generated = span == code
    ext_rows, _ = _coset_representatives(code, span)
    minima = list(_coset_minima(ext_rows, span))
    coset_weights = tuple(sorted(m for _, m in minima))

    degrees = kept_degree_set(n)
    samples = _sample_codewords(code)
    rows_ok = True
    for cbar in samples:
        s = cbar.weight()
        profile = observed_lambda(shell, cbar)
        if any(a % 2 for a in profile):
            rows_ok = False
        if sum(profile.values()) != len(shell):
            rows_ok = False
        for d in degrees:
            if s < d:
                continue
            total = Fraction(0)
            for a, count in profile.items():
                total += count * zonal_eval(ZonalPoint(n, s, d_min, a), d)
            if total != 0:
                rows_ok = False

    # minimal-weight coset representatives meet every minimal word in at
    # most d/2 positions (otherwise adding the word would shorten them)
    bound_ok = True
    for rep_bits, min_w in minima:
        if min_w == 0:
            continue
        for cword in _coset_words_of_weight(rep_bits, span, min_w):
            for word in shell:
                if (word.bits & cword).bit_count() > d_min // 2:
                    bound_ok = False
    return CodeReport(
        n=n,
        k=code.k,
        min_weight=min_weight,
        extremal=extremal,
        shell_size=len(shell),
        matches_enumerator=matches_enumerator,
        span_dimension=span.k,
        generated_by_minimal=generated,
        coset_min_weights=coset_weights,
        lambda_rows_consistent=rows_ok,
        intersection_bound_holds=bound_ok,
        sampled_weights=tuple(w.weight() for w in samples),
    )


def _coset_representatives(code: Code, sub: Code) -> tuple[list[int], Code]:
    ext: list[int] = []
    pivots: list[int] = []
    for row in code.rref_rows:
        r = sub.reduce(row)
        for p, e in zip(pivots, ext):
            if r >> p & 1:
                r ^= e
        if r:
            ext.append(r)
            pivots.append((r & -r).bit_length() - 1)
    return ext, sub


def _coset_minima(ext_rows: list[int], sub: Code):
    from .gf2 import _gray_sweep

    for label in range(1 << len(ext_rows)):
        rep = 0
        for i, row in enumerate(ext_rows):
            if label >> i & 1:
                rep ^= row
        min_w = min(
            (rep ^ b).bit_count() for b in _gray_sweep(sub.rref_rows, 0, 1 << sub.k)
        )
        yield rep, min_w


def _coset_words_of_weight(rep_bits: int, sub: Code, target: int):
    from .gf2 import _gray_sweep

    for b in _gray_sweep(sub.rref_rows, 0, 1 << sub.k):
        word = rep_bits ^ b
        if word.bit_count() == target:
            yield word
