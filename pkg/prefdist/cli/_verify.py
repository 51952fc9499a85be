"""
Copyright (c) 2026 The prefdist developers

This program is free software: you can redistribute it and/or modify it
under the terms of the GNU General Public License as published by the
Free Software Foundation, either version 3 of the License, or (at your
option) any later version.

This program is distributed in the hope that it will be useful, but
WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the GNU General
Public License for more details.

You should have received a copy of the GNU General Public License along
with this program. If not, see <http://www.gnu.org/licenses/>.
"""

import math
from collections import OrderedDict
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence

import numpy as np

from prefdist.casebase import CaseBase, run_elicitation
from prefdist.cli._types import RunContext
from prefdist.common import EXACT_TOLERANCE, ClosenessPolicy, EvaluationMode, MetricKind, derive_seed, stream
from prefdist.linext import ExtensionSampler, count_extensions, enumerate_extensions, exact_heights, uniformity_tv
from prefdist.metrics import EstimationConfig, PartialDistanceEstimator, UtilityVector, chebyshev_sample_size, \
                             euclidean, footrule, generalized_euclidean, generalized_footrule, normalized, \
                             probabilistic, probabilistic_distance_utilities, relative_equivalence_witness, \
                             utility_euclidean, utility_footrule
from prefdist.orders import OutcomeSpace, PartialPreferenceOrder, WeakOrder, build_partial_order, is_extension, \
                            parse_partial_order, parse_weak_order

# Draws per sampler batch in the longer checks
_BATCH_SIZE = 4096

# Largest extension count of a random poset in the uniformity checks;
# beyond this 5e4 draws cannot resolve a total variation of 0.02
_UNIFORMITY_MAX_EXTENSIONS = 24


class Check(NamedTuple):
    """ Outcome of one verification check """
    suite: str
    name: str
    expected: str
    actual: str
    passed: bool


Suite = Callable[[RunContext, np.random.Generator], List[Check]]


def _near(suite: str, name: str, expected: float, actual: float, tolerance: float) -> Check:
    return Check(suite, name, f"{expected:.6g} ± {tolerance:g}", f"{actual:.6g}", abs(actual - expected) <= tolerance)


def _space(n: int) -> OutcomeSpace:
    return OutcomeSpace(f"o{i + 1}" for i in range(n))


def random_weak_order(rng: np.random.Generator, space: OutcomeSpace) -> WeakOrder:
    return WeakOrder.from_levels(space, rng.integers(0, space.n, size=space.n))


def random_poset(rng: np.random.Generator, space: OutcomeSpace, density: float) -> PartialPreferenceOrder:
    """
    Random strict partial order: each pair consistent with a hidden
    random ranking is related with the given probability
    """
    ranks = rng.permutation(space.n)
    strict = [(a, b) for a in range(space.n) for b in range(space.n)
              if ranks[a] < ranks[b] and rng.random() < density]
    return build_partial_order(space, strict=strict)


def all_partial_orders(space: OutcomeSpace) -> List[PartialPreferenceOrder]:
    """
    Every partial preference order on a (small) space, one per preorder
    of its outcomes

    @param   space  Outcome space
    @return  Partial orders (list)
    """
    n = space.n
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    orders: List[PartialPreferenceOrder] = []

    for mask in range(2 ** len(pairs)):
        weakly_below = np.eye(n, dtype=bool)
        for bit, (a, b) in enumerate(pairs):
            weakly_below[a, b] = bool(mask >> bit & 1)

        composed = (weakly_below.astype(int) @ weakly_below.astype(int)) > 0
        if np.any(composed & ~weakly_below):
            continue

        indifference = [(a, b) for a, b in pairs if a < b and weakly_below[a, b] and weakly_below[b, a]]
        strict = [(a, b) for a, b in pairs if weakly_below[a, b] and not weakly_below[b, a]]
        orders.append(build_partial_order(space, indifference, strict))

    return orders


def _worked_orders(context: RunContext, rng: np.random.Generator) -> List[Check]:
    space = OutcomeSpace(["B", "M", "P"])
    x, y, z = (parse_weak_order(text, space) for text in ("B < M < P", "M < P < B", "P < M < B"))
    suite = "orders"

    checks = [
        _near(suite, "footrule(X, Y)", 2, footrule(x, y), EXACT_TOLERANCE),
        _near(suite, "euclidean(X, Y)", math.sqrt(6), euclidean(x, y), EXACT_TOLERANCE),
        _near(suite, "probabilistic(X, Y)", 2 / 3, probabilistic(x, y), EXACT_TOLERANCE),
        _near(suite, "normalized footrule(X, Y)", 1, normalized(MetricKind.footrule, x, y), 1e-4),
        _near(suite, "normalized euclidean(X, Y)", 0.8660, normalized(MetricKind.euclidean, x, y), 1e-4),
        _near(suite, "normalized probabilistic(X, Y)", 0.6667, normalized(MetricKind.probabilistic, x, y), 1e-4)
    ]

    checks.extend(_near(suite, f"normalized {kind.value}(X, Z)", 1, normalized(kind, x, z), EXACT_TOLERANCE)
                  for kind in MetricKind)

    witness = relative_equivalence_witness(MetricKind.footrule, MetricKind.euclidean, [x, y, z])
    found = "none" if witness is None else " / ".join(repr(order) for order in witness)
    checks.append(Check(suite, "footrule and euclidean not relatively equivalent", "a witness", found,
                        witness is not None))

    return checks


def _worked_utilities(context: RunContext, rng: np.random.Generator) -> List[Check]:
    space = OutcomeSpace(["a", "b", "c"])
    ux, uy = UtilityVector(space, [0, 1, 2]), UtilityVector(space, [1, 3, 4])

    return [
        _near("utilities", "utility footrule", 1 / 12, utility_footrule(ux, uy), EXACT_TOLERANCE),
        _near("utilities", "utility euclidean", 1 / 6, utility_euclidean(ux, uy), EXACT_TOLERANCE)
    ]


def _sampled_utilities(context: RunContext, rng: np.random.Generator) -> List[Check]:
    space = OutcomeSpace(["a", "b", "c"])
    ux = UtilityVector(space, [0, 1, 2])
    config = context.estimation._replace(sample_count=1_000_000)

    checks = []
    for name, values, expected in (("(0,1,2) vs (0,2,3)", [0, 2, 3], 1 / 9),
                                   ("(0,1,2) vs (0,2,1)", [0, 2, 1], 1 / 3)):
        estimate = probabilistic_distance_utilities(ux, UtilityVector(space, values), config, context.logger)
        checks.append(_near("prospects", name, expected, estimate.value, 0.005))

    return checks


def _props(context: RunContext, rng: np.random.Generator) -> List[Check]:
    suite = "props"
    triples = 10_000

    violations = 0
    for _ in range(triples):
        space = _space(int(rng.integers(2, 9)))
        x, y, z = (random_weak_order(rng, space) for _ in range(3))
        dxy, dyx = probabilistic(x, y), probabilistic(y, x)
        dxz, dyz = probabilistic(x, z), probabilistic(y, z)

        axioms = dxy >= 0 \
             and probabilistic(x, x) == 0 \
             and (dxy <= EXACT_TOLERANCE) == (x == y) \
             and abs(dxy - dyx) <= EXACT_TOLERANCE \
             and dxz <= dxy + dyz + EXACT_TOLERANCE
        violations += not axioms

    checks = [Check(suite, f"weak order metric axioms over {triples} triples", "0 violations",
                    f"{violations} violations", violations == 0)]

    config = context.estimation._replace(sample_count=10_000)
    violations = 0
    for index in range(100):
        space = _space(int(rng.integers(2, 6)))
        x, y, z = (UtilityVector(space, rng.normal(size=space.n)) for _ in range(3))

        seeded = config._replace(seed=derive_seed(context.estimation.seed, index))
        dxy = probabilistic_distance_utilities(x, y, seeded)
        dyz = probabilistic_distance_utilities(y, z, seeded)
        dxz = probabilistic_distance_utilities(x, z, seeded)

        slack = 3 * math.sqrt(dxy.standard_error ** 2 + dyz.standard_error ** 2 + dxz.standard_error ** 2)
        violations += dxz.value > dxy.value + dyz.value + slack

    checks.append(Check(suite, "utility triangle inequality within 3 standard errors (100 triples)",
                        "0 violations", f"{violations} violations", violations == 0))

    nonzero = 0
    for index in range(100):
        space = _space(int(rng.integers(2, 6)))
        u = rng.normal(size=space.n)
        alpha, beta = float(rng.uniform(0.1, 10)), float(rng.normal(scale=10))

        seeded = config._replace(seed=derive_seed(context.estimation.seed, index))
        estimate = probabilistic_distance_utilities(UtilityVector(space, u), UtilityVector(space, alpha * u + beta),
                                                    seeded)
        nonzero += estimate.value != 0

    checks.append(Check(suite, "zero distance under positive affine maps (100 utilities)", "0 nonzero",
                        f"{nonzero} nonzero", nonzero == 0))

    return checks


def _linext(context: RunContext, rng: np.random.Generator) -> List[Check]:
    suite = "linext"
    cap = 8

    mismatches = 0
    for _ in range(200):
        poset = random_poset(rng, _space(int(rng.integers(1, cap + 1))), float(rng.uniform(0.1, 0.7)))
        mismatches += count_extensions(poset, cap) != len(enumerate_extensions(poset, cap))

    checks = [Check(suite, "count equals enumeration on 200 random posets", "0 mismatches",
                    f"{mismatches} mismatches", mismatches == 0)]

    for m in range(1, cap + 1):
        space = _space(m)
        antichain = count_extensions(PartialPreferenceOrder.vacuous(space), cap)
        chain = count_extensions(build_partial_order(space, strict=zip(range(m - 1), range(1, m))), cap)
        checks.append(Check(suite, f"antichain and chain of {m}", f"{math.factorial(m)} and 1",
                            f"{antichain} and {chain}", antichain == math.factorial(m) and chain == 1))

    return checks


def _uniformity_posets(rng: np.random.Generator, count: int) -> List[PartialPreferenceOrder]:
    posets: List[PartialPreferenceOrder] = []
    while len(posets) < count:
        poset = random_poset(rng, _space(int(rng.integers(4, 8))), 0.5)
        if 2 <= count_extensions(poset) <= _UNIFORMITY_MAX_EXTENSIONS:
            posets.append(poset)

    return posets


def _sampler(context: RunContext, rng: np.random.Generator) -> List[Check]:
    suite = "sampler"
    draws = 50_000
    fixtures = [("3-antichain", PartialPreferenceOrder.vacuous(OutcomeSpace(["a", "b", "c"]))),
                ("V", parse_partial_order("a < c; b < c"))]
    fixtures.extend((f"random {index + 1}", poset) for index, poset in enumerate(_uniformity_posets(rng, 3)))

    checks = []
    sampler = context.sampler._replace(epsilon=0.01, batch_size=_BATCH_SIZE)
    for index, (name, poset) in enumerate(fixtures):
        seeded = sampler._replace(seed=derive_seed(context.sampler.seed, index))
        sample = ExtensionSampler(seeded, context.logger).sample_many(poset, draws)

        tv = uniformity_tv(poset, sample)
        invalid = sum(not is_extension(draw.as_weak_order(), poset) for draw in set(sample))

        checks.append(Check(suite, f"{name} ({poset.m} classes) TV to uniform", "<= 0.02", f"{tv:.4f}", tv <= 0.02))
        checks.append(Check(suite, f"{name} draws are extensions", "0 invalid", f"{invalid} invalid", invalid == 0))

    return checks


def _estimator(context: RunContext, rng: np.random.Generator) -> List[Check]:
    suite = "estimator"
    sampler = context.sampler._replace(batch_size=_BATCH_SIZE)
    root = context.estimation.seed
    kinds = list(MetricKind)

    def _estimator_for(config: EstimationConfig) -> PartialDistanceEstimator:
        return PartialDistanceEstimator(config, sampler, context.caps, context.logger)

    pairs, seeds = 50, 2
    misses = 0
    for index in range(pairs):
        space = _space(int(rng.integers(3, 7)))
        p1, p2 = (random_poset(rng, space, float(rng.uniform(0.1, 0.6))) for _ in range(2))
        kind = kinds[index % len(kinds)]

        exact = _estimator_for(context.estimation).avg_distance(p1, p2, kind, EvaluationMode.exact).value
        for repeat in range(seeds):
            config = context.estimation._replace(seed=derive_seed(root, index, repeat), sample_count=10_000)
            estimate = _estimator_for(config).avg_distance(p1, p2, kind, EvaluationMode.sampled)
            misses += abs(estimate.value - exact) > 3 * estimate.standard_error + EXACT_TOLERANCE

    runs = pairs * seeds
    checks = [Check(suite, f"Monte Carlo within 3 standard errors of exact ({runs} runs)", ">= 99%",
                    f"{100 * (runs - misses) / runs:.1f}%", misses <= 0.01 * runs)]

    v_poset = parse_partial_order("a < c; b < c")
    chain = parse_partial_order("a < b < c", v_poset.space)
    exact = _estimator_for(context.estimation).avg_distance(v_poset, chain, MetricKind.footrule,
                                                           EvaluationMode.exact).value

    repeats = 1000
    covered = 0
    for repeat in range(repeats):
        config = context.estimation._replace(seed=derive_seed(root, pairs, repeat), sample_count=100)
        estimate = _estimator_for(config).avg_distance(v_poset, chain, MetricKind.footrule, EvaluationMode.sampled)
        covered += estimate.interval_low <= exact <= estimate.interval_high

    wanted = 1 - 1 / context.estimation.confidence
    checks.append(Check(suite, f"Chebyshev interval coverage ({repeats} seeds)", f">= {wanted:.3f}",
                        f"{covered / repeats:.3f}", covered / repeats >= wanted))

    return checks


def _metric_axioms(distances: np.ndarray, equal: np.ndarray) -> int:
    """ Axiom violations of a distance matrix over its index set """
    violations = int(np.sum((distances <= EXACT_TOLERANCE) != equal))
    violations += int(np.sum(np.abs(distances - distances.T) > EXACT_TOLERANCE))

    for a in range(len(distances)):
        via = distances[a][:, None] + distances
        violations += int(np.sum(distances[a][None, :] > via + EXACT_TOLERANCE))

    return violations


def _generalized(context: RunContext, rng: np.random.Generator) -> List[Check]:
    suite = "generalized"
    orders = all_partial_orders(OutcomeSpace(["a", "b", "c", "d"]))
    heights = np.array([exact_heights(order, context.caps.count_cap) for order in orders])

    gaps = heights[:, None, :] - heights[None, :, :]
    equal = np.all(np.abs(gaps) <= EXACT_TOLERANCE, axis=-1)

    checks = []
    for name, distances in (("footrule", 0.5 * np.abs(gaps).sum(axis=-1)),
                            ("euclidean", np.sqrt(np.square(gaps).sum(axis=-1)))):
        violations = _metric_axioms(distances, equal)
        checks.append(Check(suite, f"generalized {name} metric axioms over {len(orders)} partial orders",
                            "0 violations", f"{violations} violations", violations == 0))

    antichain = PartialPreferenceOrder.vacuous(OutcomeSpace(["a", "b", "c"]))
    chain = parse_partial_order("a < b < c", antichain.space)
    config, exact = context.estimation, EvaluationMode.exact
    checks.append(_near(suite, "generalized footrule, antichain vs chain", 1,
                        generalized_footrule(antichain, chain, config, exact).value, EXACT_TOLERANCE))
    checks.append(_near(suite, "generalized euclidean, antichain vs chain", math.sqrt(2),
                        generalized_euclidean(antichain, chain, config, exact).value, EXACT_TOLERANCE))

    return checks


def _elicitation(context: RunContext, rng: np.random.Generator) -> List[Check]:
    suite = "elicitation"
    fixtures, cases, outcomes, budget = 20, 10, 12, 40

    widening = 0
    isolated = 0
    for fixture in range(fixtures):
        space = _space(outcomes)
        permutations = OrderedDict()
        while len(permutations) < cases:
            permutations.setdefault(tuple(int(i) for i in rng.permutation(outcomes)), None)

        cb = CaseBase(space)
        for index, permutation in enumerate(permutations):
            cb.add(f"case{index + 1}", WeakOrder(space, ([i] for i in permutation)))

        target = f"case{int(rng.integers(cases)) + 1}"
        config = context.estimation._replace(seed=derive_seed(context.estimation.seed, fixture))
        log = run_elicitation(cb.order(target), cb, budget, MetricKind.probabilistic, config,
                              ClosenessPolicy.conservative, context.sampler, context.caps, context.logger)

        sizes = [len(cb)] + [len(step.closest) for step in log.steps]
        widening += any(later > earlier for earlier, later in zip(sizes, sizes[1:]))
        equivalent = frozenset(name for name in cb.names() if cb.order(name) == cb.order(target))
        isolated += log.final_closest == equivalent

    return [
        Check(suite, f"closest set never grows ({fixtures} fixtures)", "0 fixtures", f"{widening} fixtures",
              widening == 0),
        Check(suite, f"closest set ends at the target's class within {budget} queries", f"{fixtures} fixtures",
              f"{isolated} fixtures", isolated == fixtures)
    ]


def _chebyshev(context: RunContext, rng: np.random.Generator) -> List[Check]:
    return [
        Check("chebyshev", f"sample size for c={c}, tau={tau}, epsilon={epsilon}", str(expected),
              str(chebyshev_sample_size(c, tau, epsilon)), chebyshev_sample_size(c, tau, epsilon) == expected)
        for c, tau, epsilon, expected in ((100, 1, 0.1, 40000), (2, 1, 1, 8), (10, 0.5, 0.05, 8000))
    ]


SUITES: Dict[str, Suite] = OrderedDict([
    ("orders",      _worked_orders),
    ("utilities",   _worked_utilities),
    ("prospects",   _sampled_utilities),
    ("props",       _props),
    ("linext",      _linext),
    ("sampler",     _sampler),
    ("estimator",   _estimator),
    ("generalized", _generalized),
    ("elicitation", _elicitation),
    ("chebyshev",   _chebyshev)
])

# Alternative names of the worked-value suites
SUITE_ALIASES: Dict[str, str] = {
    "example1": "orders",
    "example2": "utilities",
    "example3": "prospects"
}


def suite_names(requested: Optional[Sequence[str]]) -> List[str]:
    """
    Canonical suite names for a request, aliases resolved and repeats
    dropped; unknown names are kept, for the caller to report

    @param   requested  Requested names (None for all, in registry order)
    @return  Suite names (list)
    """
    names = [SUITE_ALIASES.get(name, name) for name in requested or SUITES]
    return list(OrderedDict.fromkeys(names))


def run_suites(names: Optional[Sequence[str]], context: RunContext) -> List[Check]:
    """
    Run verification suites; each draws from its own random stream, so a
    suite's outcome does not depend on which others run

    @param   names    Suite names (None for all, in registry order)
    @param   context  Run context
    @return  Checks, in suite order
    """
    keys = {name: index for index, name in enumerate(SUITES)}
    checks: List[Check] = []

    for name in names or list(SUITES):
        if context.logger:
            context.logger.info(f"Running {name} checks")

        checks.extend(SUITES[name](context, stream(context.estimation.seed, keys[name])))

    return checks
