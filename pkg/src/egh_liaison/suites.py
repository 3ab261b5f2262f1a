"""Seeded experiment suites shared by ``selftest`` and the acceptance tests.

Each suite returns a :class:`SuiteResult`.  ``failures`` are property
violations; ``genericity`` counts samples where a random choice was
unlucky (a construction gave up after its retries).  Those are reported
separately and never counted as passes.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .combinat import (
    CIType,
    TypeChain,
    lex_plus_powers,
    liaison_hf,
    predicted_chain_hf,
    tilde_gamma_chain,
    validate_multicomplex,
)
from .errors import EGHError, GenericityError, NotAchievableError
from .linkage import (
    direct_link,
    egh_pipeline,
    is_gorenstein_artinian,
    is_nonzerodivisor,
    minimal_containment_degrees,
    mod_linear_form,
    pfaffian_ideal,
    random_alternating_matrix,
)
from .linkage.pfaffian import random_form
from .polyalg import HilbertFunction, Ideal, MonomialIdeal, RingContext, colon, monomials_of_degree
from .polyalg.ring import unit_vector

DEFAULT_PRIME = 32003


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    passed_cases: int = 0
    failures: list = field(default_factory=list)
    genericity: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def genericity_rate(self) -> float:
        return len(self.genericity) / self.cases if self.cases else 0.0

    def fail(self, label: str, why: str) -> None:
        self.failures.append(f"{label}: {why}")

    def summary(self) -> str:
        s = f"{self.name}: {self.passed_cases}/{self.cases} passed"
        if self.genericity:
            s += f", {len(self.genericity)} genericity failures"
        if self.failures:
            s += f", {len(self.failures)} property failures"
        return s


def case_rng(seed: int, k: int) -> random.Random:
    return random.Random(seed * 1_000_003 + k)


# -- chains of types ----------------------------------------------------------

def nonincreasing_chains(n: int, max_entry: int, max_length: int):
    """Every chain of sorted types (length 1..max_length) that is componentwise nonincreasing."""
    types = [CIType(t) for t in itertools.combinations_with_replacement(range(1, max_entry + 1), n)]

    def extend(prefix):
        yield TypeChain(tuple(prefix))
        if len(prefix) < max_length:
            for t in types:
                if prefix[-1].dominates(t):
                    yield from extend(prefix + [t])

    for t in types:
        yield from extend([t])


def multicomplex_suite(ns=(2, 3), max_entry: int = 3, max_length: int = 3,
                       prime: int = DEFAULT_PRIME) -> SuiteResult:
    res = SuiteResult("multicomplex")
    for n in ns:
        ring = RingContext(n, characteristic=prime)
        for chain in nonincreasing_chains(n, max_entry, max_length):
            res.cases += 1
            label = f"n={n} chain={chain}"
            try:
                sets = tilde_gamma_chain(chain, ring)
            except AssertionError as exc:
                res.fail(label, str(exc))
                continue
            bad = [i for i, mc in enumerate(sets, 1) if not validate_multicomplex(mc.monomials)[0]]
            if bad:
                res.fail(label, f"not a multicomplex at index {bad}")
                continue
            got, want = sets[0].hilbert_function(), predicted_chain_hf(chain)
            if got != want:
                res.fail(label, f"counts {got} but liaison predicts {want}")
                continue
            res.passed_cases += 1
    return res


# -- Hilbert functions of links ------------------------------------------------

def random_artinian_ideal(ring: RingContext, rng: random.Random) -> Ideal:
    """Either generic forms or a monomial ideal with pure powers, small degrees."""
    n = ring.num_vars
    if rng.random() < 0.5:
        top = 3 if n == 3 else 4
        degrees = [rng.randint(1, top) for _ in range(n + rng.randint(1, 2))]
        return Ideal(ring, [random_form(ring, d, rng) for d in degrees])
    gens = [unit_vector(n, i, rng.randint(2, 4)) for i in range(n)]
    for _ in range(rng.randint(1, 3)):
        d = rng.randint(2, 4)
        gens.append(rng.choice(list(monomials_of_degree(n, d))))
    return MonomialIdeal(ring, gens).to_ideal()


def random_linkable_ideal(ring: RingContext, rng: random.Random, tries: int = 20) -> Ideal:
    """A proper Artinian ideal that is not itself a complete intersection."""
    for _ in range(tries):
        I = random_artinian_ideal(ring, rng)
        if I.is_artinian() and not I.is_unit() and not I.is_complete_intersection():
            return I
    raise GenericityError(f"no usable ideal drawn in {tries} tries")


def linked_hilbert_suite(count: int = 50, seed: int = 1, prime: int = DEFAULT_PRIME) -> SuiteResult:
    res = SuiteResult("linked-hilbert")
    linked = 0
    for k in range(count):
        rng = case_rng(seed, k)
        ring = RingContext(2 + k % 2, characteristic=prime)
        label = f"seed={seed} case={k}"
        res.cases += 1
        try:
            I = random_linkable_ideal(ring, rng)
            label += f" I={I}"
            e, _ = minimal_containment_degrees(I, ring.num_vars, rng=rng)
            # half the links are minimal, the rest use some higher degrees
            degrees = [d + (rng.randint(0, 1) if k % 4 >= 2 else 0) for d in e]
            J = Ideal(ring, [I.random_form(d, rng) for d in degrees])
            if not J.is_complete_intersection() or J.height() != ring.num_vars:
                raise GenericityError("link forms are not a regular sequence")
        except GenericityError as exc:
            res.genericity.append(f"{label}: {exc}")
            continue
        target = colon(J, I)
        want = liaison_hf(J.hilbert_function(), I.hilbert_function())
        got = target.hilbert_function()
        if got != want:
            res.fail(label, f"HF(J:I) = {got}, formula gives {want}")
            continue
        if not target.is_unit():
            linked += 1
            if colon(J, target) != I:
                res.fail(label, "J:(J:I) != I")
                continue
        res.passed_cases += 1
    res.notes["proper_links"] = linked
    return res


# -- Pfaffian samples ------------------------------------------------------------

def drop_by_two(counts) -> bool:
    """Counts at even positions fall by 2 per step until the final 3."""
    if counts[-1] != 3:
        return False
    even = list(counts[::2])
    for a, b in zip(even, even[1:]):
        if a > 3 and b != a - 2:
            return False
    return True


@dataclass
class PfaffianSample:
    case: int
    pipeline: bool
    odd: bool
    drop: bool
    types: list
    counts: list


def pfaffian_suite(count: int = 20, seed: int = 7, size: int = 5,
                   prime: int = DEFAULT_PRIME) -> SuiteResult:
    """Random ``size x size`` linear Pfaffian ideals in 3 variables through the pipeline.

    Per sample: the pipeline verdict, generator parity of every Gorenstein
    ideal met along the chain, and the drop of the counts by two.  The
    samples are kept in ``notes["samples"]``.
    """
    res = SuiteResult(f"pfaffian{size}")
    ring = RingContext(3, characteristic=prime)
    samples = res.notes["samples"] = []
    for k in range(count):
        rng = case_rng(seed, k)
        label = f"seed={seed} case={k}"
        res.cases += 1
        try:
            I = pfaffian_ideal(random_alternating_matrix(ring, size, rng))
            if not I.is_artinian() or not is_gorenstein_artinian(I):
                raise GenericityError("Pfaffian ideal is not Artinian Gorenstein")
            result = egh_pipeline(I, rng=rng)
        except GenericityError as exc:
            res.genericity.append(f"{label}: {exc}")
            continue
        except EGHError as exc:
            res.fail(label, f"{type(exc).__name__}: {exc}")
            continue
        counts = list(result.chain.generator_counts)
        gorenstein = [J for J in result.chain.ideals if is_gorenstein_artinian(J)]
        sample = PfaffianSample(
            k, result.passed,
            all(J.num_min_generators() % 2 == 1 for J in gorenstein),
            drop_by_two(counts), [str(t) for t in result.type_chain], counts)
        samples.append(sample)
        why = []
        if not sample.pipeline:
            why.append(f"checks failed {[c for c, ok in result.checks.items() if not ok]}")
        if not sample.odd:
            why.append("a Gorenstein ideal has an even number of generators")
        if not sample.drop:
            why.append("generator counts do not drop by two")
        if why:
            res.fail(label, "; ".join(why) + f"; chain {sample.types} counts {counts}")
            continue
        res.passed_cases += 1
    return res


# -- linear form descent -----------------------------------------------------------

def _height_two_ideal(ring: RingContext, rng: random.Random) -> Ideal:
    if rng.random() < 0.5:
        return Ideal(ring, [random_form(ring, rng.randint(1, 2), rng) for _ in range(2)])
    rows = [[random_form(ring, 1, rng) for _ in range(3)] for _ in range(2)]
    minors = [rows[0][a] * rows[1][b] - rows[0][b] * rows[1][a]
              for a, b in ((0, 1), (0, 2), (1, 2))]
    return Ideal(ring, minors)


def descent_suite(count: int = 20, seed: int = 11, prime: int = DEFAULT_PRIME) -> SuiteResult:
    res = SuiteResult("linear-form-descent")
    ring = RingContext(3, characteristic=prime)
    for k in range(count):
        rng = case_rng(seed, k)
        j = k % 3
        label = f"seed={seed} case={k} j={j}"
        res.cases += 1
        try:
            I1 = _height_two_ideal(ring, rng)
            if I1.height() != 2:
                raise GenericityError("drawn ideal does not have height 2")
            top = max(g.homogeneous_degree for g in I1.generators)
            J = Ideal(ring, [I1.random_form(top + 1, rng), I1.random_form(top + rng.randint(0, 1), rng)])
            if not J.is_complete_intersection() or J.height() != 2:
                raise GenericityError("link forms are not a regular sequence")
            step = direct_link(I1, J)
            g = random_form(ring, 1, rng)
            if not is_nonzerodivisor(J, g):
                raise GenericityError(f"{g} is a zero-divisor modulo J")
            out = mod_linear_form(I1, step.target, J, g, j)
        except GenericityError as exc:
            res.genericity.append(f"{label}: {exc}")
            continue
        except EGHError as exc:
            res.fail(label, f"{type(exc).__name__}: {exc}")
            continue
        if not all(out.identities.values()):
            res.fail(label, f"identities {out.identities}")
            continue
        res.passed_cases += 1
    return res


# -- lex-plus-powers against brute force ---------------------------------------

def order_ideal_hfs(e) -> set:
    """Hilbert functions of all monomial ideals of k[x1, x2] containing x1^e1, x2^e2.

    Brute force: every down-closed subset of the box is the standard set of
    exactly one such ideal.
    """
    box = list(itertools.product(range(e[0]), range(e[1])))
    out = set()
    for mask in range(1 << len(box)):
        chosen = {box[i] for i in range(len(box)) if mask >> i & 1}
        if not chosen:
            continue
        if all((a - 1, b) in chosen for a, b in chosen if a) and \
                all((a, b - 1) in chosen for a, b in chosen if b):
            counts = [0] * (e[0] + e[1] - 1)
            for a, b in chosen:
                counts[a + b] += 1
            out.add(HilbertFunction(tuple(counts)))
    return out


def lex_plus_powers_suite(types=((2, 2), (2, 3)), prime: int = DEFAULT_PRIME) -> SuiteResult:
    res = SuiteResult("lex-plus-powers")
    ring = RingContext(2, characteristic=prime)
    for e in types:
        socle = sum(e) - 2
        brute = order_ideal_hfs(e)
        achieved = set()
        ranges = [range(1, 2)] + [range(d + 2) for d in range(1, socle + 2)]
        for vec in itertools.product(*ranges):
            target = HilbertFunction(vec)
            res.cases += 1
            try:
                M = lex_plus_powers(e, target, ring)
            except NotAchievableError:
                res.passed_cases += 1
                continue
            hf = M.hilbert_function()
            if hf != target or not all(M.contains_power(i, ei) for i, ei in enumerate(e)):
                res.fail(f"e={e} target={target}", f"ideal {M} has HF {hf}")
                continue
            achieved.add(hf)
            res.passed_cases += 1
        if achieved != brute:
            res.fail(f"e={e}", f"lex-plus-powers reaches {len(achieved)} HFs, "
                     f"brute force finds {len(brute)}: "
                     f"only lpp {sorted(map(str, achieved - brute))}, "
                     f"only brute {sorted(map(str, brute - achieved))}")
        res.notes[str(CIType(e))] = len(brute)
    return res


def all_suites(prime: int = DEFAULT_PRIME) -> list:
    return [
        multicomplex_suite(prime=prime),
        linked_hilbert_suite(prime=prime),
        pfaffian_suite(prime=prime),
        pfaffian_suite(count=6, size=7, prime=prime),
        descent_suite(prime=prime),
        lex_plus_powers_suite(prime=prime),
    ]
