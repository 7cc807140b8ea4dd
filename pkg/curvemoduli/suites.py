"""
Randomized and exhaustive property suites.

Every trial draws its instances from a numpy Generator seeded with
(seed, d, trial), so a single failing trial can be replayed on its own and
the report does not depend on how trials were distributed over workers.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Tuple

from .blowup import (
    Automorphism,
    common_zero_on_D1,
    is_r_bundle,
    normal_direction,
    phi,
    r_bundle_equivalent,
    restrict_to_D0,
    support_curve,
    verify_equivalence,
)
from .exactalg import Form, dring_redexes, dring_reduce, dring_rewrite
from .exceptions import MalformedInputError
from .fibration import (
    GroupElement,
    act,
    check_degree,
    det_of,
    dimension_report,
    hilbert_from_resolution,
    local_section,
    nu,
    reduced_slopes,
    same_fiber,
    stability_inequality,
    stabilizer_is_scalar,
)
from .logger import logger
from .plane import Curve, common_zero, is_singular_point, make_pair
from .sampling import Sampler, seed_for
from .singularlocus import (
    TangentVector,
    is_normalized,
    is_singular_sheaf,
    jacobian,
    jacobian_rank,
    normalize,
    residue,
    tangent_contains,
)

EXHAUSTIVE_MAX_DEGREE = 12
MAX_H0Q = 20


class Failures:
    """Collects counterexamples of one trial."""

    def __init__(self) -> None:
        self.records: List[Dict[str, Any]] = []

    def expect(self, ok: bool, check: str, **counterexample: Any) -> None:
        if not ok:
            self.records.append({"check": check, "counterexample": counterexample})


CheckFn = Callable[[Sampler, int, Failures], None]


@dataclass(frozen=True)
class Suite:
    name: str
    check: CheckFn
    exhaustive: bool = False


@dataclass
class SuiteReport:
    suite: str
    degree: int
    seed: int
    trials: int
    failures: List[Dict[str, Any]] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> Dict[str, Any]:
        payload = asdict(self)
        payload["passed"] = self.passed
        return payload

    @classmethod
    def from_json(cls, raw: Any) -> "SuiteReport":
        try:
            return cls(
                suite=str(raw["suite"]),
                degree=int(raw["degree"]),
                seed=int(raw["seed"]),
                trials=int(raw["trials"]),
                failures=list(raw.get("failures", [])),
                elapsed_ms=int(raw.get("elapsed_ms", 0)),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise MalformedInputError("suite report", str(e)) from e


# ---------- Suites ----------
def check_algebra(sampler: Sampler, d: int, failures: Failures) -> None:
    f = sampler.form(sampler.index(4))
    g, h = sampler.form(d - 1), sampler.form(d - 1)
    failures.expect((g + h) * f == g * f + h * f, "distributivity", f=str(f), g=str(g), h=str(h))
    failures.expect(f * g == g * f, "commutativity", f=str(f), g=str(g))
    failures.expect((f * g) * h == f * (g * h), "associativity", f=str(f), g=str(g), h=str(h))

    k = 1 + sampler.index(d + 2)
    e = sampler.form(k)
    euler = Form.zero(k)
    for i in range(3):
        euler = euler + Form.variable(i) * e.partial(i)
    failures.expect(euler == e.scale(k), "euler", f=str(e))

    p = sampler.point()
    failures.expect(
        (f * g).evaluate(p.coords) == f.evaluate(p.coords) * g.evaluate(p.coords),
        "evaluation",
        f=str(f),
        g=str(g),
        point=p.to_json(),
    )

    b = sampler.biform(1 + sampler.index(3), 1 + sampler.index(3))
    reduced = dring_reduce(b)
    failures.expect(not dring_redexes(reduced.value), "normal-form", b=b.to_json())
    # single steps in a random order must end at the same normal form
    stepped = b
    steps: List[str] = []
    while True:
        redexes = dring_redexes(stepped)
        if not redexes:
            break
        exps, rule = redexes[sampler.index(len(redexes))]
        steps.append(rule)
        stepped = dring_rewrite(stepped, exps, rule)
    failures.expect(stepped == reduced.value, "confluence", b=b.to_json(), steps=steps)
    c = sampler.biform(1 + sampler.index(2), 1 + sampler.index(2))
    failures.expect(dring_reduce(b * c) == reduced * dring_reduce(c), "reduction-multiplicative", b=b.to_json())


def check_plane(sampler: Sampler, d: int, failures: Failures) -> None:
    pair = sampler.pair(d)
    scaled = make_pair(pair.curve.f.scale(sampler.nonzero()), pair.point)
    failures.expect(scaled == pair, "scalar-invariance", pair=pair.to_json())
    failures.expect(
        is_singular_point(scaled.curve, scaled.point) == is_singular_point(pair.curve, pair.point),
        "singularity-scalar-invariance",
        pair=pair.to_json(),
    )

    z1, z2 = sampler.independent_linear_forms()
    p = common_zero(z1, z2)
    failures.expect(
        not z1.evaluate(p.coords) and not z2.evaluate(p.coords),
        "common-zero",
        z1=z1.to_json(),
        z2=z2.to_json(),
    )


def check_section(sampler: Sampler, d: int, failures: Failures) -> None:
    pair = sampler.pair(d)
    failures.expect(nu(local_section(pair)) == pair, "section", pair=pair.to_json())

    A = sampler.matrix_x(d)
    e = sampler.group_element(d)
    moved = act(e, A)
    failures.expect(nu(moved) == nu(A), "nu-invariance", A=A.to_json(), e=e.to_json())
    witness = same_fiber(A, moved)
    failures.expect(
        witness is not None and act(witness, A) == moved,
        "fiber-completeness",
        A=A.to_json(),
        e=e.to_json(),
    )
    lam = sampler.nonzero()
    failures.expect(act(GroupElement.scalar(d, lam), A) == A, "scalar-action", A=A.to_json(), lam=str(lam))
    failures.expect(act(e.inverse(), moved) == A, "inverse", A=A.to_json(), e=e.to_json())
    other = sampler.group_element(d)
    failures.expect(
        act(other.compose(e), A) == act(other, moved),
        "composition",
        A=A.to_json(),
        e=e.to_json(),
    )

    B = sampler.matrix_x(d)
    witness = same_fiber(A, B)
    if witness is None:
        failures.expect(nu(A) != nu(B), "fiber-soundness", A=A.to_json(), B=B.to_json())
    else:
        failures.expect(act(witness, A) == B, "fiber-soundness", A=A.to_json(), B=B.to_json())

    failures.expect(stabilizer_is_scalar(A), "stabilizer", A=A.to_json())


def check_singular(sampler: Sampler, d: int, failures: Failures) -> None:
    A = sampler.matrix_x(d) if sampler.index(2) else sampler.matrix_xprime(d)
    failures.expect(
        is_singular_sheaf(A) == is_singular_point(Curve(A.det()), A.point),
        "singular-agreement",
        A=A.to_json(),
    )
    e = sampler.group_element(d)
    failures.expect(is_singular_sheaf(act(e, A)) == is_singular_sheaf(A), "orbit-invariance", A=A.to_json())

    S = sampler.matrix_xprime(d)
    failures.expect(jacobian_rank(S) == 2, "jacobian-rank", A=S.to_json())

    normalization = normalize(S)
    N = normalization.result
    failures.expect(
        is_normalized(N) and is_singular_sheaf(N) and nu(N).point.coords == (1, 0, 0),
        "normalized",
        A=S.to_json(),
    )
    failures.expect(normalize(N).result == N, "normalize-idempotent", A=N.to_json())

    J = jacobian(N)
    count = TangentVector.coordinate_count(d)
    vectors = [TangentVector.from_coordinates(d, [Fraction(int(i == j)) for j in range(count)]) for i in range(count)]
    vectors.append(sampler.tangent_vector(d))
    for B in vectors:
        coords = B.coordinates()
        in_kernel = all(sum((j * c for j, c in zip(row, coords)), Fraction(0)) == 0 for row in J)
        failures.expect(in_kernel == (residue(N, B) == (0, 0)), "kernel-agreement", A=N.to_json(), B=B.to_json())

    T = sampler.tangent_to_xprime(S)
    failures.expect(residue(N, normalization.transport(T)) == (0, 0), "transport-tangent", A=S.to_json(), B=T.to_json())
    W = sampler.tangent_vector(d)
    failures.expect(
        tangent_contains(S, W) == (residue(N, normalization.transport(W)) == (0, 0)),
        "transport-agreement",
        A=S.to_json(),
        B=W.to_json(),
    )


def check_blowup(sampler: Sampler, d: int, failures: Failures) -> None:
    A = sampler.normalized_xprime(d)
    tangent = bool(sampler.index(2))
    B = sampler.tangent_to_xprime(A) if tangent else sampler.normal_to_xprime(A)
    matrix = phi(A, B)

    failures.expect(restrict_to_D0(matrix) == A.rows, "restrict-D0", A=A.to_json(), B=B.to_json())
    r_bundle = is_r_bundle(A, B)
    failures.expect(r_bundle == (not tangent_contains(A, B)), "r-bundle-criterion", A=A.to_json(), B=B.to_json())
    failures.expect(r_bundle != tangent, "r-bundle-sample", A=A.to_json(), B=B.to_json())
    failures.expect((common_zero_on_D1(matrix) is None) == r_bundle, "common-zero-D1", A=A.to_json(), B=B.to_json())

    support = support_curve(matrix)
    failures.expect(support.bidegree == (d - 2, 2), "support-bidegree", A=A.to_json(), B=B.to_json())
    failures.expect(support.restrict_to_D0() == det_of(A), "support-D0", A=A.to_json(), B=B.to_json())


def check_rbundle_equiv(sampler: Sampler, d: int, failures: Failures) -> None:
    A = sampler.normalized_xprime(d)
    B1 = sampler.normal_to_xprime(A)
    alpha = sampler.nonzero()
    B2 = B1.scale(alpha) + sampler.tangent_to_xprime(A)

    aut = r_bundle_equivalent(A, B1, B2)
    failures.expect(
        aut is not None and aut.alpha == alpha and verify_equivalence(A, B1, B2, aut),
        "equivalence-completeness",
        A=A.to_json(),
        B1=B1.to_json(),
        B2=B2.to_json(),
    )

    B3 = sampler.normal_to_xprime(A)
    if normal_direction(A, B3) != normal_direction(A, B1):
        failures.expect(
            r_bundle_equivalent(A, B1, B3) is None,
            "equivalence-soundness",
            A=A.to_json(),
            B1=B1.to_json(),
            B3=B3.to_json(),
        )

    failures.expect(r_bundle_equivalent(A, B1, B1) == Automorphism.identity(), "reflexivity", A=A.to_json())
    back = r_bundle_equivalent(A, B2, B1)
    failures.expect(back is not None and back.alpha == 1 / alpha, "symmetry", A=A.to_json(), B1=B1.to_json())
    alpha2 = sampler.nonzero()
    B4 = B2.scale(alpha2) + sampler.tangent_to_xprime(A)
    chained = r_bundle_equivalent(A, B1, B4)
    failures.expect(
        chained is not None and chained.alpha == alpha * alpha2,
        "transitivity",
        A=A.to_json(),
        B1=B1.to_json(),
        B4=B4.to_json(),
    )


def check_stability(sampler: Sampler, d: int, failures: Failures) -> None:
    for degree in range(3, max(d, EXHAUSTIVE_MAX_DEGREE) + 1):
        for s in range(1, degree):
            for h0Q in range(MAX_H0Q + 1):
                holds = stability_inequality(degree, s, h0Q)
                p_e, p_i = reduced_slopes(degree, s, h0Q)
                failures.expect(holds, "stability", d=degree, s=s, h0Q=h0Q)
                failures.expect(holds == (p_e < p_i), "reduced-slopes", d=degree, s=s, h0Q=h0Q)


def check_numerics(sampler: Sampler, d: int, failures: Failures) -> None:
    for degree in range(3, max(d, EXHAUSTIVE_MAX_DEGREE) + 1):
        poly = hilbert_from_resolution(degree)
        expected = (degree, degree * (3 - degree) // 2 + 1)
        failures.expect((poly.a, poly.b) == expected, "hilbert", d=degree, got=poly.to_json())
        dims = dimension_report(degree)
        failures.expect(dims.dim_X == degree * degree + degree + 6, "dim-X", d=degree)
        failures.expect(dims.dim_X - (dims.dim_G - 1) == dims.dim_M, "principal-bundle", d=degree)
        failures.expect(dims.dim_simpson == degree * degree + 1, "dim-simpson", d=degree)
        failures.expect(dims.codim_simpson == dims.N - 3 * degree, "codim-simpson", d=degree)


SUITES: Dict[str, Suite] = {
    suite.name: suite
    for suite in (
        Suite("algebra", check_algebra),
        Suite("plane", check_plane),
        Suite("section", check_section),
        Suite("singular", check_singular),
        Suite("blowup", check_blowup),
        Suite("rbundle-equiv", check_rbundle_equiv),
        Suite("stability", check_stability, exhaustive=True),
        Suite("numerics", check_numerics, exhaustive=True),
    )
}


# ---------- Runner ----------
def run_trial(task: Tuple[str, int, int, int]) -> List[Dict[str, Any]]:
    """Run one trial; module level so that worker processes can pickle it."""
    name, d, seed, trial = task
    failures = Failures()
    try:
        SUITES[name].check(Sampler(seed_for(seed, d, trial)), d, failures)
    except Exception as e:
        failures.records.append({"check": "exception", "counterexample": {"error": f"{type(e).__name__}: {e}"}})
    for record in failures.records:
        record["trial"] = trial
        logger.debug(f"Suite {name} trial {trial} failed {record['check']}")
    return failures.records


def run_suite(name: str, d: int, seed: int, trials: int, workers: int = 1) -> SuiteReport:
    if name not in SUITES:
        raise MalformedInputError("suite", f"unknown suite {name!r}, expected one of {', '.join(SUITES)}")
    check_degree(d)
    if SUITES[name].exhaustive:
        trials = 1
    tasks = [(name, d, seed, trial) for trial in range(trials)]

    start = time.perf_counter()
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_trial, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    else:
        results = [run_trial(task) for task in tasks]
    elapsed_ms = int((time.perf_counter() - start) * 1000)

    failures = [record for records in results for record in records]
    return SuiteReport(name, d, seed, trials, failures, elapsed_ms)
