import json
import os
from pathlib import Path
from typing import Any, Callable, List, Optional, Tuple, no_type_check

import typer

from .blowup import (
    common_zero_on_D1,
    is_r_bundle,
    normal_direction,
    phi,
    r_bundle_equivalent,
)
from .exactalg import Form, scalar_to_json
from .exceptions import MalformedInputError, PreconditionError
from .fibration import (
    MatrixA,
    act,
    det_of,
    dimension_report,
    hilbert_from_resolution,
    local_section,
    nu,
    same_fiber,
)
from .logger import logger
from .plane import Curve, CurvePointPair, Point, gradient, is_singular_point
from .sampling import InstanceKind, instance_to_json, random_instances
from .singularlocus import (
    TangentVector,
    is_normalized,
    jacobian_rank,
    normalize,
    residue,
    singular_equations,
    tangent_contains,
)
from .suites import SUITES, run_suite

cli = typer.Typer(help="CurveModuli CLI - exact computations on the universal plane curve")

EXIT_MALFORMED = 2
EXIT_PRECONDITION = 3


def _effective_seed(seed: int) -> int:
    override = os.getenv("CURVEMODULI_SEED")
    if override is None:
        return seed
    try:
        return int(override)
    except ValueError as e:
        raise MalformedInputError("CURVEMODULI_SEED", f"not an integer: {override!r}") from e


def _emit(compute: Callable[[], Any]) -> None:
    """Run compute, print its JSON result, and map library errors to exit codes."""
    try:
        payload = compute()
    except MalformedInputError as e:
        logger.error(str(e))
        typer.echo(f"Error: {e}", err=True)
        raise typer.Exit(code=EXIT_MALFORMED)
    except PreconditionError as e:
        logger.error(str(e))
        typer.echo(f"Error: {e}", err=True)
        raise typer.Exit(code=EXIT_PRECONDITION)
    typer.echo(json.dumps(payload))


def _load_json(path: Path) -> Any:
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise MalformedInputError(str(path), e.strerror or str(e)) from e
    except json.JSONDecodeError as e:
        raise MalformedInputError(str(path), f"invalid JSON ({e.msg} at line {e.lineno})") from e


def _load_matrix(path: Path) -> MatrixA:
    return MatrixA.from_json(_load_json(path))


def _load_vector(path: Path) -> TangentVector:
    return TangentVector.from_json(_load_json(path))


def _parse_point(text: str) -> Point:
    """Accepts a JSON array or comma separated coordinates such as "1,0,-1/2"."""
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            return Point.from_json(json.loads(stripped))
        except json.JSONDecodeError as e:
            raise MalformedInputError("point", e.msg) from e
    return Point.from_json([part.strip() for part in stripped.split(",")])


def _normalized_inputs(
    A: MatrixA, vectors: List[TangentVector], auto_normalize: bool
) -> Tuple[MatrixA, List[TangentVector]]:
    if is_normalized(A) or not auto_normalize:
        return A, vectors
    normalization = normalize(A)
    logger.info("Matrix brought to the standard chart before building Phi")
    return normalization.result, [normalization.transport(B) for B in vectors]


MATRIX_OPTION = typer.Option(..., "--matrix", help="JSON file with a matrix A")
VECTOR_OPTION = typer.Option(..., "--vector", help="JSON file with a tangent vector B")
NORMALIZE_OPTION = typer.Option(False, "--normalize", help="Normalize A (and transport B) first")


@no_type_check
@cli.command()
def hilbert(degree: int = typer.Option(..., "--degree", "-d")) -> None:
    """Hilbert polynomial a*m + b of the sheaves parameterized by X"""
    _emit(lambda: hilbert_from_resolution(degree).to_json())


@no_type_check
@cli.command()
def dims(degree: int = typer.Option(..., "--degree", "-d")) -> None:
    """Dimension table of X, M, G and the loci inside them"""
    _emit(lambda: dimension_report(degree).to_json())


@no_type_check
@cli.command()
def det(matrix: Path = MATRIX_OPTION) -> None:
    """Determinant z1*q2 - z2*q1 of A"""
    _emit(lambda: det_of(_load_matrix(matrix)).to_json())


@no_type_check
@cli.command(name="nu")
def nu_command(matrix: Path = MATRIX_OPTION) -> None:
    """The curve-point pair (C, p) that A maps to"""
    _emit(lambda: nu(_load_matrix(matrix)).to_json())


@no_type_check
@cli.command()
def singular(matrix: Path = MATRIX_OPTION) -> None:
    """Whether A defines a singular sheaf, with the point-singularity check"""

    def compute() -> Any:
        A = _load_matrix(matrix)
        pair = nu(A)
        equations = singular_equations(A)
        return {
            "singular": equations.vanish,
            "equations": equations.to_json(),
            "point": pair.point.to_json(),
            "gradient": [scalar_to_json(c) for c in gradient(pair.curve, pair.point)],
            "singular_point": is_singular_point(pair.curve, pair.point),
        }

    _emit(compute)


@no_type_check
@cli.command()
def section(
    curve: Path = typer.Option(..., "--curve", help="JSON file with the curve equation"),
    point: str = typer.Option(..., "--point", help='Point as "x0,x1,x2" or a JSON array'),
) -> None:
    """A matrix A over the pair (C, p)"""

    def compute() -> Any:
        pair = CurvePointPair(Curve(Form.from_json(_load_json(curve))), _parse_point(point))
        return local_section(pair).to_json()

    _emit(compute)


@no_type_check
@cli.command(name="fiber-eq")
def fiber_eq(
    m1: Path = typer.Option(..., "--m1", help="JSON file with the first matrix"),
    m2: Path = typer.Option(..., "--m2", help="JSON file with the second matrix"),
) -> None:
    """Whether two matrices lie in the same fiber of nu, with a witness"""

    def compute() -> Any:
        A1, A2 = _load_matrix(m1), _load_matrix(m2)
        witness = same_fiber(A1, A2)
        if witness is not None and act(witness, A1) != A2:
            raise PreconditionError("fiber witness does not move the first matrix to the second")
        return {"same_fiber": witness is not None, "witness": witness.to_json() if witness else None}

    _emit(compute)


@no_type_check
@cli.command(name="normalize")
def normalize_command(matrix: Path = MATRIX_OPTION) -> None:
    """Bring a matrix of X' to the standard chart z1 = x1, z2 = x2"""
    _emit(lambda: normalize(_load_matrix(matrix)).to_json())


@no_type_check
@cli.command()
def tangent(matrix: Path = MATRIX_OPTION, vector: Path = VECTOR_OPTION) -> None:
    """Whether B is tangent to X' at A"""

    def compute() -> Any:
        A, B = _load_matrix(matrix), _load_vector(vector)
        payload = {"tangent": tangent_contains(A, B), "jacobian_rank": jacobian_rank(A)}
        if is_normalized(A):
            payload["residue"] = [scalar_to_json(r) for r in residue(A, B)]
        return payload

    _emit(compute)


@no_type_check
@cli.command(name="phi")
def phi_command(
    matrix: Path = MATRIX_OPTION, vector: Path = VECTOR_OPTION, auto_normalize: bool = NORMALIZE_OPTION
) -> None:
    """The matrix Phi(A, B) on the surface D(p)"""

    def compute() -> Any:
        A, (B,) = _normalized_inputs(_load_matrix(matrix), [_load_vector(vector)], auto_normalize)
        return phi(A, B).to_json()

    _emit(compute)


@no_type_check
@cli.command()
def rbundle(
    matrix: Path = MATRIX_OPTION, vector: Path = VECTOR_OPTION, auto_normalize: bool = NORMALIZE_OPTION
) -> None:
    """Whether Phi(A, B) presents an R-bundle"""

    def compute() -> Any:
        A, (B,) = _normalized_inputs(_load_matrix(matrix), [_load_vector(vector)], auto_normalize)
        if is_r_bundle(A, B):
            return {"r_bundle": True, "normal_direction": normal_direction(A, B).to_json(), "common_zero": None}
        zero = common_zero_on_D1(phi(A, B))
        return {"r_bundle": False, "normal_direction": None, "common_zero": zero.to_json() if zero else None}

    _emit(compute)


@no_type_check
@cli.command(name="rbundle-eq")
def rbundle_eq(
    matrix: Path = MATRIX_OPTION,
    v1: Path = typer.Option(..., "--v1", help="JSON file with the first tangent vector"),
    v2: Path = typer.Option(..., "--v2", help="JSON file with the second tangent vector"),
    auto_normalize: bool = NORMALIZE_OPTION,
) -> None:
    """Whether Phi(A, B1) and Phi(A, B2) are equivalent R-bundles"""

    def compute() -> Any:
        A, (B1, B2) = _normalized_inputs(_load_matrix(matrix), [_load_vector(v1), _load_vector(v2)], auto_normalize)
        aut = r_bundle_equivalent(A, B1, B2)
        return {"equivalent": aut is not None, "automorphism": aut.to_json() if aut else None}

    _emit(compute)


@no_type_check
@cli.command()
def check(
    suite: str = typer.Option("all", "--suite", help=f"One of: all, {', '.join(SUITES)}"),
    degree: int = typer.Option(3, "--degree", "-d"),
    seed: int = typer.Option(0, "--seed", min=0),
    trials: int = typer.Option(100, "--trials", min=1),
    workers: int = typer.Option(1, "--workers", min=1),
) -> None:
    """Run property suites and print their reports"""

    def compute() -> Any:
        effective = _effective_seed(seed)
        names = list(SUITES) if suite == "all" else [suite]
        reports = []
        for name in names:
            logger.info(f"Running suite {name} (d={degree}, seed={effective}, trials={trials})")
            report = run_suite(name, degree, effective, trials, workers)
            status = "passed" if report.passed else f"{len(report.failures)} failures"
            logger.info(f"Suite {name} {status} in {report.elapsed_ms} ms")
            reports.append(report.to_json())
        return reports if suite == "all" else reports[0]

    _emit(compute)


@no_type_check
@cli.command()
def sample(
    kind: InstanceKind = typer.Option(InstanceKind.X, "--kind"),
    degree: int = typer.Option(3, "--degree", "-d"),
    seed: int = typer.Option(0, "--seed", min=0),
    count: int = typer.Option(1, "--count", "-n", min=1),
) -> None:
    """Print seeded random instances"""
    _emit(lambda: [instance_to_json(i) for i in random_instances(kind, degree, _effective_seed(seed), count)])


if __name__ == "__main__":
    cli()
