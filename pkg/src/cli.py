"""Entry point for the command line interface."""

import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, List, Optional

import typer
from loguru import logger
from pydantic import ValidationError
from typing_extensions import Annotated

from src.bounds.chernoff import chernoff_binomial_check
from src.bounds.collision import (
    collision_probability,
    collision_probability_triple,
    simulate_collision_frequency,
)
from src.bounds.hoelder import hoelder_ratio_check
from src.bounds.suen import block_suen_check, suen_bound
from src.colouring.colouring_file import read_colouring, write_colouring
from src.colouring.constructive import constructive_set_colouring
from src.colouring.verify import is_proper_colouring, is_set_colouring
from src.core.config import Config, settings
from src.defs.bounds import CollisionEstimate, SuenInputs
from src.defs.colouring import ConstructiveParams
from src.defs.enums import SolveMode
from src.defs.exceptions import ParameterError, ParseError
from src.graphs.edge_list import read_edge_list, write_edge_list
from src.graphs.gnp import sample_gnp
from src.harness.domination import domination_check, domination_csv
from src.harness.experiment import load_experiment_config, run_experiment, write_records
from src.harness.figures import emit_figures
from src.solver.chromatic import chromatic_number
from src.solver.set_chromatic import set_chromatic_number
from src.theory.parameters import theory_point
from src.theory.zigzag import zigzag_csv, zigzag_table
from src.utils import decode_utf8

app = typer.Typer(no_args_is_help=True)
theory_app = typer.Typer(no_args_is_help=True, help="Parameter functions and bound envelopes.")
color_app = typer.Typer(no_args_is_help=True, help="Explicit set colourings.")
bounds_app = typer.Typer(no_args_is_help=True, help="Probabilistic bound evaluators.")
experiment_app = typer.Typer(no_args_is_help=True, help="Monte Carlo experiments.")
app.add_typer(theory_app, name="theory")
app.add_typer(color_app, name="color")
app.add_typer(bounds_app, name="bounds")
app.add_typer(experiment_app, name="experiment")

#: Exit code for invalid parameters and malformed input files.
EXIT_PARAMETER = 2
#: Exit code for file system errors.
EXIT_IO = 3

#: Handler id of the stderr sink; 0 is loguru's default handler.
_stderr_sink: Optional[int] = 0


def _configure_logging(debug: bool) -> None:
    global _stderr_sink
    if _stderr_sink is not None:
        try:
            logger.remove(_stderr_sink)
        except ValueError:
            pass
    _stderr_sink = logger.add(sys.stderr, level="DEBUG" if debug else "INFO")


@contextmanager
def _exit_codes() -> Iterator[None]:
    """Map library errors onto exit codes."""
    try:
        yield
    except (ParameterError, ParseError, ValidationError) as e:
        logger.error("Error occurred: {}", e)
        raise typer.Exit(EXIT_PARAMETER)
    except OSError as e:
        logger.error("I/O error: {}", e)
        raise typer.Exit(EXIT_IO)


def _read_text(path: Path) -> str:
    return decode_utf8(path.read_bytes())


def _emit(text: str, output: Optional[Path]) -> None:
    """Write ``text`` to ``output`` or stdout."""
    if output is None:
        typer.echo(text, nl=False)
    else:
        output.write_text(text)
        logger.info("Wrote {}", output)


def _parse_list(value: str, cast):
    try:
        return [cast(v) for v in value.split(",") if v.strip()]
    except ValueError as e:
        raise ParameterError(f"cannot parse list {value!r}: {e}") from e


OutputOption = Annotated[
    Optional[Path], typer.Option("--output", "-o", help="Write to this file instead of stdout.")
]


@app.callback()
def main(
    debug: Annotated[bool, typer.Option("--debug", help="Enable debug logging.")] = False,
):
    """Set chromatic number of random graphs: theory, colourings, exact solvers and bounds."""
    _configure_logging(debug or settings.DEBUG)


@theory_app.command("table")
def theory_table(
    p_min: Annotated[float, typer.Option("--p-min")] = 0.01,
    p_max: Annotated[float, typer.Option("--p-max")] = 0.99,
    step: Annotated[float, typer.Option("--step")] = 0.001,
    n: Annotated[Optional[int], typer.Option("--n", help="Also report r_upper(n, p).")] = None,
    output: OutputOption = None,
):
    """Tabulate ell0(p), s(p) and r(p) as CSV."""
    with _exit_codes():
        _emit(zigzag_csv(zigzag_table(p_min, p_max, step, n)), output)


@theory_app.command("point")
def theory_point_cmd(
    n: Annotated[int, typer.Argument(help="Number of vertices.")],
    p: Annotated[float, typer.Argument(help="Edge probability.")],
):
    """Evaluate every parameter function and the bound envelope at one point, as JSON."""
    with _exit_codes():
        typer.echo(theory_point(n, p).model_dump_json())


@app.command()
def figures(
    out_dir: Annotated[Path, typer.Argument(help="Directory for the CSV tables.")],
    p_min: Annotated[float, typer.Option("--p-min")] = 0.01,
    p_max: Annotated[float, typer.Option("--p-max")] = 0.99,
    step: Annotated[float, typer.Option("--step")] = 0.001,
):
    """Write the r(p) and s(p) tables for plotting."""
    with _exit_codes():
        emit_figures(out_dir, p_min, p_max, step)


@app.command()
def sample(
    n: Annotated[int, typer.Argument(help="Number of vertices.")],
    p: Annotated[float, typer.Argument(help="Edge probability.")],
    seed: Annotated[int, typer.Option("--seed", "-s")] = 0,
    output: OutputOption = None,
):
    """Sample G(n, p) and print it as an edge list."""
    with _exit_codes():
        _emit(write_edge_list(sample_gnp(n, p, seed)), output)


@app.command()
def verify(
    graph: Annotated[Path, typer.Argument(help="Edge-list file.")],
    colouring: Annotated[Path, typer.Argument(help="Colouring file.")],
    proper: Annotated[
        bool, typer.Option("--proper", help="Check a proper colouring instead.")
    ] = False,
):
    """Check a colouring; prints VALID or INVALID u v for the first violated edge."""
    with _exit_codes():
        g = read_edge_list(_read_text(graph))
        c = read_colouring(_read_text(colouring))
        verdict = is_proper_colouring(g, c) if proper else is_set_colouring(g, c)
        typer.echo(str(verdict))


@app.command()
def solve(
    graph: Annotated[Path, typer.Argument(help="Edge-list file.")],
    mode: Annotated[SolveMode, typer.Option("--mode", "-m")] = SolveMode.Chis,
    limit: Annotated[Optional[int], typer.Option("--limit", help="Search budget in nodes.")] = None,
    witness: Annotated[
        Optional[Path], typer.Option("--witness", "-w", help="Write the witness colouring here.")
    ] = None,
    allow_large: Annotated[
        bool, typer.Option("--allow-large", help="Lift the size caps of the exact solvers.")
    ] = False,
):
    """Compute chi or chi_s exactly; prints the value, or bounds when the budget runs out."""
    with _exit_codes():
        g = read_edge_list(_read_text(graph))
        solver = chromatic_number if mode == SolveMode.Chi else set_chromatic_number
        result = solver(g, limit, allow_large=allow_large)
        if result.is_exact:
            typer.echo(str(result.value))
        else:
            logger.warning("Budget exhausted after {} nodes", result.nodes_explored)
            typer.echo(f"unknown {result.lower} {result.upper}")
        if witness is not None and result.witness is not None:
            witness.write_text(write_colouring(result.witness))
            logger.info("Wrote {}", witness)


@color_app.command("constructive")
def color_constructive(
    graph: Annotated[Path, typer.Argument(help="Edge-list file.")],
    p: Annotated[float, typer.Option("--p", help="Edge probability the graph was drawn with.")],
    omega: Annotated[int, typer.Option("--omega")] = settings.DEFAULT_OMEGA,
    output: OutputOption = None,
):
    """Build the block set colouring and report whether it is valid."""
    with _exit_codes():
        g = read_edge_list(_read_text(graph))
        c = constructive_set_colouring(g, ConstructiveParams(omega=omega, p=p))
        logger.info("Constructive colouring with {} colours: {}", c.k, is_set_colouring(g, c))
        _emit(write_colouring(c), output)


@bounds_app.command("chernoff")
def bounds_chernoff(
    mu: Annotated[float, typer.Option("--mu")],
    delta: Annotated[float, typer.Option("--delta")],
):
    """Chernoff tail bounds as JSON."""
    with _exit_codes():
        typer.echo(chernoff_binomial_check(mu, delta).model_dump_json())


@bounds_app.command("suen")
def bounds_suen(
    kappa: Annotated[
        Optional[str], typer.Option("--kappa", help="Comma-separated class sizes.")
    ] = None,
    p: Annotated[Optional[float], typer.Option("--p")] = None,
    pairs: Annotated[
        Optional[int], typer.Option("--pairs", help="Number of pairs in the family.")
    ] = None,
    max_deg: Annotated[Optional[float], typer.Option("--max-deg")] = None,
    block: Annotated[
        Optional[str],
        typer.Option("--block", help="n,p,k: the block colouring with k classes of size ell0."),
    ] = None,
):
    """Suen's bound on the probability that no pair collides, as JSON."""
    with _exit_codes():
        if block is not None:
            fields = _parse_list(block, float)
            if len(fields) != 3:
                raise ParameterError(f"--block needs n,p,k, got {block!r}")
            n, block_p, k = fields
            typer.echo(block_suen_check(int(n), block_p, int(k)).model_dump_json())
            return
        if kappa is None or p is None or pairs is None or max_deg is None:
            raise ParameterError("give --kappa, --p, --pairs and --max-deg, or --block")
        inputs = SuenInputs(kappa=_parse_list(kappa, int), p=p, pair_count=pairs, max_deg=max_deg)
        typer.echo(suen_bound(inputs).model_dump_json())


@bounds_app.command("hoelder")
def bounds_hoelder(
    x: Annotated[str, typer.Option("--x", help="Comma-separated values in [1/2, 1].")],
    beta: Annotated[
        Optional[str], typer.Option("--beta", help="Comma-separated weights; default all 1.")
    ] = None,
):
    """Both sides of the weighted ratio inequality, as JSON."""
    with _exit_codes():
        xs: List[float] = _parse_list(x, float)
        betas = _parse_list(beta, float) if beta is not None else [1.0] * len(xs)
        typer.echo(hoelder_ratio_check(xs, betas).model_dump_json())


@bounds_app.command("collision")
def bounds_collision(
    kappa: Annotated[str, typer.Option("--kappa", help="Comma-separated class sizes.")],
    p: Annotated[float, typer.Option("--p")],
    simulate: Annotated[
        int, typer.Option("--simulate", help="Also estimate by this many Monte Carlo trials.")
    ] = 0,
    seed: Annotated[int, typer.Option("--seed", "-s")] = 0,
    triple: Annotated[
        bool, typer.Option("--triple", help="Three vertices instead of two.")
    ] = False,
):
    """Probability that two (or three) vertices see the same colour classes, as JSON."""
    with _exit_codes():
        sizes = _parse_list(kappa, int)
        formula = collision_probability_triple if triple else collision_probability
        exact = formula(sizes, p)
        if simulate > 0:
            freq, stderr = simulate_collision_frequency(
                sizes, p, simulate, seed, vertices=3 if triple else 2
            )
            estimate = CollisionEstimate(probability=exact, frequency=freq, stderr=stderr)
        else:
            estimate = CollisionEstimate(probability=exact)
        typer.echo(estimate.model_dump_json())


@experiment_app.command("run")
def experiment_run(
    config_file: Annotated[Path, typer.Argument(help="Experiment config file.")],
    workers: Annotated[Optional[int], typer.Option("--workers", "-j")] = None,
):
    """Run a sweep and write its CSV to the configured output path."""
    with _exit_codes():
        cfg = load_experiment_config(config_file)
        config = Config(workers=workers) if workers is not None else Config()
        write_records(run_experiment(cfg, config=config), cfg.output_path)


@experiment_app.command("domination")
def experiment_domination(
    n: Annotated[int, typer.Option("--n")],
    p: Annotated[float, typer.Option("--p")],
    trials: Annotated[int, typer.Option("--trials")] = 100,
    seed: Annotated[int, typer.Option("--seed", "-s")] = 0,
    output: OutputOption = None,
):
    """Check that random sets of size ceil(2 ln n / p) dominate G(n, p)."""
    with _exit_codes():
        _emit(domination_csv(domination_check(n, p, trials, seed)), output)


if __name__ == "__main__":
    app()
