"""Monte Carlo sweeps over an ``(n, p)`` grid."""

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Tuple

from loguru import logger
from pydantic import ValidationError

from src.colouring.constructive import constructive_set_colouring
from src.colouring.greedy import greedy_proper_colouring, largest_first_order
from src.colouring.verify import is_set_colouring
from src.core.config import Config
from src.defs.colouring import ConstructiveParams
from src.defs.exceptions import ConfigError, DomainError, InfeasibleError, ParseError
from src.defs.experiment import CSV_SCHEMA_TAG, ExperimentConfig, ExperimentRecord
from src.graphs.gnp import sample_gnp
from src.harness.classifier import important_colour_classifier
from src.harness.seeds import trial_seed
from src.solver.chromatic import chromatic_number, greedy_clique
from src.solver.set_chromatic import set_chromatic_number
from src.theory.parameters import theorem_envelope
from src.utils import decode_utf8, fmt_float

#: Keys whose values are comma-separated lists.
LIST_KEYS = ("n_grid", "p_grid")


def load_experiment_config(path: Path | str) -> ExperimentConfig:
    """Read a flat ``key = value`` file; ``#`` starts a comment line.

    Raises:
        ConfigError: On malformed lines, repeated keys, unknown or missing keys, or
            invalid values.
    """
    values: Dict[str, object] = {}
    try:
        text = decode_utf8(Path(path).read_bytes())
    except ParseError as e:
        raise ConfigError(str(e)) from e
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = (part.strip() for part in line.partition("="))
        if not sep or not key:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        if key in values:
            raise ConfigError(f"line {lineno}: repeated key {key!r}")
        values[key] = [v.strip() for v in value.split(",") if v.strip()] if key in LIST_KEYS else value
    try:
        return ExperimentConfig.model_validate(values)
    except ValidationError as e:
        raise ConfigError(f"invalid experiment config {path}: {e}") from e


def run_trial(
    n: int, p: float, seed: int, omega: int, exact_cutoff: int, config: Optional[Config] = None
) -> ExperimentRecord:
    """Sample one graph and evaluate every colouring and bound on it."""
    config = config or Config()
    g = sample_gnp(n, p, seed)
    envelope = theorem_envelope(n, p, config=config)

    constructive_colours: Optional[int] = None
    constructive_valid = False
    important = unimportant = None
    try:
        colouring = constructive_set_colouring(g, ConstructiveParams(omega=omega, p=p))
    except (InfeasibleError, DomainError) as e:
        logger.warning("Constructive colouring infeasible for n={}, p={}: {}", n, p, e)
    else:
        constructive_colours = colouring.k
        constructive_valid = is_set_colouring(g, colouring).valid
        partition = important_colour_classifier(colouring, n, p)
        important, unimportant = len(partition.important), len(partition.unimportant)

    greedy_chi = greedy_proper_colouring(g, largest_first_order(g)).k

    exact_chi = exact_chis = None
    if n <= exact_cutoff:
        chi = chromatic_number(g, config=config, allow_large=True)
        exact_chi = chi.value
        chis = set_chromatic_number(g, config=config, allow_large=True)
        exact_chis = chis.value
    if exact_chi is not None:
        trivial_lower, trivial_upper = math.log2(exact_chi) + 1.0, float(exact_chi)
    else:
        trivial_lower = math.log2(len(greedy_clique(g))) + 1.0
        trivial_upper = float(greedy_chi)

    return ExperimentRecord(
        n=n,
        p=p,
        seed=seed,
        constructive_colours=constructive_colours,
        constructive_valid=constructive_valid,
        greedy_chi=greedy_chi,
        exact_chi=exact_chi,
        exact_chis=exact_chis,
        envelope_lower=envelope.lower,
        envelope_upper=envelope.upper,
        trivial_lower=trivial_lower,
        trivial_upper=trivial_upper,
        important_colours=important,
        unimportant_colours=unimportant,
    )


def _run_task(task: Tuple[int, float, int, int, int, Config]) -> ExperimentRecord:
    return run_trial(*task)


def experiment_tasks(
    cfg: ExperimentConfig, config: Config
) -> List[Tuple[int, float, int, int, int, Config]]:
    """Trials in output order: ``n`` outermost, then ``p``, then trial index."""
    tasks = []
    cell = 0
    for n in cfg.n_grid:
        for p in cfg.p_grid:
            for trial in range(cfg.trials):
                seed = trial_seed(cfg.seed_base, cell, trial)
                tasks.append((n, p, seed, cfg.omega, cfg.exact_cutoff, config))
            cell += 1
    return tasks


def run_experiment(cfg: ExperimentConfig, *, config: Optional[Config] = None) -> List[ExperimentRecord]:
    """Run every trial of the sweep; rows come back in task order for any worker count."""
    config = config or Config()
    tasks = experiment_tasks(cfg, config)
    logger.info("Running {} trials with {} worker(s)", len(tasks), config.workers)
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as executor:
            return list(executor.map(_run_task, tasks))
    return [_run_task(task) for task in tasks]


def _cell(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return fmt_float(value)
    return str(value)


def records_csv(records: Iterable[ExperimentRecord]) -> str:
    """CSV with the schema tag line; an empty ``constructive_colours`` marks infeasible."""
    out = io.StringIO()
    out.write(CSV_SCHEMA_TAG + "\n")
    writer = csv.writer(out, lineterminator="\n")
    fields = list(ExperimentRecord.model_fields)
    writer.writerow(fields)
    for record in records:
        writer.writerow([_cell(getattr(record, field)) for field in fields])
    return out.getvalue()


def write_records(records: Iterable[ExperimentRecord], path: Path | str) -> Path:
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(records_csv(records))
    logger.info("Wrote {}", out)
    return out
