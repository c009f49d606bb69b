import pytest

from src.core.config import Config
from src.defs.exceptions import ConfigError
from src.defs.experiment import CSV_SCHEMA_TAG, ExperimentConfig
from src.harness.experiment import (
    experiment_tasks,
    load_experiment_config,
    records_csv,
    run_experiment,
    run_trial,
    write_records,
)
from src.harness.seeds import trial_seed

CONFIG_TEXT = """\
# small sweep
n_grid = 8, 9
p_grid = 0.5
trials = 3
omega = 1
seed_base = 11
exact_cutoff = 9
output_path = {output}
"""


@pytest.fixture
def experiment_config(tmp_path) -> ExperimentConfig:
    path = tmp_path / "sweep.conf"
    path.write_text(CONFIG_TEXT.format(output=tmp_path / "out.csv"))
    return load_experiment_config(path)


def test_load_experiment_config(experiment_config, tmp_path):
    assert experiment_config.n_grid == [8, 9]
    assert experiment_config.p_grid == [0.5]
    assert experiment_config.trials == 3
    assert experiment_config.omega == 1
    assert experiment_config.output_path == str(tmp_path / "out.csv")


@pytest.mark.parametrize(
    "text, message",
    [
        ("n_grid = 8\nbogus = 1\n", "invalid experiment config"),
        ("n_grid = 8\n", "invalid experiment config"),
        ("n_grid 8\n", "line 1"),
        ("trials = 1\ntrials = 2\n", "line 2: repeated key"),
    ],
)
def test_load_experiment_config_errors(tmp_path, text, message):
    path = tmp_path / "bad.conf"
    path.write_text(text)
    with pytest.raises(ConfigError, match=message):
        load_experiment_config(path)


def test_load_experiment_config_rejects_small_n(tmp_path):
    path = tmp_path / "bad.conf"
    path.write_text(CONFIG_TEXT.format(output="x.csv").replace("8, 9", "2"))
    with pytest.raises(ConfigError):
        load_experiment_config(path)


def test_experiment_tasks_order_and_seeds(experiment_config):
    tasks = experiment_tasks(experiment_config, Config())
    assert [(n, p) for n, p, *_ in tasks] == [(8, 0.5)] * 3 + [(9, 0.5)] * 3
    assert tasks[4][2] == trial_seed(11, 1, 1)


def test_run_experiment_sandwich(experiment_config):
    """Test that exact chi_s lies inside the trivial envelope on every row."""
    records = run_experiment(experiment_config)
    assert len(records) == 6
    for record in records:
        assert record.exact_chi is not None and record.exact_chis is not None
        assert record.trivial_lower <= record.exact_chis <= record.trivial_upper
        assert record.greedy_chi >= record.exact_chi
        assert record.constructive_colours is not None
        assert record.important_colours + record.unimportant_colours == record.constructive_colours


def test_run_trial_infeasible_row():
    """Test that infeasible constructive parameters give a marked row."""
    record = run_trial(8, 0.5, seed=1, omega=10, exact_cutoff=0)
    assert record.constructive_colours is None
    assert not record.constructive_valid
    assert record.exact_chi is None
    assert record.trivial_lower <= record.trivial_upper


def test_records_csv(experiment_config):
    text = records_csv(run_experiment(experiment_config))
    lines = text.splitlines()
    assert lines[0] == CSV_SCHEMA_TAG
    assert lines[1].split(",")[:3] == ["n", "p", "seed"]
    assert len(lines) == 2 + 6


def test_records_csv_infeasible_marker():
    lines = records_csv([run_trial(8, 0.5, seed=1, omega=10, exact_cutoff=0)]).splitlines()
    header = lines[1].split(",")
    row = lines[2].split(",")
    assert row[header.index("constructive_colours")] == ""
    assert row[header.index("constructive_valid")] == "false"


def test_run_experiment_deterministic(experiment_config, tmp_path):
    first = write_records(run_experiment(experiment_config), tmp_path / "a.csv").read_bytes()
    second = write_records(run_experiment(experiment_config), tmp_path / "b.csv").read_bytes()
    assert first == second


@pytest.mark.slow
def test_run_experiment_workers_same_output(experiment_config):
    serial = records_csv(run_experiment(experiment_config, config=Config(workers=1)))
    pooled = records_csv(run_experiment(experiment_config, config=Config(workers=2)))
    assert serial == pooled


@pytest.mark.slow
def test_run_experiment_exact_cell():
    """Test 50 trials at (n = 8, p = 1/2) against the trivial envelope."""
    cfg = ExperimentConfig(
        n_grid=[8], p_grid=[0.5], trials=50, omega=1, seed_base=3, exact_cutoff=8, output_path="x"
    )
    for record in run_experiment(cfg):
        assert record.trivial_lower <= record.exact_chis <= record.trivial_upper


@pytest.mark.slow
def test_run_experiment_constructive_cell():
    """Test 100 trials at (n = 1024, p = 1/2, omega = 10): at least 95 valid colourings."""
    cfg = ExperimentConfig(
        n_grid=[1024], p_grid=[0.5], trials=100, omega=10, seed_base=5, exact_cutoff=0, output_path="x"
    )
    records = run_experiment(cfg)
    assert sum(record.constructive_valid for record in records) >= 95
    assert all(record.constructive_colours == 30 for record in records)


def test_load_experiment_config_not_utf8(tmp_path):
    path = tmp_path / "bad.conf"
    path.write_bytes(b"trials = 3\nomega = \xff\n")
    with pytest.raises(ConfigError, match="line 2"):
        load_experiment_config(path)
