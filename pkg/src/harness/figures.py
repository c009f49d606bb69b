"""Plot-ready tables of ``r(p)`` and ``s(p)``."""

from pathlib import Path
from typing import Dict, List

from loguru import logger

from src.defs.experiment import CSV_SCHEMA_TAG
from src.theory.zigzag import landmark_points, zigzag_csv, zigzag_rows, zigzag_table

#: Number of ``s = 1/2`` landmarks written next to the figures.
LANDMARKS = 6


def figure_tables(p_min: float, p_max: float, step: float) -> Dict[str, str]:
    """CSV text keyed by file name: ``r_vs_p.csv``, ``s_vs_p.csv`` and ``landmarks.csv``."""
    rows = zigzag_table(p_min, p_max, step)
    landmarks = zigzag_rows(landmark_points(LANDMARKS))
    return {
        "r_vs_p.csv": CSV_SCHEMA_TAG + "\n" + zigzag_csv(rows, ["p", "ell0", "r"]),
        "s_vs_p.csv": CSV_SCHEMA_TAG + "\n" + zigzag_csv(rows, ["p", "ell0", "s"]),
        "landmarks.csv": CSV_SCHEMA_TAG + "\n" + zigzag_csv(landmarks, ["p", "ell0", "s", "r"]),
    }


def emit_figures(
    out_dir: Path | str, p_min: float = 0.01, p_max: float = 0.99, step: float = 0.001
) -> List[Path]:
    """Write the figure tables into ``out_dir`` (created if missing)."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, text in figure_tables(p_min, p_max, step).items():
        path = out / name
        path.write_text(text)
        written.append(path)
        logger.info("Wrote {}", path)
    return written
