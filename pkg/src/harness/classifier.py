import math

from src.defs.colouring import Colouring
from src.defs.exceptions import ParameterError
from src.defs.experiment import ColourPartition


def important_colour_classifier(c: Colouring, n: int, p: float) -> ColourPartition:
    """Split colours ``1..k`` into important (class size ``<= 2 ln n / p``) and unimportant.

    Colours with an empty class count as important.
    """
    if n < 2 or not 0.0 < p < 1.0:
        raise ParameterError(f"needs n >= 2 and p in (0, 1), got n={n}, p={p}")
    threshold = 2.0 * math.log(n) / p
    important, unimportant = [], []
    for colour, size in enumerate(c.class_sizes().tolist(), start=1):
        (important if size <= threshold else unimportant).append(colour)
    return ColourPartition(threshold=threshold, important=important, unimportant=unimportant)
