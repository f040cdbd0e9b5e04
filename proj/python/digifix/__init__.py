"""Digital topology fixed point toolkit.

Exact values (distances, moduli, multipliers) come back as
``fractions.Fraction`` when rational and as the raw JSON record otherwise.
"""

import json
from fractions import Fraction

from ._digifix import (
    BudgetExceeded,
    DigifixError,
    Image,
    Map,
    antipodal_map,
    approximate_fixed_points,
    claim_ids,
    continuous_selfmaps,
    cyclic_shift,
    eventually_constant_tail,
    example_4_2_image,
    example_4_2_map,
    find_homotopy,
    fixed_points,
    has_afpp,
    has_fpp,
    has_homotopy_fixed_point_property,
    homotopy_class,
    image,
    image_from_json,
    image_with_edges,
    interval,
    is_connected,
    is_continuous,
    is_one_step_homotopic,
    is_rigid,
    map_from_json,
    mf,
    normal_product,
    picture,
    punctured_square,
    simple_closed_curve,
    singleton,
    wedge_of_loops,
    xf,
)
from . import _digifix


def exact(record):
    """Fraction for a rational record, the record itself for a surd."""
    if record is None or "terms" in record or "sqrt" in record:
        return record
    return Fraction(int(record["num"]), int(record["den"]))


def distance(x, i, j, metric="l1"):
    return exact(json.loads(_digifix.distance(x, i, j, metric)))


def diameter(x, metric="l1"):
    return exact(json.loads(_digifix.diameter(x, metric)))


def min_positive_distance(x, metric="l1"):
    return exact(json.loads(_digifix.min_positive_distance(x, metric)))


def classify(f, metric="l1", alpha=None):
    """Classification report as a dict; ``alpha`` may be a Fraction, str or float."""
    if alpha is not None and not isinstance(alpha, str):
        alpha = str(Fraction(alpha).limit_denominator(10**9) if isinstance(alpha, float) else Fraction(alpha))
    return json.loads(_digifix.classify(f, metric, alpha))


def verify(skip=()):
    """Runs the claim suite and returns the report as a dict."""
    return json.loads(_digifix.verify(list(skip)))


__all__ = [name for name in dir() if not name.startswith("_")]
