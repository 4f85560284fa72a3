"""Exact wireless localization with angular broadcast guards.

Polygons, guards and monotone key formulas are exact rational objects; a
guard set localizes a polygon when some AND/OR formula over received keys
tells interior from exterior on every open cell of the line arrangement.
"""
from .arrangement import (check_formula, collect_lines, decide, decide_localizable,
                          enumerate_cells, label_cells, labeling_for, synthesize_dnf,
                          verify_localization)
from .bounds import (cone_separation_max, contribution, ledger, max_contribution_from,
                     min_separators, separator_threshold, vertex_guard_lower_bound)
from .estimators import (ArrangementLocalizer, KeySetEncoder, MonotoneDNFClassifier,
                         cell_samples, make_localizer)
from .exceptions import (DuplicateKeyError, InvalidGuardError, InvalidParamsError,
                         LoclabError, NonSimplePolygonError, NotLocalizableError,
                         SceneFormatError, UnknownKeyError, VerificationError, ViewportError)
from .geometry import Direction, Line, Point, Ray, Segment, intersect_lines, orient, ray_contains, side_of_line
from .model import (And, Guard, Key, Or, Polygon, cone_contains, covers_edge, evaluate_formula,
                    general_position_report, key_set_at, natural_guard, point_in_polygon)
from .placements import (enumerate_canonical_guards, general_solution, min_vertex_guards,
                         tight_vertex_solution, vertex_solution)
from .scene import Scene, dump_scene, parse_scene
from .spike import SpikeParams, SpikePolygon, build_spike_polygon, sample_ab_pair, spike_edges

__version__ = "0.1.0"

__all__ = [
    "check_formula",
    "collect_lines",
    "decide",
    "decide_localizable",
    "enumerate_cells",
    "label_cells",
    "labeling_for",
    "synthesize_dnf",
    "verify_localization",
    "cone_separation_max",
    "contribution",
    "ledger",
    "max_contribution_from",
    "min_separators",
    "separator_threshold",
    "vertex_guard_lower_bound",
    "ArrangementLocalizer",
    "KeySetEncoder",
    "MonotoneDNFClassifier",
    "cell_samples",
    "make_localizer",
    "DuplicateKeyError",
    "InvalidGuardError",
    "InvalidParamsError",
    "LoclabError",
    "NonSimplePolygonError",
    "NotLocalizableError",
    "SceneFormatError",
    "UnknownKeyError",
    "VerificationError",
    "ViewportError",
    "Direction",
    "Line",
    "Point",
    "Ray",
    "Segment",
    "intersect_lines",
    "orient",
    "ray_contains",
    "side_of_line",
    "And",
    "Guard",
    "Key",
    "Or",
    "Polygon",
    "cone_contains",
    "covers_edge",
    "evaluate_formula",
    "general_position_report",
    "key_set_at",
    "natural_guard",
    "point_in_polygon",
    "enumerate_canonical_guards",
    "general_solution",
    "min_vertex_guards",
    "tight_vertex_solution",
    "vertex_solution",
    "Scene",
    "dump_scene",
    "parse_scene",
    "SpikeParams",
    "SpikePolygon",
    "build_spike_polygon",
    "sample_ab_pair",
    "spike_edges",
]
