"""Symmetries of Julia sets: bindings to the juliasym C++ library."""

import json

from ._juliasym import (
    BasinImage,
    BoundaryMask,
    Error,
    GridSpec,
    MethodReport,
    NormalForm,
    ParseError,
    Polynomial,
    RationalMap,
    RotationOrderReport,
    SymmetryGroup,
    chebyshev_map,
    detect_rotation_order,
    exceptional_points,
    extract_boundary,
    image_symmetry_score,
    konig_map,
    mcmullen_map,
    method_symmetry_compare,
    newton_map,
    normalize,
    parse_map,
    parse_polynomial,
    render_basins,
    symmetry_group,
)
from ._juliasym import run_command as _run_command


def run(command, input="", **options):
    """Runs a CLI command in-process. Returns (exit_code, report dict)."""
    code, text = _run_command(command, input, options)
    return code, json.loads(text)


def analyze(expr, image=False, **options):
    return run("analyze", expr, image_plane=image, **options)[1]
