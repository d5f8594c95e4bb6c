"""Exact knot, Seiberg-Witten and geography invariants."""

import json as _json

from ._swforge import (
    DomainError,
    InternalError,
    ParseError,
    Poly,
    alexander,
    alexander_routes,
    blowdown_chain,
    chain_boundary,
    cover_sw,
    is_monic,
    knot_surgery,
    lens_equiv,
    pair_product_sw,
    r_value,
    sw_en,
)
from . import _swforge


def z_k_analysis(delta, genus):
    return _json.loads(_swforge.z_k_analysis(delta, genus))


def fiber_sum_geography(genus, r1, r2):
    return _json.loads(_swforge.fiber_sum_geography(genus, r1, r2))


def run(*args):
    """Runs a CLI command line; returns (exit_code, parsed_or_raw_stdout, stderr)."""
    code, out, err = _swforge.run([str(a) for a in args])
    try:
        out = _json.loads(out)
    except ValueError:
        pass
    return code, out, err


__all__ = [
    "DomainError", "InternalError", "ParseError", "Poly", "alexander", "alexander_routes", "blowdown_chain",
    "chain_boundary", "cover_sw", "fiber_sum_geography", "is_monic", "knot_surgery", "lens_equiv",
    "pair_product_sw", "r_value", "run", "sw_en", "z_k_analysis",
]
