"""Python front end for the chibound core.

Structures and engine documents are plain dicts on this side; they are passed to the
core as JSON text.
"""

import json

from . import _core
from ._core import (
    BudgetExhausted,
    Graph,
    InputError,
    ParseError,
    PreconditionError,
    engine_names,
    gen_chordal,
    gen_gnp,
    is_chordal,
    longhole_color_bound,
    named,
)

__all__ = [
    "BudgetExhausted", "Graph", "InputError", "ParseError", "PreconditionError",
    "chromatic_number", "omega", "longest_hole", "find_hole", "verify", "run_engine",
    "main_bound", "sweep", "gen_gnp", "gen_chordal", "gen_planted_cable", "named",
    "engine_names", "is_chordal", "check_coloring", "check_hole", "longhole_color_bound",
]


def chromatic_number(g, node_budget=None, time_budget=None):
    """Returns (chi or None when the budget ran out, colour list)."""
    status, lower, upper, colours = _core.chromatic_number(g, node_budget, time_budget)
    return (upper if status == "complete" else None), colours


def omega(g, node_budget=None, time_budget=None):
    """Returns (omega or None, witness clique)."""
    status, clique, _ = _core.omega(g, node_budget, time_budget)
    return (len(clique) if status == "complete" else None), clique


def longest_hole(g, node_budget=None, time_budget=None):
    """Cycle of a longest hole, or None for chordal graphs."""
    status, cycle = _core.longest_hole(g, node_budget, time_budget)
    if status != "complete":
        raise BudgetExhausted("longest_hole did not finish")
    return cycle


def find_hole(g, min_len, node_budget=None, time_budget=None):
    status, cycle = _core.find_hole_at_least(g, min_len, node_budget, time_budget)
    if status != "complete" and cycle is None:
        raise BudgetExhausted("find_hole did not finish")
    return cycle


def check_coloring(g, colours):
    return _core.check_coloring(g, list(colours))


def check_hole(g, cycle):
    return _core.check_hole(g, list(cycle))


def verify(g, kind, structure, stable=False):
    """Verdict dict {"ok": bool, "violations": [...]} for a structure dict."""
    return json.loads(_core.verify(g, kind, json.dumps(structure), stable))


def run_engine(name, g, structure=None, node_budget=None, time_budget=None, **params):
    """Engine run document: status, message, output and transcript."""
    text = None if structure is None else json.dumps(structure)
    doc = _core.run_engine(name, g, text, {k: str(v).lower() if isinstance(v, bool) else str(v)
                                            for k, v in params.items()}, node_budget, time_budget)
    return json.loads(doc)


def gen_planted_cable(h, t, type, base_chi, seed):
    g, cable = _core.gen_planted_cable(h, t, type, base_chi, seed)
    return g, json.loads(cable)


def main_bound(k, ell, digits=100000):
    """Decimal string when exact, else None, plus a summary."""
    return _core.main_bound(k, ell, digits)


def sweep(config_text):
    """Runs a sweep from config text; returns (records, csv table)."""
    records, table = _core.sweep(config_text)
    return [json.loads(line) for line in records.splitlines() if line], table
