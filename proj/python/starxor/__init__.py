"""State complexity of (L1 xor L2)*: monsters, modifiers and tableaux."""

import json

from ._starxor import *  # noqa: F401,F403
from ._starxor import cmd_sc_json, cmd_sweep_finals_json, cmd_verify_figures_json


def cmd_sc(n1, n2, method="all", **kwargs):
    """Report dict for the minimal stx size at (n1, n2)."""
    return json.loads(cmd_sc_json(n1, n2, method, **kwargs))


def cmd_sweep_finals(n1, n2, jobs=1):
    return json.loads(cmd_sweep_finals_json(n1, n2, jobs))


def cmd_verify_figures():
    return json.loads(cmd_verify_figures_json())
