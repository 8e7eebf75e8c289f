"""McKay quivers, Kostant multiplicity vectors and Poincare series for finite
subgroups of SL2(C).

The compiled core returns JSON strings; the wrappers here parse them into
plain lists and dicts.
"""

import json

from ._mckay import (  # noqa: F401
    kostant_json,
    list_json,
    poincare_json,
    quiver_json,
    verify_json,
)


def list_inputs():
    """Cataloged inputs with their affine types."""
    return json.loads(list_json())


def quiver(input, mode=""):
    """Adjacency, Cartan matrix, labels and marks for one input."""
    return json.loads(quiver_json(input, mode))


def kostant(input, mode="", k=-1):
    """Multiplicity vectors x_k with root data and per-node series."""
    return json.loads(kostant_json(input, mode, k))


def poincare(input, mode=""):
    """Per-node Poincare series."""
    return json.loads(poincare_json(input, mode))


def verify(input="", mode="", level="fast"):
    """Identity-suite rows as a list of dicts."""
    return json.loads(verify_json(input, mode, level))


def verify_ok(input="", mode="", level="fast"):
    """True when no identity-suite row fails."""
    return all(row["status"] != "FAIL" for row in verify(input, mode, level))
