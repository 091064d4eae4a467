"""Weighted composition systems on finite discrete measure spaces.

Thin wrapper over the compiled ``_core`` module: inputs may be dicts or
JSON text, outputs are dicts. Document formats match the CLI's ``--json``
output exactly; complex numbers are ``[re, im]`` pairs throughout.
"""

import json as _json

from . import _core

InputError = _core.InputError
demo_names = _core.demo_names

__all__ = [
    "InputError",
    "analyze",
    "oracle",
    "invariant",
    "tree",
    "gauss",
    "rudy",
    "demo",
    "fuzz",
    "demo_names",
    "normalize_system",
    "normalize_tree",
]


def _text(doc):
    return doc if isinstance(doc, str) else _json.dumps(doc)


def analyze(system, tol=1e-9):
    """Full report on a system document."""
    return _json.loads(_core.analyze(_text(system), tol))


def oracle(system, tol=1e-9, dump_matrix=False):
    """Matrix metrics and closed-form vs matrix verdict agreement."""
    return _json.loads(_core.oracle(_text(system), tol, dump_matrix))


def invariant(system, tol=1e-9):
    """Invariant subspace search and verification."""
    return _json.loads(_core.invariant(_text(system), tol))


def tree(tree_doc, interior_only=False, tol=1e-9):
    """Tree-shift criteria on a tree document."""
    return _json.loads(_core.tree(_text(tree_doc), interior_only, tol))


def gauss(alpha=2.0, coeffs=(1.0, 1.0), dim=1, samples=1000, entire=False,
          box_half_width=10.0, seed=42, tol=1e-9):
    """Scaling map against a radial profile."""
    return _json.loads(
        _core.gauss(alpha, list(coeffs), dim, samples, entire,
                    box_half_width, seed, tol))


def rudy(n_max=20):
    """Growth table of the backward-slide phase scale gaps."""
    return _json.loads(_core.rudy(n_max))


def demo(name, alpha=1.0, depth=4, tol=1e-9, seed=42):
    """Report on a named example system; see demo_names()."""
    return _json.loads(_core.demo(name, alpha, depth, tol, seed))


def fuzz(count=1000, seed=42, max_atoms=8, tol=1e-9, inject_bug=False):
    """Differential battery of random systems."""
    return _json.loads(_core.fuzz(count, seed, max_atoms, tol, inject_bug))


def normalize_system(system):
    """Parse and re-serialize a system document (validation round trip)."""
    return _json.loads(_core.normalize_system(_text(system)))


def normalize_tree(tree_doc):
    """Parse and re-serialize a tree document (validation round trip)."""
    return _json.loads(_core.normalize_tree(_text(tree_doc)))
