"""Kernel backend selection.

The compiled extension is used when present unless NEARCONV_PURE=1.
Both backends expose identical functions; `active()` names the one in
use and `set_backend()` lets tests and benchmarks force a choice.
"""
from __future__ import annotations

import os

from . import _purecore

_FAST = None
if os.environ.get("NEARCONV_PURE") != "1":
    try:
        from . import _fastcore as _FAST  # type: ignore[attr-defined]
    except ImportError:
        _FAST = None

_current = _FAST if _FAST is not None else _purecore

_NAMES = (
    "dp_profit",
    "dp_min_weight",
    "minplus_brute",
    "box_min_by_diagonal",
    "witness_walk",
)


def _rebind():
    g = globals()
    for name in _NAMES:
        g[name] = getattr(_current, name)


def active():
    return "fast" if _current is _FAST else "pure"


def available():
    return ("pure", "fast") if _FAST is not None else ("pure",)


def set_backend(name):
    global _current
    if name == "pure":
        _current = _purecore
    elif name == "fast":
        if _FAST is None:
            raise RuntimeError("compiled kernels are not available")
        _current = _FAST
    else:
        raise ValueError(f"unknown backend {name!r}")
    _rebind()


INT64_INF = _purecore.INT64_INF

_rebind()
