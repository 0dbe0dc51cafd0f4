"""Exact polynomial tau-functions of the BKP, DKP and MDKP hierarchies."""

import json as _json

try:
    from . import _bdkp as _core  # installed wheel layout
except ImportError:  # pragma: no cover - in-tree build layout
    import _bdkp as _core

SpecError = _core.SpecError
ChecksUnavailableError = _core.ChecksUnavailableError
is_bkp_tau = _core.is_bkp_tau
is_mdkp_pair = _core.is_mdkp_pair
bench = _core.bench
__version__ = _core.__version__

__all__ = [
    "SpecError",
    "ChecksUnavailableError",
    "bench",
    "is_bkp_tau",
    "is_mdkp_pair",
    "qschur",
    "tau",
    "verify",
]


def qschur(partition, format="plain"):
    """Q-Schur function of a strict partition, as text or a term dict."""
    out = _core.qschur(list(partition), format)
    return _json.loads(out) if format == "json" else out


def tau(spec, format="plain", seed=0):
    """Construct the tau-function(s) of a problem spec (a dict)."""
    out = _core.render_tau(_json.dumps(spec), format, seed)
    return _json.loads(out) if format == "json" else out


def verify(spec, checks=(), seed=0):
    """Run exact hierarchy checks on a problem spec (a dict).

    Returns a list of {"name", "pass", "detail"} dicts, sorted by check name.
    """
    results = _core.verify(_json.dumps(spec), list(checks), seed)
    return [{"name": n, "pass": p, "detail": d} for n, p, d in results]
