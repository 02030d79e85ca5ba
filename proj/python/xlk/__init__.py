"""Certificates for knots whose character varieties have large components."""

import json
import os

# wheels carry the bundled instances next to the module
_here = os.path.join(os.path.dirname(__file__), "data")
if "XLK_DATA_DIR" not in os.environ and os.path.isdir(_here):
    os.environ["XLK_DATA_DIR"] = _here

from ._xlk import XlkError, __version__, data_dir
from . import _xlk

__all__ = [
    "XlkError",
    "__version__",
    "data_dir",
    "default_config",
    "trace_action",
    "quotient_claim",
    "riley",
    "u_points",
    "hypothesis",
    "turks_head",
    "certify",
    "verify",
    "passed",
]


def _config(overrides):
    cfg = json.loads(_xlk.default_config())
    unknown = set(overrides) - set(cfg)
    if unknown:
        raise KeyError(f"unknown config keys: {sorted(unknown)}")
    cfg.update(overrides)
    return json.dumps(cfg)


def _text(cert):
    return cert if isinstance(cert, str) else json.dumps(cert)


def default_config():
    return json.loads(_xlk.default_config())


def trace_action(braid):
    return json.loads(_xlk.trace_action(braid))


def quotient_claim(braid, **config):
    return json.loads(_xlk.quotient_claim(braid, _config(config)))


def riley(two_bridge, m=()):
    return json.loads(_xlk.riley(two_bridge, list(m)))


def u_points(braid, **config):
    return json.loads(_xlk.u_points(braid, _config(config)))


def hypothesis(braid, strands=3, involution="reflect", **config):
    return json.loads(_xlk.hypothesis(braid, strands, involution, _config(config)))


def turks_head(p, q, certify=False, **config):
    return json.loads(_xlk.turks_head(p, q, certify, _config(config)))


def certify(name, **config):
    """Bundle for "10_98", "10_99", "10_123" or "parabolic"."""
    return json.loads(_xlk.certify(name, _config(config)))


def verify(cert):
    """(ok, problems) after re-running the recorded pipeline."""
    ok, problems = _xlk.verify(_text(cert))
    return ok, list(problems)


def passed(cert):
    return _xlk.passed(_text(cert))
