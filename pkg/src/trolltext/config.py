"""Run configuration: defaults, key=value files, resolution, snapshots.

Precedence is command-line flag over config-file entry over default.
Every command writes the resolved values it actually used next to its
outputs, so a run can be reproduced from its output directory alone.
"""

from __future__ import annotations

from .errors import InvalidConfigValue, UnknownConfigKey

#: Every tunable knob with its default. A zero/empty sentinel means
#: "derive at use time" where noted.
DEFAULTS: dict[str, object] = {
    "seed": 0,
    "stoplist": "",  # path; empty uses the built-in list
    "min_df": 1,
    "max_df_frac": 1.0,
    "weighting": "tfidf",  # or "count"
    "group": "per-message",  # or "per-account"
    "strict": False,
    "categories": "",  # comma-separated label subset; empty keeps all
    "train_size": 0,  # 0 takes 80 percent of the labeled documents
    "test_size": 0,  # 0 takes everything left after the train draw
    "kernel": "linear",
    "gamma": 1.0,
    "degree": 3,
    "coef0": 0.0,
    "c": 1.0,
    "epochs": 20,
    "tolerance": 1e-3,
    "n_trees": 100,
    "mtry": 0,  # 0 picks ceil(sqrt(n_features))
    "max_depth": -1,  # -1 means unlimited
    "min_leaf": 1,
    "impurity": "gini",
    "bootstrap": True,
    "k": 10,
    "k_candidates": "",  # e.g. "2,3,4,6"
    "alpha": 0.0,  # 0 picks 50 / k
    "eta": 0.01,
    "iterations": 1000,
    "burn_in": 500,
    "sample_lag": 10,
    "split_frac": 0.8,
    "top_n": 30,
    "category": "",
    "by": "account",  # classify rollup key: "account" or "doc"
}

_BOOL_STRINGS = {
    "true": True,
    "false": False,
    "1": True,
    "0": False,
    "yes": True,
    "no": False,
}


def coerce_value(key: str, raw: str):
    """Convert a raw string to the type of the key's default."""
    default = DEFAULTS[key]
    if isinstance(default, bool):
        try:
            return _BOOL_STRINGS[raw.strip().lower()]
        except KeyError:
            raise InvalidConfigValue(
                "%s expects a boolean, got %r" % (key, raw)
            ) from None
    if isinstance(default, int):
        try:
            return int(raw.strip())
        except ValueError:
            raise InvalidConfigValue(
                "%s expects an integer, got %r" % (key, raw)
            ) from None
    if isinstance(default, float):
        try:
            return float(raw.strip())
        except ValueError:
            raise InvalidConfigValue(
                "%s expects a number, got %r" % (key, raw)
            ) from None
    return raw.strip()


def parse_config_file(path) -> dict:
    """Read key=value lines; '#' starts a comment, blank lines skip."""
    out: dict[str, object] = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise InvalidConfigValue(
                    "line %d: expected key=value, got %r" % (line_no, line)
                )
            key, raw = line.split("=", 1)
            key = key.strip()
            if key not in DEFAULTS:
                raise UnknownConfigKey("line %d: unknown key %r" % (line_no, key))
            out[key] = coerce_value(key, raw)
    return out


def resolve(file_values: dict | None = None, overrides: dict | None = None) -> dict:
    """Layer defaults, then config-file values, then explicit overrides."""
    cfg = dict(DEFAULTS)
    for layer in (file_values or {}), (overrides or {}):
        for key, value in layer.items():
            if key not in DEFAULTS:
                raise UnknownConfigKey("unknown key %r" % key)
            if value is not None:
                cfg[key] = value
    return cfg


def format_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_snapshot(cfg: dict, keys, path) -> None:
    """Record the resolved values of the given keys, sorted, one per line."""
    with open(path, "w", encoding="utf-8") as fh:
        for key in sorted(keys):
            fh.write("%s=%s\n" % (key, format_value(cfg[key])))
