"""Configuration schema: parameter keys, table ranges, and file parsing.

Config keys are the generator parameter names in snake_case.  Unknown
keys are errors, never warnings, so a typo cannot silently corrupt a
sweep.  The one deliberate alias: the CABAM table names its homophily
control "inter link strength" while describing the intra-community
probability, so both ``inter_link_strength`` and ``intra_link_strength``
are accepted for the same field.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping

import yaml

from .errors import InvalidParams
from .params import CabamParams, FeatureParams, LfrParams, SbmParams

GENERATORS = ("sbm", "cabam", "lfr")

# key -> (kind, (low, high) default sampling range, params field or None)
SBM_SCHEMA: dict[str, tuple[str, tuple, str | None]] = {
    "nvertex": ("int", (1028, 4096), "nvertex"),
    "avg_degree": ("float", (1.0, 32.0), "avg_degree"),
    "min_degree": ("int", (2, 20), "min_degree"),
    "pq_ratio": ("float", (1.0, 16.0), "pq_ratio"),
    "exponent": ("float", (0.2, 3.0), "degree_exponent"),
    "num_clusters": ("int", (2, 10), "num_clusters"),
    "cluster_size_slope": ("float", (0.0, 1.0), "cluster_size_slope"),
    "feature_center_distance": ("float", (0.0, 2.0), None),
    "feature_dim": ("int", (16, 16), None),
}

CABAM_SCHEMA: dict[str, tuple[str, tuple, str | None]] = {
    "nvertex": ("int", (1028, 4096), "nvertex"),
    "min_degree": ("int", (2, 20), "min_degree"),
    "inter_link_strength": ("float", (0.5, 1.0), "intra_link_strength"),
    "num_clusters": ("int", (2, 10), "num_clusters"),
    "cluster_size_slope": ("float", (0.0, 1.0), "cluster_size_slope"),
    "feature_center_distance": ("float", (0.0, 2.0), None),
    "feature_dim": ("int", (16, 16), None),
}

LFR_SCHEMA: dict[str, tuple[str, tuple, str | None]] = {
    "nvertex": ("int", (1028, 4096), "nvertex"),
    "avg_degree": ("float", (1.0, 32.0), "avg_degree"),
    "max_degree_proportion": ("float", (2.0, 20.0), "max_degree_proportion"),
    "mixing_param": ("float", (0.0, 1.0), "mixing_param"),
    "min_community_size_proportion": ("float", (0.05, 0.0825), "min_community_proportion"),
    "max_community_size_proportion": ("float", (0.25, 0.33), "max_community_proportion"),
    "community_exponent": ("float", (1.0, 2.0), "community_exponent"),
    "exponent": ("float", (2.0, 3.0), "degree_exponent"),
    "num_tries": ("int", (20, 20), "num_tries"),
    "feature_center_distance": ("float", (0.0, 2.0), None),
    "feature_dim": ("int", (16, 16), None),
}

SCHEMAS = {"sbm": SBM_SCHEMA, "cabam": CABAM_SCHEMA, "lfr": LFR_SCHEMA}
PARAM_CLASSES = {"sbm": SbmParams, "cabam": CabamParams, "lfr": LfrParams}

_ALIASES = {"cabam": {"intra_link_strength": "inter_link_strength"}}
_OPTIONAL_KEYS = {"feature_dim": 16, "num_tries": 20}
_EXTRA_KEYS = ("fixed_community_sizes",)


def load_config(path) -> dict:
    """Parse a JSON or YAML config file into a dict."""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(path)
    text = path.read_text()
    if path.suffix.lower() in (".yaml", ".yml"):
        data = yaml.safe_load(text)
    else:
        data = json.loads(text)
    if not isinstance(data, dict):
        raise InvalidParams("config must be a mapping")
    return data


def _coerce(key: str, kind: str, value):
    if kind == "int":
        if isinstance(value, bool) or (isinstance(value, float) and not value.is_integer()):
            raise InvalidParams(f"{key} must be an integer, got {value!r}")
        return int(value)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InvalidParams(f"{key} must be a number, got {value!r}")
    return float(value)


def build_generator_params(generator: str, cfg: Mapping[str, Any]):
    """Validate a generate-config dict and build (params, feature_params)."""
    if generator not in SCHEMAS:
        raise InvalidParams(f"unknown generator {generator!r}")
    schema = SCHEMAS[generator]
    aliases = _ALIASES.get(generator, {})

    normalized: dict[str, Any] = {}
    for key, value in cfg.items():
        canonical = aliases.get(key, key)
        if canonical in _EXTRA_KEYS:
            normalized[canonical] = value
            continue
        if canonical not in schema:
            raise InvalidParams(f"unknown config key {key!r} for generator {generator!r}")
        if canonical in normalized:
            raise InvalidParams(f"duplicate config key {key!r}")
        normalized[canonical] = _coerce(key, schema[canonical][0], value)

    for key, default in _OPTIONAL_KEYS.items():
        if key in schema:
            normalized.setdefault(key, default)
    missing = [k for k in schema if k not in normalized]
    if missing:
        raise InvalidParams(f"missing config keys for {generator}: {', '.join(missing)}")

    fields = {
        schema[key][2]: normalized[key] for key in schema if schema[key][2] is not None
    }
    if "fixed_community_sizes" in normalized and normalized["fixed_community_sizes"] is not None:
        if generator == "lfr":
            raise InvalidParams("fixed_community_sizes is not supported for lfr")
        fields["fixed_community_sizes"] = tuple(
            int(s) for s in normalized["fixed_community_sizes"]
        )
    params = PARAM_CLASSES[generator](**fields)
    params.validate()
    feature = FeatureParams(
        center_distance=normalized["feature_center_distance"],
        dim=normalized["feature_dim"],
    )
    feature.validate()
    return params, feature


def default_ranges() -> dict[str, dict[str, tuple]]:
    return {
        gen: {key: spec[1] for key, spec in schema.items()}
        for gen, schema in SCHEMAS.items()
    }


@dataclass(frozen=True)
class SweepConfig:
    """One sweep: which generators, how many samples, and from what ranges.

    In matched mode the role-equivalent parameters are drawn once per
    sample index and fanned out to every generator.  When a sampled
    graph's smallest community cannot afford the configured per-class
    train/val counts, the split shrinks proportionally (never below one
    training node per class) so in-range SBM/CABAM samples always yield
    a usable row.
    """

    generators: tuple[str, ...]
    samples_per_generator: int
    master_seed: int
    matched: bool = False
    run_baseline: bool = True
    export_datasets: bool = False
    per_class_train: int = 10
    per_class_val: int = 10
    buckets: int = 20
    ranges: Mapping[str, Mapping[str, tuple]] = field(default_factory=default_ranges)

    def validate(self) -> None:
        if not self.generators:
            raise InvalidParams("sweep needs at least one generator")
        for gen in self.generators:
            if gen not in GENERATORS:
                raise InvalidParams(f"unknown generator {gen!r}")
        if self.samples_per_generator < 1:
            raise InvalidParams("samples_per_generator must be >= 1")
        if self.master_seed < 0:
            raise InvalidParams("master_seed must be nonnegative")
        for gen, rng_map in self.ranges.items():
            if gen not in SCHEMAS:
                raise InvalidParams(f"ranges given for unknown generator {gen!r}")
            for key, bounds in rng_map.items():
                if key not in SCHEMAS[gen]:
                    raise InvalidParams(f"unknown range key {key!r} for {gen}")
                if len(bounds) != 2 or bounds[0] > bounds[1]:
                    raise InvalidParams(f"range for {key} must be (low, high)")

    def digest(self) -> str:
        """Stable fingerprint used to guard resumption."""
        payload = {
            "generators": list(self.generators),
            "samples_per_generator": self.samples_per_generator,
            "master_seed": self.master_seed,
            "matched": self.matched,
            "run_baseline": self.run_baseline,
            "export_datasets": self.export_datasets,
            "per_class_train": self.per_class_train,
            "per_class_val": self.per_class_val,
            "ranges": {g: {k: list(v) for k, v in r.items()} for g, r in self.ranges.items()},
        }
        text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]


_SWEEP_KEYS = {
    "generators",
    "samples_per_generator",
    "master_seed",
    "matched",
    "run_baseline",
    "export_datasets",
    "per_class_train",
    "per_class_val",
    "buckets",
    "ranges",
}


def build_sweep_config(cfg: Mapping[str, Any]) -> SweepConfig:
    """Validate a sweep-config dict against the schema."""
    unknown = set(cfg) - _SWEEP_KEYS
    if unknown:
        raise InvalidParams(f"unknown sweep config keys: {', '.join(sorted(unknown))}")
    for required in ("generators", "samples_per_generator", "master_seed"):
        if required not in cfg:
            raise InvalidParams(f"missing sweep config key {required!r}")
    ranges = default_ranges()
    for gen, overrides in (cfg.get("ranges") or {}).items():
        if gen not in ranges:
            raise InvalidParams(f"ranges given for unknown generator {gen!r}")
        for key, bounds in overrides.items():
            if key not in ranges[gen]:
                raise InvalidParams(f"unknown range key {key!r} for {gen}")
            ranges[gen][key] = (bounds[0], bounds[1])
    sweep = SweepConfig(
        generators=tuple(cfg["generators"]),
        samples_per_generator=int(cfg["samples_per_generator"]),
        master_seed=int(cfg["master_seed"]),
        matched=bool(cfg.get("matched", False)),
        run_baseline=bool(cfg.get("run_baseline", True)),
        export_datasets=bool(cfg.get("export_datasets", False)),
        per_class_train=int(cfg.get("per_class_train", 10)),
        per_class_val=int(cfg.get("per_class_val", 10)),
        buckets=int(cfg.get("buckets", 20)),
        ranges=ranges,
    )
    sweep.validate()
    return sweep
