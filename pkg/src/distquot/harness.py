"""Experiment drivers and machine-readable run reports.

A run is configured by an ExperimentConfig, executes one of four modes
(verify, theorem, sharpness, nu), and produces one JSON document. The report
echoes the complete configuration, the modulus polynomial, and the generator,
since element indices are only interpretable relative to them; given the same
configuration and seed the JSON serializes byte-identically apart from the
"timings" block. Exit-code policy: 0 when every mandatory check passed, 1 on
a check failure, 2 on configuration or input problems.
"""

from __future__ import annotations

import csv
import json
import math
import time
from dataclasses import asdict, dataclass

import numpy as np

from . import __version__
from .characters import TOLERANCE, characters_for
from .distance import (
    CoverageReport,
    PointSet,
    check_distance_covers_field,
    check_quotient_covers_field,
    check_quotient_covers_squares,
    distance_covers_min_size,
    distance_set,
    key_inequality_check,
    pair_count_profile,
    pair_counts_spectral,
    quotient_set,
    subfield_construction,
)
from .errors import DistquotError, EmptySet, PointSetParseError
from .field import ELEMENT_CAP, build_field
from .geometry import GRID_CAP, GridDomain
from .rng import SplitMix64
from .verification import CheckRecord, _rel_dev_arrays, identity_suite

_STATEMENTS = ("auto", "even", "odd", "distance")


@dataclass
class ExperimentConfig:
    """Complete description of one run; echoed verbatim into the report."""

    mode: str
    p: int
    ell: int = 1
    d: int = 2
    size: int | None = None
    trials: int = 20
    seed: int = 0
    ratio: int | None = None
    statement: str = "auto"
    threshold_override: float | None = None
    samples: int = 10_000
    element_cap: int = ELEMENT_CAP
    grid_cap: int = GRID_CAP
    points_file: str | None = None

    def validate(self) -> None:
        if self.mode not in ("verify", "theorem", "sharpness", "nu"):
            raise DistquotError(f"unknown mode {self.mode!r}")
        if self.trials < 1:
            raise DistquotError("trial count must be >= 1")
        if self.statement not in _STATEMENTS:
            raise DistquotError(f"unknown statement {self.statement!r}")


def _field_block(field) -> dict:
    return {
        "p": field.p,
        "ell": field.ell,
        "q": field.q,
        "modulus": list(field.modulus),
        "modulus_polynomial": field.spec.modulus_string(),
        "generator": field.generator,
    }


def _base_report(config: ExperimentConfig, field, domain=None) -> dict:
    report = {
        "tool": "distquot",
        "version": __version__,
        "mode": config.mode,
        "tolerance": TOLERANCE,
        "config": asdict(config),
        "field": _field_block(field),
    }
    if domain is not None:
        report["domain"] = {"d": domain.d, "size": domain.size}
    return report


def _finish(report: dict, records: list[CheckRecord], trials_passed: bool, start: float) -> dict:
    failures = [r.name for r in records if not r.passed]
    report["checks"] = [asdict(r) for r in records]
    report["summary"] = {
        "passed": not failures and trials_passed,
        "checks_run": len(records),
        "failed_checks": failures,
    }
    report["timings"] = {"total_seconds": time.monotonic() - start}
    return report


def _build_domain(config: ExperimentConfig) -> GridDomain:
    field = build_field(config.p, config.ell, element_cap=config.element_cap)
    return GridDomain(field, config.d, grid_cap=config.grid_cap)


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def run_verify(config: ExperimentConfig) -> dict:
    start = time.monotonic()
    config.validate()
    domain = _build_domain(config)
    if config.ratio is not None and not 0 < config.ratio < domain.q:
        raise DistquotError(
            f"ratio must be a nonzero field element below {domain.q}"
        )
    records = identity_suite(
        domain,
        trials=config.trials,
        samples=config.samples,
        seed=config.seed,
        ratio=config.ratio,
    )
    report = _base_report(config, domain.field, domain)
    return _finish(report, records, True, start)


# ---------------------------------------------------------------------------
# theorem
# ---------------------------------------------------------------------------

def _coverage_to_dict(cov: CoverageReport) -> dict:
    out = asdict(cov)
    out["required"] = list(cov.required)
    out["found"] = list(cov.found)
    out["missing"] = list(cov.missing)
    return out


def _statement_for(config: ExperimentConfig, d: int) -> str:
    if config.statement != "auto":
        return config.statement
    return "even" if d % 2 == 0 else "odd"


def _statement_threshold(statement: str, q: int, d: int) -> float:
    if statement == "even":
        return float(9 * q ** (d // 2))
    if statement == "odd":
        return 6.0 * float(q) ** (d / 2)
    return 2.0 * float(q) ** ((d + 1) / 2)


def _meets_threshold(statement: str, size: int, q: int, d: int) -> bool:
    """Exact integer comparison with the statement's size hypothesis."""
    if statement == "even":
        return size >= 9 * q ** (d // 2)
    if statement == "odd":
        return size * size >= 36 * q**d
    return size * size > 4 * q ** (d + 1)


def _default_size(statement: str, q: int, d: int) -> int:
    """Smallest size meeting the statement's hypothesis, exactly."""
    if statement == "even":
        return 9 * q ** (d // 2)
    if statement == "odd":
        return math.isqrt(36 * q**d - 1) + 1
    return distance_covers_min_size(q, d)


def run_theorem(config: ExperimentConfig) -> dict:
    start = time.monotonic()
    config.validate()
    domain = _build_domain(config)
    field = domain.field
    chars = characters_for(field)
    q, d = domain.q, domain.d
    statement = _statement_for(config, d)
    if statement == "even" and d % 2 != 0:
        raise DistquotError("even-dimension statement requires even d")
    if statement == "odd" and (d % 2 == 0 or d < 3):
        raise DistquotError("odd-dimension statement requires odd d >= 3")

    threshold = _statement_threshold(statement, q, d)
    size = config.size if config.size is not None else _default_size(statement, q, d)
    vacuous = _default_size(statement, q, d) > domain.size
    report = _base_report(config, field, domain)
    report["experiment"] = {
        "statement": statement,
        "threshold": threshold,
        "set_size": size,
        "vacuous_regime": vacuous,
    }

    if vacuous:
        # No admissible set size exists at this (q, d); nothing is asserted.
        report["trials"] = []
        report["summary"] = {
            "passed": True,
            "checks_run": 0,
            "failed_checks": [],
            "note": "vacuous regime: the smallest admissible size exceeds q^d",
        }
        report["timings"] = {"total_seconds": time.monotonic() - start}
        return report

    if size > domain.size:
        raise DistquotError(
            f"infeasible set size {size}: the grid has only {domain.size} points"
        )
    meets_stated = _meets_threshold(statement, size, q, d)
    if not meets_stated and config.threshold_override is None:
        raise DistquotError(
            f"set size {size} is below the threshold {threshold:.3f}; "
            "pass a threshold override to explore below it"
        )
    mandatory = meets_stated

    if config.ratio is not None:
        if not 0 < config.ratio < q:
            raise DistquotError(f"ratio must be a nonzero field element below {q}")
        ratios = [config.ratio]
    elif statement == "even":
        ratios = list(range(1, q))
    elif statement == "odd":
        ratios = sorted(chars.quadratic_residues())
    else:
        ratios = []

    rng = SplitMix64(config.seed)
    trials = []
    all_passed = True
    for t in range(config.trials):
        e = PointSet.random(domain, size, rng)
        profile = pair_count_profile(e)
        if statement == "even":
            cov = check_quotient_covers_field(e)
        elif statement == "odd":
            cov = check_quotient_covers_squares(e)
        else:
            cov = check_distance_covers_field(e)
        failed_ratios = [
            r for r in ratios if not key_inequality_check(e, r, profile)
        ]
        trial_passed = cov.passed and not failed_ratios
        all_passed = all_passed and trial_passed
        trials.append(
            {
                "trial": t,
                "coverage": _coverage_to_dict(cov),
                "checked_ratios": ratios,
                "failed_ratios": failed_ratios,
                "passed": trial_passed,
            }
        )
    report["trials"] = trials
    passed = all_passed if mandatory else True
    report["summary"] = {
        "passed": passed,
        "checks_run": len(trials),
        "failed_checks": (
            [] if passed else [f"trial-{t['trial']}" for t in trials if not t["passed"]]
        ),
        "informational": not mandatory,
    }
    report["timings"] = {"total_seconds": time.monotonic() - start}
    return report


# ---------------------------------------------------------------------------
# sharpness
# ---------------------------------------------------------------------------

def run_sharpness(config: ExperimentConfig) -> dict:
    start = time.monotonic()
    config.validate()
    if config.ell != 2:
        raise DistquotError("the sharpness construction lives in a degree-2 extension")
    e = subfield_construction(config.p, config.d)
    domain = e.domain
    field = domain.field
    p, q = config.p, domain.q
    delta = distance_set(e)
    quotient = quotient_set(field, delta)
    subfield = set(field.prime_subfield())
    expected_size = p**config.d
    sharp = (
        e.cardinality == expected_size
        and quotient == subfield
        and len(quotient) < q
    )
    report = _base_report(config, field, domain)
    report["construction"] = {
        "set_size": e.cardinality,
        "expected_size": expected_size,
        "distance_set": sorted(delta),
        "quotient_set": sorted(quotient),
        "prime_subfield": sorted(subfield),
        "quotient_equals_prime_subfield": quotient == subfield,
        "proper_subset_of_field": len(quotient) < q,
        "sharp": sharp,
    }
    report["summary"] = {
        "passed": sharp,
        "checks_run": 1,
        "failed_checks": [] if sharp else ["sharpness-construction"],
    }
    report["timings"] = {"total_seconds": time.monotonic() - start}
    return report


# ---------------------------------------------------------------------------
# nu
# ---------------------------------------------------------------------------

def parse_point_file(domain: GridDomain, path: str) -> PointSet:
    """Text format: one vector per line, d whitespace-separated element
    indices in [0, q); lines starting with # are comments."""
    vectors = []
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != domain.d:
                raise PointSetParseError(
                    f"line {lineno}: expected {domain.d} coordinates, got {len(parts)}"
                )
            try:
                vec = [int(x) for x in parts]
            except ValueError:
                raise PointSetParseError(
                    f"line {lineno}: coordinates must be integers: {line!r}"
                ) from None
            for x in vec:
                if not 0 <= x < domain.q:
                    raise PointSetParseError(
                        f"line {lineno}: coordinate {x} out of range [0, {domain.q})"
                    )
            vectors.append(vec)
    if not vectors:
        raise EmptySet(f"no points found in {path}")
    return PointSet.from_vectors(domain, vectors)


def run_nu(config: ExperimentConfig) -> dict:
    start = time.monotonic()
    config.validate()
    if not config.points_file:
        raise DistquotError("nu mode requires a point-set file")
    domain = _build_domain(config)
    e = parse_point_file(domain, config.points_file)
    profile = pair_count_profile(e)
    spectral = pair_counts_spectral(e)
    deviation = _rel_dev_arrays(spectral, profile.values.astype(np.float64))
    delta = distance_set(e)
    quotient = quotient_set(domain.field, delta)
    record = CheckRecord(
        name="pair-counts-spectral-vs-direct",
        description="spectral pair counts match exact integer counting",
        cases=domain.q,
        max_deviation=deviation,
        bound=TOLERANCE,
        passed=deviation <= TOLERANCE,
    )
    report = _base_report(config, domain.field, domain)
    report["profile"] = {
        "set_size": e.cardinality,
        "pair_counts": [int(v) for v in profile.values],
        "pair_counts_spectral_real": [float(v.real) for v in spectral],
        "distance_set": sorted(delta),
        "quotient_set": sorted(quotient),
    }
    return _finish(report, [record], True, start)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def run(config: ExperimentConfig) -> dict:
    runner = {
        "verify": run_verify,
        "theorem": run_theorem,
        "sharpness": run_sharpness,
        "nu": run_nu,
    }[config.mode]
    return runner(config)


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def write_csv(report: dict, path: str) -> None:
    """Flat per-row view: checks for verify/nu, trials for theorem."""
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        if report.get("trials") is not None:
            writer.writerow(
                ["trial", "passed", "coverage_passed", "missing", "failed_ratios"]
            )
            for t in report["trials"]:
                writer.writerow(
                    [
                        t["trial"],
                        t["passed"],
                        t["coverage"]["passed"],
                        " ".join(str(x) for x in t["coverage"]["missing"]),
                        " ".join(str(x) for x in t["failed_ratios"]),
                    ]
                )
        elif "checks" in report:
            writer.writerow(["name", "cases", "max_deviation", "bound", "passed"])
            for c in report["checks"]:
                writer.writerow(
                    [c["name"], c["cases"], c["max_deviation"], c["bound"], c["passed"]]
                )
        else:
            writer.writerow(["key", "value"])
            for key, value in sorted(report.get("construction", {}).items()):
                writer.writerow([key, value])


def exit_code_for(report: dict) -> int:
    return 0 if report.get("summary", {}).get("passed") else 1
