"""The full reproduction bundle in one document.

Everything the package reconstructs, emitted deterministically: profile
tables, all four verifications, both root iterations, the line-6 analysis
(sixth, conjecture check, implied interval) and the derivation traces.
Text and JSON carry the same numbers; JSON is byte-identical across runs.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .figures import (
    PROFILE_COARSE,
    PROFILE_FINE_PI,
    barley_arc_coefficient,
    derive_inscribed_square,
    derive_three_barley_side,
    numeric_segment_area,
    numeric_three_barley_total,
    standard_profiles,
)
from .procedures import babylonian_sqrt, truncated_iteration
from .sexagesimal import FloatingSexagesimal, rational_to_decimal
from .tablet import (
    ReconstructionOptions,
    SQRT21_CONJECTURE,
    check_sqrt21_conjecture,
    implied_sqrt21_interval,
    sixth_of_line6,
    verify_all,
)

Q = Fraction

NORMALIZATION_NOTE = (
    "All figure areas are normalized to unit quadrant radius; the tablet "
    "itself does not state the normalization for lines 5-6, and unit radius "
    "is adopted because it reproduces the attested digits.  The barley-arc "
    "coefficient has no attested value and is a reconstruction.")


def _profile_dict(profile) -> dict:
    out = {"pi": str(profile.pi)}
    if profile.roots:
        out["roots"] = {str(d): str(c) for d, c in profile.roots}
    if profile.triangle_coefficient is not None:
        out["triangle_coefficient"] = str(profile.triangle_coefficient)
    return out


def build_report() -> dict:
    """Assemble the whole bundle as a JSON-ready dict."""
    a5 = babylonian_sqrt(Q(21), 5).final()
    verifications = {
        report.record_id: report.to_json_dict()
        for report in verify_all({"TMS3.6": ReconstructionOptions(sqrt21=a5)})
    }
    interval_low, interval_high = implied_sqrt21_interval()
    sixth = sixth_of_line6()
    return {
        "normalization_note": NORMALIZATION_NOTE,
        "profiles": {p.name: _profile_dict(p) for p in standard_profiles()},
        "verifications": verifications,
        "iterations": {
            "sqrt2": babylonian_sqrt(Q(2), 5).to_json_dict(places=3),
            "sqrt21": babylonian_sqrt(Q(21), 5).to_json_dict(places=4),
            "sqrt21_truncated": truncated_iteration(Q(21), 5, 4).to_json_dict(places=5),
        },
        "line6": {
            "sixth": str(sixth),
            "sixth_decimal": rational_to_decimal(sixth.to_rational(), 6),
            "a5_substitute": check_sqrt21_conjecture(a5).to_json_dict(),
            "conjecture": check_sqrt21_conjecture(SQRT21_CONJECTURE).to_json_dict(),
            "implied_sqrt21_interval": {
                "low": str(interval_low),
                "high": str(interval_high),
                "width": str(interval_high - interval_low),
                "low_decimal": rational_to_decimal(interval_low, 9),
                "high_decimal": rational_to_decimal(interval_high, 9),
                "below_true_root": True,
            },
            "segment_area_decimal": numeric_segment_area(),
            "true_three_barley_total_decimal": numeric_three_barley_total(),
        },
        "derivations": {
            "inscribed_square": {
                label: str(value) for label, value in derive_inscribed_square().steps},
            "three_barley_side": {
                label: str(value) for label, value in derive_three_barley_side().steps},
        },
        "reconstructed_coefficients": {
            "barley-arc": {
                "coarse": str(barley_arc_coefficient(PROFILE_COARSE)),
                "fine-pi": str(barley_arc_coefficient(PROFILE_FINE_PI)),
                "note": "no attested value; reconstructed normalization by arc squared",
            },
        },
    }


def _text_lines(data: dict) -> list[str]:
    lines: list[str] = []

    def section(title: str):
        lines.append(title)
        lines.append("-" * len(title))

    lines.append("Coefficient reproduction report")
    lines.append("=" * 31)
    lines.append("")
    lines.append(data["normalization_note"])
    lines.append("")

    section("Profiles")
    for name, profile in data["profiles"].items():
        parts = [f"pi = {profile['pi']}"]
        for d, c in profile.get("roots", {}).items():
            parts.append(f"sqrt({d}) -> {c}")
        if "triangle_coefficient" in profile:
            parts.append(f"triangle coefficient {profile['triangle_coefficient']}")
        lines.append(f"  {name}: " + "; ".join(parts))
    lines.append("")

    section("Verifications")
    for record_id, report in data["verifications"].items():
        digits = FloatingSexagesimal(tuple(report["attested_digits"]))
        placed = digits.place_value(report["adopted_exponent"])
        rec = report["reconstruction"]
        lines.append(
            f"  {record_id}: attested {digits} (read {placed}), "
            f"reconstruction {rec['sexagesimal']} "
            f"(exact {rec['rational']}, decimal {rec['decimal']}), "
            f"verdict {report['verdict']}, discrepancy {report['discrepancy']}")
        lines.append(f"    {report['notes']}")
    lines.append("")

    section("Iterations")
    for name, trace in data["iterations"].items():
        lines.append(f"  {name}: N = {trace['N']}")
        for step in trace["steps"]:
            extra = f", working {step['working']}" if "working" in step else ""
            lines.append(
                f"    a{step['k']} ({step['kind']}): {step['exact']} "
                f"= {step['sexagesimal']} ({step['side']} the root{extra})")
    lines.append("")

    section("Line 6 analysis")
    line6 = data["line6"]
    lines.append(f"  sixth of line 6: {line6['sixth']} = {line6['sixth_decimal']}")
    for label, key in (("a5 substitute", "a5_substitute"), ("conjecture", "conjecture")):
        entry = line6[key]
        lines.append(f"  {label}: x = {entry['x']}")
        lines.append(
            f"    per triangle {entry['per_triangle']['rational']} "
            f"= {entry['per_triangle']['sexagesimal']} "
            f"= {entry['per_triangle']['decimal']}")
        lines.append(
            f"    hexagon {entry['hexagon']['rational']} "
            f"= {entry['hexagon']['sexagesimal']} "
            f"= {entry['hexagon']['decimal']}; "
            f"truncated {entry['hexagon']['truncated_4']}; "
            f"matches attested: {entry['matches_attested']}")
        if "claimed_per_triangle" in entry:
            lines.append(
                f"    claimed per-triangle {entry['claimed_per_triangle']}; "
                f"agrees with computation: {entry['agrees_with_claim']}")
    interval = line6["implied_sqrt21_interval"]
    lines.append(
        f"  implied sqrt(21) interval: ({interval['low']}, {interval['high']}] "
        f"= ({interval['low_decimal']}, {interval['high_decimal']}], "
        f"width {interval['width']}, entirely below the true root: "
        f"{interval['below_true_root']}")
    lines.append(f"  one segment, numerically: {line6['segment_area_decimal']}")
    lines.append(
        "  true three-barley total (six triangles plus six segments): "
        f"{line6['true_three_barley_total_decimal']}")
    lines.append("")

    section("Derivations")
    for name, steps in data["derivations"].items():
        lines.append(f"  {name}:")
        for label, value in steps.items():
            lines.append(f"    {label} = {value}")
    lines.append("")

    section("Reconstructed coefficients")
    barley = data["reconstructed_coefficients"]["barley-arc"]
    lines.append(
        f"  barley-arc: coarse {barley['coarse']}, fine-pi {barley['fine-pi']} "
        f"({barley['note']})")
    return lines


def emit_report(fmt: str = "text") -> str:
    """Render the bundle; ``fmt`` is "text" or "json"."""
    data = build_report()
    if fmt == "json":
        return json.dumps(data, ensure_ascii=False, indent=2) + "\n"
    if fmt == "text":
        return "\n".join(_text_lines(data)) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")
