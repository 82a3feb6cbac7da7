"""Text and JSON reports over a fixed menu of analyses."""
from __future__ import annotations

import json
from dataclasses import fields
from fractions import Fraction

from .analysis import alpha_core_range, core_nonempty, nucleolus
from .errors import GatelyError
from .game import Game, classify, harsanyi_dividends
from .io import coalition_label, decimal_string, default_labels, format_number
from .values import (
    alpha_gately_value,
    dual_alpha_gately,
    equal_division,
    gately_value,
    shapley_value,
)

# report order is this order, whatever order the caller asks in
ANALYSES = (
    "classify",
    "gately",
    "alpha_gately",
    "dual_gately",
    "shapley",
    "nucleolus",
    "equal",
    "dividends",
    "core",
    "alpha_range",
)


def _number(x):
    if isinstance(x, (Fraction, int)) and not isinstance(x, bool):
        x = Fraction(x)
        text = str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return {"value": text, "decimal": decimal_string(x)}
    return {"value": float(x), "approx": True}


def _allocation(x, labels):
    return {"kind": "allocation", "entries": [(labels[i], v) for i, v in enumerate(x)]}


def _run(name: str, g: Game, labels, alpha):
    if name == "classify":
        report = classify(g)
        return {"kind": "fields", "entries": [(f.name, getattr(report, f.name)) for f in fields(report)]}
    if name == "gately":
        return _allocation(gately_value(g), labels)
    if name == "alpha_gately":
        return _allocation(alpha_gately_value(g, 1 if alpha is None else alpha), labels)
    if name == "dual_gately":
        return _allocation(dual_alpha_gately(g, 1 if alpha is None else alpha), labels)
    if name == "shapley":
        return _allocation(shapley_value(g), labels)
    if name == "nucleolus":
        return _allocation(nucleolus(g), labels)
    if name == "equal":
        return _allocation(equal_division(g), labels)
    if name == "dividends":
        d = harsanyi_dividends(g)
        return {"kind": "coalitions", "entries": [(coalition_label(s, labels), d[s]) for s in d.carrier]}
    if name == "core":
        status = core_nonempty(g)
        entries = [("nonempty", status.nonempty)]
        if status.witness is not None:
            entries.append(("witness", [(labels[i], v) for i, v in enumerate(status.witness)]))
        return {"kind": "fields", "entries": entries}
    if name == "alpha_range":
        rng = alpha_core_range(g)
        return {"kind": "intervals", "entries": [
            (iv.lo, iv.hi, iv.approx_lo or iv.approx_hi) for iv in rng.intervals]}
    raise ValueError(f"unknown analysis {name!r}")


def collect(g: Game, requested, labels=None, alpha=None) -> list[tuple[str, dict]]:
    """Run the requested analyses; failures are kept as error entries."""
    unknown = set(requested) - set(ANALYSES)
    if unknown:
        raise ValueError(f"unknown analyses: {', '.join(sorted(unknown))}")
    labels = tuple(labels) if labels is not None else default_labels(g.n)
    out = []
    for name in ANALYSES:
        if name not in requested:
            continue
        try:
            out.append((name, _run(name, g, labels, alpha)))
        except GatelyError as exc:
            out.append((name, {"kind": "error", "error": type(exc).__name__, "message": str(exc)}))
    return out


def _json_value(v):
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, (tuple, list)):
        if v and all(isinstance(e, tuple) and len(e) == 2 for e in v):
            return {k: _json_value(x) for k, x in v}
        return [_json_value(e) for e in v]
    return _number(v)


def _json_section(sec: dict):
    kind = sec["kind"]
    if kind == "error":
        return {"error": sec["error"], "message": sec["message"]}
    if kind == "intervals":
        return [{"lo": lo, "hi": hi, "approx": approx} for lo, hi, approx in sec["entries"]]
    return {k: _json_value(v) for k, v in sec["entries"]}


def _text_value(v) -> str:
    if isinstance(v, bool) or v is None:
        return str(v).lower() if v is not None else "n/a"
    if isinstance(v, (tuple, list)):
        if v and all(isinstance(e, tuple) and len(e) == 2 for e in v):
            return "(" + ", ".join(f"{k}: {format_number(x)}" for k, x in v) + ")"
        return "(" + ", ".join(format_number(x) for x in v) + ")"
    return format_number(v)


def _text_section(name: str, sec: dict) -> list[str]:
    lines = [f"[{name}]"]
    kind = sec["kind"]
    if kind == "error":
        lines.append(f"  error: {sec['error']}: {sec['message']}")
    elif kind == "intervals":
        if not sec["entries"]:
            lines.append("  empty")
        for lo, hi, approx in sec["entries"]:
            tag = " (approx)" if approx else ""
            lines.append(f"  [{lo:.{12}g}, {hi:.{12}g}]{tag}")
    else:
        for k, v in sec["entries"]:
            lines.append(f"  {k}: {_text_value(v)}")
    return lines


def emit_report(g: Game, requested, format: str = "text", labels=None, alpha=None, name: str | None = None) -> str:
    sections = collect(g, requested, labels, alpha)
    labels = tuple(labels) if labels is not None else default_labels(g.n)
    if format == "json":
        doc = {"game": name, "players": list(labels)}
        if alpha is not None:
            doc["alpha"] = _number(alpha)
        doc["analyses"] = {k: _json_section(sec) for k, sec in sections}
        return json.dumps(doc, indent=2) + "\n"
    if format != "text":
        raise ValueError(f"unknown report format {format!r}")
    head = f"game: {name}" if name else "game"
    lines = [f"{head} ({g.n} players: {', '.join(labels)})"]
    for k, sec in sections:
        lines.extend(_text_section(k, sec))
    return "\n".join(lines) + "\n"
