"""Report payloads and renderers (json, csv, markdown) for the CLI.

Payloads are plain dicts with a schema tag; rendering is deterministic
(sorted keys, fixed column orders) so repeated runs are byte-identical.
"""

from __future__ import annotations

import csv
import io
import json

from .errors import HorizonError, PreconditionError

TABLE_SCHEMA = "normfilt.table/1"
COEFFS_SCHEMA = "normfilt.coeffs/1"
SALLY_SCHEMA = "normfilt.sally/1"
CHECK_SCHEMA = "normfilt.check/1"
CORPUS_SCHEMA = "normfilt.corpus/1"


def _ideal_strs(analysis, ideal):
    b = analysis.backend
    return [b.element_str(g) for g in b.min_gens(ideal)]


def _header(analysis) -> dict:
    return {
        "entry": analysis.name,
        "ring": analysis.backend.describe(),
        "dim": analysis.dim,
        "nmax": analysis.nmax,
        "ideal": _ideal_strs(analysis, analysis.ideal),
        "reduction": (
            _ideal_strs(analysis, analysis.reduction)
            if analysis.reduction is not None
            else None
        ),
        "reduction_source": analysis.reduction_source,
    }


def table_payload(analysis) -> dict:
    columns = ["n", "normal", "adic"]
    if analysis.reduction is not None:
        columns += ["jgood", "sally"]
    rows = []
    for n in range(analysis.nmax + 1):
        row = [n, analysis.normal_values[n], analysis.adic_values[n]]
        if analysis.reduction is not None:
            row += [analysis.jgood_values[n], analysis.sally_values[n]]
        rows.append(row)
    return {"schema": TABLE_SCHEMA, **_header(analysis), "columns": columns, "rows": rows}


def _fit_dict(fit, error):
    if fit is None:
        return {"error": error}
    out = {"e": list(fit.e), "stable_from": fit.stable_from}
    if fit.sectional_normal_genus is not None:
        out["g_s"] = fit.sectional_normal_genus
    return out


def coeffs_payload(analysis) -> dict:
    """Coefficient report; requires the normal fit (horizon error otherwise)."""
    if analysis.normal_fit is None:
        raise HorizonError(analysis.normal_fit_error)
    out = {
        "schema": COEFFS_SCHEMA,
        **_header(analysis),
        "e0": analysis.e0,
        "normal": _fit_dict(analysis.normal_fit, analysis.normal_fit_error),
        "adic": _fit_dict(analysis.adic_fit, analysis.adic_fit_error),
        "lambda_R_I1": analysis.lam_R_I1,
        "mu_ideal": analysis.mu_ideal,
        "mu_maximal": analysis.mu_maximal,
        "type": analysis.type_report.type,
        "type_source": analysis.type_report.source,
    }
    if analysis.reduction is not None:
        out["lambda_I1_J"] = analysis.lam_I1_J
        out["lambda_I2_JI1"] = analysis.sally_values[1]
        out["rn"] = analysis.rn
        if analysis.rn_error:
            out["rn_note"] = analysis.rn_error
        vv = analysis.vv
        out["valabrega_valla"] = {
            "certified_cm": vv.certified_cm,
            "inconclusive": vv.inconclusive,
            "first_failure": list(vv.first_failure) if vv.first_failure else None,
            "checked_upto": vv.checked_upto,
            "required_horizon": vv.required_horizon,
        }
    if analysis.sally_fit is not None:
        out["sally"] = {
            "s": list(analysis.sally_fit.coeffs),
            "stable_from": analysis.sally_fit.stable_from,
        }
    elif analysis.reduction is not None:
        out["sally"] = {"error": analysis.sally_fit_error}
    return out


def sally_payload(analysis) -> dict:
    """Sally report; needs a reduction (precondition) and a fit (horizon)."""
    if analysis.reduction is None:
        raise PreconditionError(
            "Sally module lengths need a certified reduction; none is available"
        )
    if analysis.sally_fit is None:
        raise HorizonError(analysis.sally_fit_error)
    return {
        "schema": SALLY_SCHEMA,
        **_header(analysis),
        "values": list(analysis.sally_values),
        "s": list(analysis.sally_fit.coeffs),
        "stable_from": analysis.sally_fit.stable_from,
        "s0_from_e": (
            analysis.normal_fit.e[1] - analysis.e0 + analysis.lam_R_I1
            if analysis.normal_fit is not None
            else None
        ),
    }


def check_payload(analysis, verdicts) -> dict:
    summary = {}
    for v in verdicts:
        summary[v.conclusion] = summary.get(v.conclusion, 0) + 1
    return {
        "schema": CHECK_SCHEMA,
        **_header(analysis),
        "numbers": dict(sorted(analysis.base_numbers().items())),
        "verdicts": [v.to_dict() for v in verdicts],
        "summary": dict(sorted(summary.items())),
    }


def corpus_payload(entries) -> dict:
    """entries: list of (file_name, check_payload)."""
    total = {}
    out_entries = []
    for file_name, payload in entries:
        for k, v in payload["summary"].items():
            total[k] = total.get(k, 0) + v
        out_entries.append({"file": file_name, **payload})
    return {
        "schema": CORPUS_SCHEMA,
        "entries": out_entries,
        "summary": dict(sorted(total.items())),
    }


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

TABLE_LABELS = {
    "n": "n",
    "normal": "λ(R/Ī^(n+1))",
    "adic": "λ(R/I^(n+1))",
    "jgood": "λ(R/J^n·Ī)",
    "sally": "λ(S̄_n)",
}


def _md_table(headers, rows) -> list[str]:
    out = ["| " + " | ".join(headers) + " |",
           "| " + " | ".join("---" for _ in headers) + " |"]
    out.extend("| " + " | ".join(str(c) for c in row) + " |" for row in rows)
    return out


def _csv_text(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _md_header(payload) -> list[str]:
    lines = [f"# {payload['entry']}", "", f"- ring: {payload['ring']}",
             f"- ideal: ({', '.join(payload['ideal'])})"]
    if payload.get("reduction") is not None:
        lines.append(
            f"- reduction J = ({', '.join(payload['reduction'])}) "
            f"[{payload['reduction_source']}]"
        )
    else:
        lines.append("- reduction: none certified")
    lines.append(f"- nmax: {payload['nmax']}")
    return lines


def _render_table(payload, fmt) -> str:
    if fmt == "csv":
        return _csv_text([payload["columns"], *payload["rows"]])
    headers = [TABLE_LABELS[c] for c in payload["columns"]]
    lines = _md_header(payload) + [""] + _md_table(headers, payload["rows"])
    return "\n".join(lines) + "\n"


def _coeff_rows(payload):
    rows = [("e0", payload["e0"])]
    for i, c in enumerate(payload["normal"].get("e", [])):
        if i:
            rows.append((f"e{i}_bar", c))
    if "g_s" in payload["normal"]:
        rows.append(("g_s", payload["normal"]["g_s"]))
    if "error" not in payload["normal"]:
        rows.append(("normal_stable_from", payload["normal"]["stable_from"]))
    for i, c in enumerate(payload["adic"].get("e", [])):
        if i:
            rows.append((f"e{i}", c))
    if "error" in payload["adic"]:
        rows.append(("adic_fit", payload["adic"]["error"]))
    if "sally" in payload:
        for i, c in enumerate(payload["sally"].get("s", [])):
            rows.append((f"s{i}_bar", c))
        if "error" in payload["sally"]:
            rows.append(("sally_fit", payload["sally"]["error"]))
    for key in ("lambda_R_I1", "lambda_I1_J", "lambda_I2_JI1", "rn",
                "mu_ideal", "mu_maximal", "type"):
        if key in payload and payload[key] is not None:
            rows.append((key, payload[key]))
    if "valabrega_valla" in payload:
        vv = payload["valabrega_valla"]
        if vv["first_failure"]:
            n, i, elem = vv["first_failure"]
            rows.append(("valabrega_valla", f"fails at degree {n} prefix {i} ({elem})"))
        elif vv["certified_cm"]:
            rows.append(("valabrega_valla", "certified Cohen-Macaulay"))
        else:
            rows.append((
                "valabrega_valla",
                f"inconclusive (checked to {vv['checked_upto']}, "
                f"need {vv['required_horizon']})",
            ))
    return rows


MD_COEFF_LABELS = {
    "e0": "e₀", "e1_bar": "ē₁", "e2_bar": "ē₂", "e3_bar": "ē₃", "e4_bar": "ē₄",
    "e1": "e₁", "e2": "e₂", "e3": "e₃", "e4": "e₄",
    "s0_bar": "s̄₀", "s1_bar": "s̄₁", "s2_bar": "s̄₂", "s3_bar": "s̄₃",
    "g_s": "g_s", "rn": "r", "type": "t(R)",
    "lambda_R_I1": "λ(R/Ī)", "lambda_I1_J": "λ(Ī/J)", "lambda_I2_JI1": "λ(Ī²/JĪ)",
    "mu_ideal": "μ(I)", "mu_maximal": "μ(m)",
}


def _render_coeffs(payload, fmt) -> str:
    rows = _coeff_rows(payload)
    if fmt == "csv":
        return _csv_text([("quantity", "value"), *rows])
    md_rows = [(MD_COEFF_LABELS.get(k, k), v) for k, v in rows]
    lines = _md_header(payload) + [""] + _md_table(("quantity", "value"), md_rows)
    return "\n".join(lines) + "\n"


def _render_sally(payload, fmt) -> str:
    if fmt == "csv":
        rows = [("n", "sally")] + [(n, v) for n, v in enumerate(payload["values"])]
        rows += [(f"s{i}_bar", c) for i, c in enumerate(payload["s"])]
        rows.append(("stable_from", payload["stable_from"]))
        return _csv_text(rows)
    lines = _md_header(payload) + [""]
    lines += _md_table(("n", "λ(S̄_n)"), list(enumerate(payload["values"])))
    lines.append("")
    coeff_rows = [(MD_COEFF_LABELS.get(f"s{i}_bar", f"s{i}_bar"), c)
                  for i, c in enumerate(payload["s"])]
    coeff_rows.append(("stable from", payload["stable_from"]))
    lines += _md_table(("quantity", "value"), coeff_rows)
    return "\n".join(lines) + "\n"


def _verdict_rows(verdicts):
    rows = []
    for v in verdicts:
        witness = "; ".join(
            f"degree {w['degree']}: {w['element']}" for w in v["witnesses"]
        )
        rows.append((v["check"], v["conclusion"], v["hypotheses_met"], v["detail"], witness))
    return rows


def _render_check(payload, fmt) -> str:
    if fmt == "csv":
        return _csv_text([
            ("check", "conclusion", "hypotheses_met", "detail", "witnesses"),
            *_verdict_rows(payload["verdicts"]),
        ])
    lines = _md_header(payload) + [""]
    summary = ", ".join(f"{k}: {v}" for k, v in payload["summary"].items())
    lines.append(f"Summary: {summary}")
    lines.append("")
    lines += _md_table(
        ("check", "conclusion", "detail"),
        [(c, conc, (d + (f" [witness {w}]" if w else "")))
         for c, conc, _, d, w in _verdict_rows(payload["verdicts"])],
    )
    return "\n".join(lines) + "\n"


def _render_corpus(payload, fmt) -> str:
    if fmt == "csv":
        rows = [("file", "entry", "check", "conclusion", "detail")]
        for e in payload["entries"]:
            for v in e["verdicts"]:
                rows.append((e["file"], e["entry"], v["check"], v["conclusion"], v["detail"]))
        return _csv_text(rows)
    lines = ["# corpus report", ""]
    summary = ", ".join(f"{k}: {v}" for k, v in payload["summary"].items())
    lines.append(f"Overall: {summary}")
    for e in payload["entries"]:
        lines.append("")
        lines.append(f"## {e['entry']} ({e['file']})")
        lines.append("")
        lines += _md_table(
            ("check", "conclusion"),
            [(v["check"], v["conclusion"]) for v in e["verdicts"]],
        )
    return "\n".join(lines) + "\n"


_RENDERERS = {
    TABLE_SCHEMA: _render_table,
    COEFFS_SCHEMA: _render_coeffs,
    SALLY_SCHEMA: _render_sally,
    CHECK_SCHEMA: _render_check,
    CORPUS_SCHEMA: _render_corpus,
}


def render(payload: dict, fmt: str) -> str:
    """Render a payload as json, csv, or md text."""
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    return _RENDERERS[payload["schema"]](payload, fmt)
