"""Per-code records and the JSON / JSONL / CSV / XLSX writers.

Everything written here is ordered by candidate_index and carries no
timestamps, so two runs over the same selection produce identical bytes.
"""
import json
import logging
import os
from dataclasses import asdict, dataclass

import pandas as pd

from scripts import genmat, metrics
from scripts.config import DUAL_LENGTH_GUARD, INSPECT_DUAL_LISTING_GUARD, NICE_LENGTH_DEFAULT
from scripts.duality import (dual_pair, is_qsd, is_quasi_type_iv, is_self_orthogonal,
                             is_type_iv, nice_report)
from scripts.errors import ParseError

logger = logging.getLogger(__name__)

CSV_COLUMNS = [
    "candidate_index", "n", "k0", "k1", "T", "U", "V", "d_min", "optimal", "we", "cwe",
    "res_dim", "tor_dim", "left_dual_size", "right_dual_size",
    "left_nice", "right_nice", "both_nice", "intersection_nice",
    "self_orthogonal", "qsd", "type_iv",
]
QUOTED_CSV_COLUMNS = ("we", "cwe")


@dataclass
class CodeRecord:
    candidate_index: int
    n: int
    k0: int
    k1: int
    T: str
    U: str
    V: str
    generator: list
    d_min: int
    weight_enumerator: list
    complete_weight_enumerator: list
    res_dim: int
    tor_dim: int
    dual_sizes: dict | None
    nice: dict | None
    self_orthogonal: bool
    qsd: bool
    type_iv: bool
    quasi_type_iv: bool
    optimal: bool | None
    codewords: list | None = None
    left_dual: list | None = None
    right_dual: list | None = None

    def to_dict(self):
        data = asdict(self)
        for key in ("codewords", "left_dual", "right_dual"):
            if data[key] is None:
                del data[key]
        return data

    def to_row(self):
        """One CSV row, keyed by CSV_COLUMNS."""
        we = metrics.WeightEnumerator(_coefficients(self.weight_enumerator, self.n))
        cwe = metrics.CompleteWeightEnumerator(tuple(
            (tuple(term[k] for k in metrics.CWE_KEYS), term["count"])
            for term in self.complete_weight_enumerator))
        dual_sizes = self.dual_sizes or {}
        nice = self.nice or {}
        return {
            "candidate_index": self.candidate_index,
            "n": self.n, "k0": self.k0, "k1": self.k1,
            "T": self.T, "U": self.U, "V": self.V,
            "d_min": self.d_min,
            "optimal": _flag(self.optimal),
            "we": we.polynomial(),
            "cwe": cwe.polynomial(),
            "res_dim": self.res_dim,
            "tor_dim": self.tor_dim,
            "left_dual_size": dual_sizes.get("left", ""),
            "right_dual_size": dual_sizes.get("right", ""),
            "left_nice": _flag(nice.get("left_nice")),
            "right_nice": _flag(nice.get("right_nice")),
            "both_nice": _flag(nice.get("both_nice")),
            "intersection_nice": _flag(nice.get("intersection_nice")),
            "self_orthogonal": _flag(self.self_orthogonal),
            "qsd": _flag(self.qsd),
            "type_iv": _flag(self.type_iv),
        }


def _flag(value):
    if value is None:
        return ""
    return "true" if value else "false"


def _coefficients(pairs, n):
    coefficients = [0] * (n + 1)
    for i, a in pairs:
        coefficients[i] = a
    return tuple(coefficients)


def build_code_record(spec, max_dmin=None, with_nice=None, with_codewords=False,
                      listing_guard=INSPECT_DUAL_LISTING_GUARD):
    """Full record of one spec; `max_dmin` of its type sets the optimal flag."""
    code = genmat.code_from_spec(spec)
    with_nice = spec.n <= NICE_LENGTH_DEFAULT if with_nice is None else with_nice
    d_min = metrics.min_distance(code)
    we = metrics.weight_enumerator(code)
    cwe = metrics.complete_weight_enumerator(code)
    dual_sizes = nice = None
    listing = {}
    if with_nice and spec.n <= DUAL_LENGTH_GUARD:
        report = nice_report(code)
        nice = report.to_dict()
        dual_sizes = dict(zip(("code", "left", "right", "intersection"), report.sizes))
        if with_codewords and spec.n <= listing_guard:
            pair = dual_pair(code)
            listing = {"left_dual": pair.left.word_strings(), "right_dual": pair.right.word_strings()}
    return CodeRecord(
        candidate_index=spec.candidate_index,
        n=spec.n, k0=spec.k0, k1=spec.k1,
        T=str(spec.T), U=str(spec.U), V=str(spec.V),
        generator=[str(row) for row in genmat.build_generator(spec).rows],
        d_min=d_min,
        weight_enumerator=we.pairs(),
        complete_weight_enumerator=cwe.records(),
        res_dim=metrics.binary_dimension(metrics.residue_code(code)),
        tor_dim=metrics.binary_dimension(metrics.torsion_code(code)),
        dual_sizes=dual_sizes,
        nice=nice,
        self_orthogonal=is_self_orthogonal(code),
        qsd=is_qsd(code),
        type_iv=is_type_iv(code),
        quasi_type_iv=is_quasi_type_iv(code),
        optimal=None if max_dmin is None else d_min == max_dmin,
        codewords=code.word_strings() if with_codewords else None,
        **listing,
    )


def records_for_range(n, k0, k1, start, stop, max_dmin, with_nice, with_codewords):
    """Records of candidates [start, stop) of one type (a shard of a full emit)."""
    return [build_code_record(spec, max_dmin, with_nice, with_codewords)
            for spec in genmat.enumerate_specs(n, k0, k1, start, stop)]


def spec_of_record(data):
    """Rebuild the GeneratorSpec of an exported record (JSON dict or CSV row)."""
    try:
        text = f"n={data['n']} k0={data['k0']} k1={data['k1']} T={data['T']} U={data['U']} V={data['V']}"
    except KeyError as exc:
        raise ParseError(f"record lacks field {exc}") from None
    spec = genmat.parse_spec_text(text)
    if "candidate_index" in data and int(data["candidate_index"]) != spec.candidate_index:
        raise ParseError(f"candidate_index {data['candidate_index']} does not match T/U/V")
    return spec


# --- Writers ---
def summary_frame(reports):
    """One row per TypeRecord of every report."""
    rows = []
    for report in reports:
        for rec in report.records:
            row = rec.to_dict()
            row.pop("optimal_indices")
            for field_name in ("nice_counts", "nice_optimal_counts"):
                counts = row.pop(field_name) or {}
                for policy, count in counts.items():
                    row[f"{field_name[:-1]}_{policy}"] = count
            rows.append(row)
    return pd.DataFrame(rows)


def write_summary_json(reports, path):
    payload = [report.to_dict() for report in reports]
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(payload[0] if len(payload) == 1 else payload, handle, indent=2)
        handle.write("\n")
    logger.info("wrote %s", path)


def write_summary_csv(reports, path):
    summary_frame(reports).to_csv(path, index=False, lineterminator="\n")
    logger.info("wrote %s", path)


def write_summary_xlsx(reports, path):
    with pd.ExcelWriter(path, engine="openpyxl") as writer:
        summary_frame(reports).to_excel(writer, sheet_name="types", index=False)
        totals = pd.DataFrame([{"n": r.n, "total_enumerated": r.total_enumerated,
                                **{f"nice_{p}": c for p, c in (r.nice_totals or {}).items()}}
                               for r in reports])
        totals.to_excel(writer, sheet_name="totals", index=False)
    logger.info("wrote %s", path)


def write_records_jsonl(records, path):
    with open(path, "w", encoding="utf-8") as handle:
        for record in records:
            handle.write(json.dumps(record.to_dict(), separators=(",", ":")) + "\n")
    logger.info("wrote %s", path)


def _csv_cell(column, value):
    text = "" if value is None else str(value)
    return f'"{text}"' if column in QUOTED_CSV_COLUMNS else text


def write_records_csv(records, path):
    """Fixed header, unquoted; only the enumerator polynomials are quoted."""
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(",".join(CSV_COLUMNS) + "\n")
        for record in records:
            row = record.to_row()
            handle.write(",".join(_csv_cell(col, row[col]) for col in CSV_COLUMNS) + "\n")
    logger.info("wrote %s", path)


def read_records_jsonl(path):
    with open(path, encoding="utf-8") as handle:
        return [json.loads(line) for line in handle if line.strip()]


def read_records_csv(path):
    frame = pd.read_csv(path, dtype=str, keep_default_na=False)
    return frame.to_dict(orient="records")


def output_path(out_dir, stem, extension):
    os.makedirs(out_dir, exist_ok=True)
    return os.path.join(out_dir, f"{stem}.{extension}")
