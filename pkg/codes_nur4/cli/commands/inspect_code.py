import json

import click

from cli.common import handle_errors
from scripts import genmat
from scripts.classify import ClassifyOptions, classify_type
from scripts.config import CLASSIFY_LENGTH_GUARD, DUAL_LENGTH_GUARD
from scripts.errors import LengthTooLarge
from scripts.export import build_code_record


def format_record(record):
    """Human-readable form of a CodeRecord."""
    lines = [
        f"spec: n={record.n} k0={record.k0} k1={record.k1} T={record.T} U={record.U} V={record.V}",
        f"candidate_index: {record.candidate_index}",
        "generator:",
        *(f"  {row}" for row in record.generator),
        f"d_min: {record.d_min}",
        "weight enumerator: " + " ".join(f"A{i}={a}" for i, a in record.weight_enumerator),
        "complete weight enumerator: " + " ".join(
            f"({t['n0']},{t['na']},{t['nb']},{t['nc']})x{t['count']}"
            for t in record.complete_weight_enumerator),
        f"res_dim: {record.res_dim}  tor_dim: {record.tor_dim}",
    ]
    if record.dual_sizes is not None:
        sizes = record.dual_sizes
        lines.append(f"dual sizes: left={sizes['left']} right={sizes['right']} "
                     f"intersection={sizes['intersection']}")
        nice = record.nice
        lines.append("nice: " + " ".join(
            f"{policy}={'yes' if nice[f'{policy}_nice'] else 'no'}"
            for policy in ("left", "right", "both", "intersection")))
    lines.append(f"self-orthogonal: {record.self_orthogonal}  QSD: {record.qsd}  "
                 f"Type IV: {record.type_iv}  quasi Type IV: {record.quasi_type_iv}")
    if record.optimal is not None:
        lines.append(f"optimal: {record.optimal}")
    lines.append(f"codewords ({len(record.codewords)}): " + " ".join(record.codewords))
    if record.left_dual is not None:
        lines.append(f"left dual ({len(record.left_dual)}): " + " ".join(record.left_dual))
        lines.append(f"right dual ({len(record.right_dual)}): " + " ".join(record.right_dual))
    return "\n".join(lines)


@click.command()
@click.argument("spec_text", nargs=-1, required=True)
@click.option("--json", "as_json", is_flag=True, help="Print the record as one JSON object.")
@click.option("--with-optimal", is_flag=True,
              help="Classify the whole type first so the record can say whether the code is optimal.")
@handle_errors
def inspect_code(spec_text, as_json, with_optimal):
    """Run the single-code pipeline on a spec such as: n=4 k0=1 k1=2 T=10 U=1 V=01"""
    spec = genmat.parse_spec_text(" ".join(spec_text))
    genmat.check_dense(spec.n, 2 * spec.k0 + spec.k1)
    max_dmin = None
    if with_optimal:
        if spec.n > CLASSIFY_LENGTH_GUARD:
            raise LengthTooLarge(f"--with-optimal classifies the whole type, limited to n <= {CLASSIFY_LENGTH_GUARD}")
        max_dmin = classify_type(spec.n, spec.k0, spec.k1, ClassifyOptions()).max_dmin
    record = build_code_record(spec, max_dmin=max_dmin,
                               with_nice=spec.n <= DUAL_LENGTH_GUARD, with_codewords=True)
    if as_json:
        click.echo(json.dumps(record.to_dict(), indent=2))
    else:
        click.echo(format_record(record))
