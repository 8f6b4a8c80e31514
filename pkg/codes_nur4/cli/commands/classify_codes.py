import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import chain

import click

from cli.common import handle_errors, show_progress
from scripts import genmat
from scripts.classify import ClassifyOptions, classify_length, symmetry_counterexamples
from scripts.config import (DEFAULT_SHARD_SIZE, EMIT_CHOICES, FORMAT_CHOICES, JOBS_ENV_VAR,
                            NICE_POLICIES, OPTIMAL_INDEX_CAP, RunConfig, default_jobs)
from scripts.data_analysis import table_frame
from scripts.export import (output_path, records_for_range, write_records_csv,
                            write_records_jsonl, write_summary_csv, write_summary_json,
                            write_summary_xlsx)

logger = logging.getLogger(__name__)

SUMMARY_WRITERS = {
    "json": write_summary_json,
    "csv": write_summary_csv,
    "xlsx": write_summary_xlsx,
}


def _record_task(task):
    return records_for_range(*task)


def full_records(config, report):
    """Per-code records of every classified type, in candidate_index order."""
    tasks = []
    for rec in report.records:
        total = genmat.code_count(rec.n, rec.k0, rec.k1)
        for start in range(0, total, DEFAULT_SHARD_SIZE):
            tasks.append((rec.n, rec.k0, rec.k1, start, start + DEFAULT_SHARD_SIZE,
                          rec.max_dmin, config.with_nice, config.with_codewords))
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as executor:
            return list(chain.from_iterable(executor.map(_record_task, tasks)))
    return list(chain.from_iterable(map(_record_task, tasks)))


def run_classify(config):
    """Classify, print the table and write the requested files; returns the LengthReport."""
    options = ClassifyOptions(with_nice=config.with_nice, jobs=config.jobs,
                              allow_long_nice=config.allow_long_nice,
                              optimal_cap=config.optimal_cap, progress=config.progress)
    types = None if config.k0 is None else [(config.k0, config.k1)]
    report = classify_length(config.n, options, types=types)
    symmetry_counterexamples(report)

    policy = config.nice_policy if config.with_nice else None
    click.echo(table_frame([report], policy).to_string(index=False))

    stem = f"classify_n{config.n}" if types is None else f"classify_n{config.n}_k{config.k0}_{config.k1}"
    SUMMARY_WRITERS[config.format]([report], output_path(config.out_path, stem, config.format))
    if config.emit == "full":
        records = full_records(config, report)
        if config.format == "csv":
            write_records_csv(records, output_path(config.out_path, f"{stem}_codes", "csv"))
        else:
            write_records_jsonl(records, output_path(config.out_path, f"{stem}_codes", "jsonl"))
    return report


@click.command()
@click.option("--n", "n", type=int, required=True, help="Code length, 1..7.")
@click.option("--k0", type=int, default=None, help="Restrict to one type (with --k1).")
@click.option("--k1", type=int, default=None)
@click.option("--with-nice", is_flag=True, help="Compute duals and nice counts (n <= 6).")
@click.option("--allow-long-nice", is_flag=True, help="Allow --with-nice at n = 7.")
@click.option("--policy", type=click.Choice(NICE_POLICIES), default="both", show_default=True,
              help="Nice policy shown in the printed table.")
@click.option("--emit", type=click.Choice(EMIT_CHOICES), default="summary", show_default=True)
@click.option("--format", "fmt", type=click.Choice(FORMAT_CHOICES), default="json", show_default=True)
@click.option("--out", "out_path", type=click.Path(file_okay=False), default=".", show_default=True)
@click.option("--jobs", type=int, default=None, help=f"Worker processes (default ${JOBS_ENV_VAR} or 1).")
@click.option("--optimal-cap", type=int, default=OPTIMAL_INDEX_CAP, show_default=True,
              help="Most optimal candidate indices kept per type.")
@click.option("--with-codewords", is_flag=True, help="List the codewords in full records.")
@click.option("--no-progress", is_flag=True, help="Hide the progress bars.")
@handle_errors
def classify(n, k0, k1, with_nice, allow_long_nice, policy, emit, fmt, out_path, jobs,
             optimal_cap, with_codewords, no_progress):
    """Enumerate every code of length n and tabulate max(d_min), M and nice counts."""
    config = RunConfig(
        n=n, k0=k0, k1=k1,
        nice_policy=policy,
        with_nice=with_nice,
        allow_long_nice=allow_long_nice,
        emit=emit,
        format=fmt,
        out_path=out_path,
        jobs=default_jobs() if jobs is None else jobs,
        optimal_cap=optimal_cap,
        with_codewords=with_codewords,
        progress=show_progress(no_progress),
    ).validate()
    logger.info("classifying n=%d with %d job(s)", n, config.jobs)
    run_classify(config)
