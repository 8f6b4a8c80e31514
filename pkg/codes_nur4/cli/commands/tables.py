import logging
import sys

import click
import pandas as pd

from cli.common import handle_errors, show_progress
from scripts.classify import ClassifyOptions, classify_length, symmetry_counterexamples
from scripts.config import CLASSIFY_LENGTH_GUARD, JOBS_ENV_VAR, NICE_LENGTH_DEFAULT, NICE_POLICIES, default_jobs
from scripts.data_analysis import (compare_with_published, nice_reconciliation,
                                   reconciliation_summary, table_frame, totals_frame)
from scripts.data_loader import load_fixture, load_published_tables
from scripts.errors import InvalidParameter

logger = logging.getLogger(__name__)

EXIT_MISMATCH = 1


def build_reports(max_n, jobs, progress):
    """LengthReports for 2..max_n; niceness only where it is tabulated."""
    reports = []
    for n in range(2, max_n + 1):
        options = ClassifyOptions(with_nice=n <= NICE_LENGTH_DEFAULT, jobs=jobs, progress=progress)
        logger.info("classifying n=%d", n)
        report = classify_length(n, options)
        symmetry_counterexamples(report)
        reports.append(report)
    return reports


def print_diff(reports, max_n, policies):
    """Print the reconciliation; returns the number of max_dmin / M mismatches."""
    published = load_published_tables(max_n)
    comparison = compare_with_published(reports, published)
    errata = comparison[comparison["erratum"]]
    mismatches = comparison[~comparison["match"] & ~comparison["erratum"]]
    agree = int(comparison["match"].sum())
    click.echo(f"\nmax(d_min) and M: {agree} of {len(comparison)} cells agree")
    if len(errata):
        click.echo(f"Known errata in the published tables ({len(errata)} cells, computed value is the correction):")
        click.echo(errata.drop(columns=["match", "erratum"]).to_string(index=False))
    if len(mismatches):
        logger.warning("%d max(d_min)/M cells differ from the published tables", len(mismatches))
        click.echo(mismatches.to_string(index=False))

    recon = nice_reconciliation(reports, published[published["n"].astype(int) <= NICE_LENGTH_DEFAULT],
                                policies)
    if not recon.empty:
        click.echo("\nNice reconciliation (rows agreeing per policy and reading):")
        click.echo(reconciliation_summary(recon).to_string(index=False))
        for policy, rows in recon.groupby("policy", sort=False):
            differing = rows[~rows["N_match"]].drop(columns="policy")
            click.echo(f"\nN column, policy {policy}: {len(rows) - len(differing)} rows match, "
                       f"{len(differing)} differ")
            if len(differing):
                click.echo(differing.to_string(index=False))

    for policy in policies:
        click.echo(f"\nTotals ({policy}):")
        click.echo(totals_frame(reports, load_fixture("totals"), policy).to_string(index=False))
    return len(mismatches)


@click.command()
@click.option("--max-n", type=int, default=CLASSIFY_LENGTH_GUARD, show_default=True,
              help="Largest length to classify, 2..7.")
@click.option("--diff", is_flag=True, help="Compare with the published tables.")
@click.option("--policy", type=click.Choice(NICE_POLICIES + ("all",)), default="both", show_default=True,
              help="Nice policy for the N column and the totals; 'all' reconciles every policy.")
@click.option("--jobs", type=int, default=None, help=f"Worker processes (default ${JOBS_ENV_VAR} or 1).")
@click.option("--no-progress", is_flag=True, help="Hide the progress bars.")
@handle_errors
def tables(max_n, diff, policy, jobs, no_progress):
    """Regenerate the classification tables for every length up to --max-n."""
    if not 2 <= max_n <= CLASSIFY_LENGTH_GUARD:
        raise InvalidParameter(f"--max-n must lie in 2..{CLASSIFY_LENGTH_GUARD}, got {max_n}")
    jobs = default_jobs() if jobs is None else jobs
    if jobs < 1:
        raise InvalidParameter(f"--jobs must be >= 1, got {jobs}")
    reports = build_reports(max_n, jobs, show_progress(no_progress))
    policies = NICE_POLICIES if policy == "all" else (policy,)
    shown = policies[0] if len(policies) == 1 else "both"

    for report in reports:
        policy_for_n = shown if report.nice_totals is not None else None
        frame = table_frame([report], policy_for_n)
        click.echo(f"\nn = {report.n}  ({report.total_enumerated} codes enumerated)")
        with pd.option_context("display.width", 120):
            click.echo(frame.to_string(index=False))

    if diff and print_diff(reports, max_n, policies):
        sys.exit(EXIT_MISMATCH)
