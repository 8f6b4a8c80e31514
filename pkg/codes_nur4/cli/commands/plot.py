import logging

import click
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from cli.common import handle_errors, show_progress  # noqa: E402
from scripts.classify import ClassifyOptions, classify_length  # noqa: E402
from scripts.config import CLASSIFY_LENGTH_GUARD  # noqa: E402
from scripts.data_analysis import computed_frame  # noqa: E402
from scripts.errors import InvalidParameter  # noqa: E402

logger = logging.getLogger(__name__)


def plot_reports(reports, path):
    """One panel per length: max(d_min) per type, each bar labelled with M."""
    df = computed_frame(reports)
    lengths = sorted(df["n"].unique())
    fig, axes = plt.subplots(len(lengths), 1, figsize=(10, 2.6 * len(lengths)), squeeze=False)
    for ax, n in zip(axes[:, 0], lengths):
        rows = df[df["n"] == n]
        bars = ax.bar(rows["type"], rows["max_dmin"].astype(int), color="steelblue")
        for bar, m in zip(bars, rows["M"]):
            ax.annotate(f"M={m}", (bar.get_x() + bar.get_width() / 2, bar.get_height()),
                        ha="center", va="bottom", fontsize=7)
        ax.set_title(f"n = {n}")
        ax.set_ylabel("max(d_min)")
        ax.set_ylim(0, n + 1)
        ax.tick_params(axis="x", labelsize=7, rotation=45)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    logger.info("wrote %s", path)


@click.command()
@click.option("--max-n", type=int, default=6, show_default=True, help="Largest length to plot, 2..7.")
@click.option("--out", "out_path", type=click.Path(dir_okay=False), default="max_dmin.png", show_default=True)
@click.option("--no-progress", is_flag=True, help="Hide the progress bars.")
@handle_errors
def plot(max_n, out_path, no_progress):
    """Bar chart of max(d_min) per type, one panel per length."""
    if not 2 <= max_n <= CLASSIFY_LENGTH_GUARD:
        raise InvalidParameter(f"--max-n must lie in 2..{CLASSIFY_LENGTH_GUARD}, got {max_n}")
    options = ClassifyOptions(progress=show_progress(no_progress))
    reports = [classify_length(n, options) for n in range(2, max_n + 1)]
    plot_reports(reports, out_path)
    click.echo(out_path)
