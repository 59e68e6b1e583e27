"""Tabular and graphical renderings of search reports."""

from __future__ import annotations

from pathlib import Path

from .harness import SearchReport

TABLE_COLUMNS = ("theorem", "n", "graphs", "hypothesis", "hamiltonian", "counterexamples")


def table_rows(reports: list[SearchReport]) -> list[tuple]:
    rows = []
    for rep in reports:
        bad = len(rep.counterexamples)
        for n in sorted(rep.per_n):
            s, h, m = rep.per_n[n]
            rows.append((rep.theorem, n, s, h, m, bad if n == max(rep.per_n) else 0))
    return rows


def write_table(reports: list[SearchReport], path: str | Path) -> None:
    """Tab-separated per-``n`` counts; counterexamples are attributed to the last row."""
    lines = ["\t".join(TABLE_COLUMNS)]
    lines += ["\t".join(str(x) for x in row) for row in table_rows(reports)]
    Path(path).write_text("\n".join(lines) + "\n", encoding="ascii")


def plot_reports(reports: list[SearchReport], path: str | Path) -> None:
    """Bar chart of hypothesis hits against Hamiltonian graphs per ``n``.

    A clean run shows the two bars of each pair at equal height.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7, 4))
    width = 0.8 / max(1, 2 * len(reports))
    for k, rep in enumerate(reports):
        ns = sorted(rep.per_n)
        hyp = [max(rep.per_n[n][1], 0) for n in ns]
        ham = [max(rep.per_n[n][2], 0) for n in ns]
        off = (2 * k) * width - 0.4 + width / 2
        ax.bar([n + off for n in ns], hyp, width, label=f"{rep.theorem} hypothesis")
        ax.bar([n + off + width for n in ns], ham, width, label=f"{rep.theorem} hamiltonian", hatch="//")
    ax.set_xlabel("n")
    ax.set_ylabel("labelled graphs")
    if any(v for rep in reports for row in rep.per_n.values() for v in row[1:]):
        ax.set_yscale("log")
    ax.legend(fontsize="small")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
