"""Companion figure for verification reports: verdict counts and the
distribution of hypothesis margins among passing graphs, rendered to PNG."""

from __future__ import annotations

_VERDICT_ORDER = ("pass", "vacuous", "boundary", "counterexample")
_VERDICT_COLORS = {
    "pass": "#2a9d8f",
    "vacuous": "#8d99ae",
    "boundary": "#e9c46a",
    "counterexample": "#e76f51",
}


def render_report_figure(
    counts: dict[str, int],
    pass_margins: list[float],
    path: str,
    title: str,
) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, (left, right) = plt.subplots(1, 2, figsize=(9.0, 3.6))
    values = [counts.get(v, 0) for v in _VERDICT_ORDER]
    bars = left.bar(
        _VERDICT_ORDER, values, color=[_VERDICT_COLORS[v] for v in _VERDICT_ORDER]
    )
    left.bar_label(bars, padding=2, fontsize=8)
    left.set_ylabel("graphs")
    left.set_title("verdicts", fontsize=10)
    left.tick_params(axis="x", labelrotation=20, labelsize=8)

    if pass_margins:
        right.hist(pass_margins, bins=min(40, max(10, len(pass_margins) // 20 + 1)),
                   color=_VERDICT_COLORS["pass"])
        right.set_xlabel("hypothesis margin")
        right.set_ylabel("passing graphs")
    else:
        right.text(0.5, 0.5, "no passing graphs", ha="center", va="center",
                   transform=right.transAxes, fontsize=10, color="#555555")
        right.set_xticks([])
        right.set_yticks([])
    right.set_title("margin among passes", fontsize=10)

    fig.suptitle(title, fontsize=11)
    fig.tight_layout(rect=(0, 0, 1, 0.94))
    fig.savefig(path, dpi=120)
    plt.close(fig)
