"""Deterministic numerical experiments: conflict sweeps and the growing-set table.

Each experiment returns plain rows (list of dicts) ready for
:func:`openbelief.documents.emit_table`. Grid points are i/n with
n = 1/step, so sweep endpoints land exactly on 0 and 1.
"""

from __future__ import annotations

from .combination import conflict_coefficient
from .distances import gbpa_distance
from .errors import DomainError
from .frames import Frame, Gbpa, make_gbpa
from .transforms import dif_betp

EXPERIMENTS = ("table1", "fig1", "fig2", "fig4")

EXPERIMENT_COLUMNS = {
    "table1": ("case", "d_bpa", "k"),
    "fig1": ("s", "t", "k_g"),
    "fig2": ("s", "t", "d_gbpa"),
    "fig4": ("t", "d_bpa", "dif_betp"),
}


def _grid(step: float) -> list[float]:
    if not 0.0 < step <= 0.5:
        raise DomainError(f"step must lie in (0, 0.5], got {step!r}")
    n = round(1.0 / step)
    if abs(n * step - 1.0) > 1e-9:
        raise DomainError(f"step {step!r} does not divide 1 evenly")
    return [i / n for i in range(n + 1)]


def _open_world_body(frame: Frame, weight: float) -> Gbpa:
    """Mass ``weight`` on {a}, the rest on the empty set."""
    return make_gbpa(frame, {frame.subset(["a"]): weight, frame.empty: 1.0 - weight})


def run_table1() -> list[dict[str, object]]:
    """Distance and conflict against a fixed body while a focal set grows.

    On the frame {1..20}, m1 puts 0.6 on {7} and 0.4 on A, where A grows
    from {1} to the whole frame one element at a time; m2 puts everything
    on {1,2,3}. The conflict coefficient is blind to the growth (it stays
    at 0.6 in every row) while the evidence distance tracks it.
    """
    frame = Frame([str(i) for i in range(1, 21)])
    m2 = make_gbpa(frame, {frame.subset(["1", "2", "3"]): 1.0})
    seven = frame.subset(["7"])
    rows: list[dict[str, object]] = []
    for size in range(1, 21):
        a = frame.subset(str(i) for i in range(1, size + 1))
        m1 = make_gbpa(frame, {seven: 0.6, a: 0.4})
        rows.append(
            {
                "case": _case_label(size),
                "d_bpa": gbpa_distance(m1, m2),
                "k": conflict_coefficient(m1, m2),
            }
        )
    return rows


def _case_label(size: int) -> str:
    if size <= 3:
        return "A={" + ",".join(str(i) for i in range(1, size + 1)) + "}"
    return f"A={{1,...,{size}}}"


def run_fig1_sweep(step: float = 0.1) -> list[dict[str, object]]:
    """Open-world conflict coefficient over the two-parameter family.

    m1 puts s on {a} and 1-s on the empty set, m2 likewise with t; the
    coefficient follows the closed form 1 - s*t, peaking at 1 whenever
    either body is all empty-set mass and vanishing at s = t = 1.
    """
    frame = Frame(["a"])
    grid = _grid(step)
    pool = {w: _open_world_body(frame, w) for w in grid}
    return [
        {"s": s, "t": t, "k_g": conflict_coefficient(pool[s], pool[t])}
        for s in grid
        for t in grid
    ]


def run_fig2_sweep(step: float = 0.1) -> list[dict[str, object]]:
    """Evidence distance over the same family; |s - t|, zero on the diagonal."""
    frame = Frame(["a"])
    grid = _grid(step)
    pool = {w: _open_world_body(frame, w) for w in grid}
    return [
        {"s": s, "t": t, "d_gbpa": gbpa_distance(pool[s], pool[t])}
        for s in grid
        for t in grid
    ]


def run_fig4_sweep(step: float = 0.1) -> list[dict[str, object]]:
    """Evidence distance vs betting distance against total ignorance.

    m1 is vacuous on {a, b}; m2 puts t on {a} and 1-t on {b}. The betting
    distance reports no disagreement at t = 0.5 while the evidence distance
    still reports 0.5 there.
    """
    frame = Frame(["a", "b"])
    m1 = make_gbpa(frame, {frame.full: 1.0})
    a, b = frame.subset(["a"]), frame.subset(["b"])
    rows: list[dict[str, object]] = []
    for t in _grid(step):
        m2 = make_gbpa(frame, {a: t, b: 1.0 - t})
        rows.append(
            {"t": t, "d_bpa": gbpa_distance(m1, m2), "dif_betp": dif_betp(m1, m2)}
        )
    return rows


def run_experiment(experiment: str, step: float = 0.1) -> list[dict[str, object]]:
    """Dispatch one named experiment; ``step`` is ignored by table1."""
    if experiment == "table1":
        return run_table1()
    if experiment == "fig1":
        return run_fig1_sweep(step)
    if experiment == "fig2":
        return run_fig2_sweep(step)
    if experiment == "fig4":
        return run_fig4_sweep(step)
    raise DomainError(f"unknown experiment {experiment!r}; expected one of {EXPERIMENTS}")
