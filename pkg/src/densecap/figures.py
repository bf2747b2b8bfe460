"""Data grids and gnuplot scripts for the six capacity figures.

Grids are 101x101 for surfaces and 401 points per curve. Temperature ranges
for the chi(T) curves and the D range of the DM plots are tool defaults.
"""
from dataclasses import dataclass

from .spinmodels import Model
from .sweep import Axis, SweepSpec

SURFACE_N = 101
CURVE_N = 401


@dataclass(frozen=True)
class Curve:
    J: float
    key: str  # the parameter held per curve besides J
    value: float


@dataclass(frozen=True)
class Figure:
    number: int
    title: str
    specs: tuple
    kind: str  # "surface" or "curves"
    x: str
    y: str = "chi"
    curves: tuple = ()


def _curve_specs(model, x_axis, curves):
    return tuple(
        SweepSpec(model, {"J": c.J, c.key: c.value}, (x_axis,)) for c in curves
    )


def figure(n):
    if n == 1:
        spec = SweepSpec(
            Model.XXZ, {"T": 0.05}, (Axis("J", -2, 2, SURFACE_N), Axis("Delta", -3, 3, SURFACE_N))
        )
        return Figure(1, "chi versus J and Delta (XXZ), T = 0.05", (spec,), "surface", "J", "Delta")
    if n == 2:
        curves = tuple(Curve(J, "T", T) for J in (1.0, -1.0) for T in (0.005, 0.5, 1.0))
        return Figure(2, "chi versus Delta (XXZ)", _curve_specs(Model.XXZ, Axis("Delta", -3, 3, CURVE_N), curves),
                      "curves", "Delta", curves=curves)
    if n == 3:
        curves = tuple(Curve(1.0, "Delta", d) for d in (-2.0, -0.9, 0.0, 1.0)) + tuple(
            Curve(-1.0, "Delta", d) for d in (-1.0, 0.0, 0.9, 2.0)
        )
        return Figure(3, "chi versus T (XXZ)", _curve_specs(Model.XXZ, Axis("T", 0.005, 2.5, CURVE_N), curves),
                      "curves", "T", curves=curves)
    if n == 4:
        spec = SweepSpec(Model.DM, {"T": 0.5}, (Axis("J", -2, 2, SURFACE_N), Axis("D", 0, 5, SURFACE_N)))
        return Figure(4, "chi versus J and D (DM), T = 0.5", (spec,), "surface", "J", "D")
    if n == 5:
        curves = tuple(Curve(J, "T", T) for J in (1.0, -1.0) for T in (0.3, 0.5, 0.8))
        return Figure(5, "chi versus D (DM)", _curve_specs(Model.DM, Axis("D", 0, 5, CURVE_N), curves),
                      "curves", "D", curves=curves)
    if n == 6:
        curves = tuple(Curve(J, "D", D) for J in (1.0, -1.0) for D in (5.0, 1.0, 0.0))
        return Figure(6, "chi versus T (DM)", _curve_specs(Model.DM, Axis("T", 0.005, 2.0, CURVE_N), curves),
                      "curves", "T", curves=curves)
    raise ValueError(f"no figure {n}; choose 1-6")


COLUMNS = {"J": 2, "Delta": 3, "D": 4, "T": 5, "chi": 6, "entropy_rho": 7, "concurrence": 8}


def gnuplot_script(fig, csv_name):
    lines = [
        f"# {fig.title}",
        "set datafile separator ','",
        "set terminal pngcairo size 1200,500",
        f"set output 'fig{fig.number}.png'",
        "eq(a, b) = abs(a - b) < 1e-9",
        "set multiplot layout 1,2",
    ]
    if fig.kind == "surface":
        xc, yc = COLUMNS[fig.x], COLUMNS[fig.y]
        # blank line between scan lines so the rows read as a grid
        src = f"< awk -F, 'NR>1 {{ if (NR>2 && ${xc}!=prev) print \"\"; prev=${xc}; print }}' {csv_name}"
        lines += [
            f"set xlabel '{fig.x}'",
            f"set ylabel '{fig.y}'",
            "set zlabel 'chi'",
            "set pm3d",
            f'splot "{src}" using {xc}:{yc}:6 with pm3d notitle',
            "set view map",
            "unset pm3d",
            "set contour base",
            "unset surface",
            "set cntrparam levels incremental 0, 0.25, 2",
            f'splot "{src}" using {xc}:{yc}:6 with lines title \'contour\'',
        ]
    else:
        xc = COLUMNS[fig.x]
        for J, panel in ((1.0, "AFM (J = 1)"), (-1.0, "FM (J = -1)")):
            terms = []
            for c in fig.curves:
                if c.J != J:
                    continue
                kc = COLUMNS[c.key]
                terms.append(
                    f"'{csv_name}' every ::1 using {xc}:((eq($2,{c.J:g}) && eq(${kc},{c.value:g})) ? $6 : NaN)"
                    f" with lines title '{c.key} = {c.value:g}'"
                )
            lines += [
                f"set title '{panel}'",
                f"set xlabel '{fig.x}'",
                "set ylabel 'chi'",
                "plot " + ", \\\n     ".join(terms),
            ]
    lines.append("unset multiplot")
    return "\n".join(lines) + "\n"
