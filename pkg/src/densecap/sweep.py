"""Parameter grids, per-point records and their CSV/JSON encodings."""
import io
import json
import math
from dataclasses import dataclass, field

import numpy as np

from .densecoding import capacity_closed, capacity_generic, closed_entropy_bits, validity
from .entanglement import concurrence
from .spinmodels import Model, ModelParams, thermal_state

CSV_HEADER = "model,J,Delta,D,T,chi,entropy_rho,concurrence,valid"
FIELDS = tuple(CSV_HEADER.split(","))
OUTPUTS = frozenset({"chi", "entropy", "concurrence", "valid"})
PARAM_NAMES = {"j": "J", "delta": "Delta", "d": "D", "t": "T"}


class SpecError(ValueError):
    """Malformed sweep specification (a usage error, not a domain error)."""


def canonical_param(name, model):
    key = PARAM_NAMES.get(name.strip().lower())
    if key is None:
        raise SpecError(f"unknown parameter {name!r}; expected one of J, Delta, D, T")
    if (key == "Delta" and model is Model.DM) or (key == "D" and model is Model.XXZ):
        raise SpecError(f"parameter {key} does not belong to the {model.value} model")
    return key


@dataclass(frozen=True)
class Axis:
    name: str
    start: float
    stop: float
    count: int

    def values(self):
        # start + (stop - start) * i / (n - 1): exact endpoints, exact 0 on symmetric ranges
        i = np.arange(self.count)
        return self.start + (self.stop - self.start) * i / (self.count - 1)


@dataclass(frozen=True)
class SweepSpec:
    model: Model
    fixed: dict
    axes: tuple
    outputs: frozenset = field(default=OUTPUTS)

    def __post_init__(self):
        model = Model(self.model)
        object.__setattr__(self, "model", model)
        fixed = {canonical_param(k, model): float(v) for k, v in self.fixed.items()}
        axes = tuple(
            Axis(canonical_param(a.name, model), float(a.start), float(a.stop), int(a.count)) for a in self.axes
        )
        object.__setattr__(self, "fixed", fixed)
        object.__setattr__(self, "axes", axes)
        object.__setattr__(self, "outputs", frozenset(self.outputs))
        if not 1 <= len(axes) <= 2:
            raise SpecError("a sweep needs one or two axes")
        names = [a.name for a in axes]
        if len(set(names)) != len(names):
            raise SpecError("axes must be distinct")
        if set(names) & set(fixed):
            raise SpecError(f"parameters {sorted(set(names) & set(fixed))} are both fixed and swept")
        for a in axes:
            if a.count < 2:
                raise SpecError(f"axis {a.name} needs at least 2 steps")
        aniso = "Delta" if model is Model.XXZ else "D"
        missing = {"J", aniso, "T"} - set(names) - set(fixed)
        if missing:
            raise SpecError(f"missing values for {sorted(missing)}")
        if not self.outputs <= OUTPUTS or not self.outputs:
            raise SpecError(f"outputs must be a non-empty subset of {sorted(OUTPUTS)}")

    def points(self):
        """ModelParams in row-major order (first axis outermost)."""
        aniso = "Delta" if self.model is Model.XXZ else "D"
        grids = [a.values() for a in self.axes]
        if len(grids) == 1:
            combos = ((x,) for x in grids[0])
        else:
            combos = ((x, y) for x in grids[0] for y in grids[1])
        for combo in combos:
            vals = dict(self.fixed)
            vals.update(zip((a.name for a in self.axes), combo))
            yield ModelParams(self.model, float(vals["J"]), float(vals[aniso]), float(vals["T"]))


@dataclass(frozen=True)
class SweepRecord:
    model: str
    J: float
    Delta: float | None
    D: float | None
    T: float
    chi: float | None
    entropy_rho: float | None
    concurrence: float | None
    valid: bool | None

    def as_dict(self):
        return {k: getattr(self, k) for k in FIELDS}


def evaluate(params, outputs=OUTPUTS):
    """One record; chi comes from the closed form except at J = 0."""
    need_chi = bool(outputs & {"chi", "entropy", "valid"})
    chi = s_rho = valid = conc = None
    rho = None
    if "concurrence" in outputs or (need_chi and params.J == 0.0):
        rho = thermal_state(params).rho
    if need_chi:
        if params.J == 0.0:
            res = capacity_generic(rho, params)
            chi, s_rho, valid = res.chi, res.entropy_rho, res.valid_for_dense_coding
        else:
            chi, valid = capacity_closed(params), validity(params)
            s_rho = float(closed_entropy_bits(params.kind, params.J, params.anisotropy, params.T))
    if "concurrence" in outputs:
        conc = concurrence(rho)
    xxz = params.kind is Model.XXZ
    return SweepRecord(
        model=params.kind.value,
        J=params.J,
        Delta=params.anisotropy if xxz else None,
        D=None if xxz else params.anisotropy,
        T=params.T,
        chi=chi if "chi" in outputs else None,
        entropy_rho=s_rho if "entropy" in outputs else None,
        concurrence=conc,
        valid=valid if "valid" in outputs else None,
    )


def run_sweep(spec):
    return [evaluate(p, spec.outputs) for p in spec.points()]


def format_float(x):
    if x is None:
        return ""
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"non-finite value {x!r} in output")
    if x == 0.0:
        x = 0.0  # drop the sign of -0.0
    return format(x, ".12g")


def format_value(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, str):
        return v
    return format_float(v)


def csv_row(rec):
    return ",".join(format_value(getattr(rec, k)) for k in FIELDS)


def to_csv(records, header=True):
    buf = io.StringIO()
    if header:
        buf.write(CSV_HEADER + "\n")
    for rec in records:
        buf.write(csv_row(rec) + "\n")
    return buf.getvalue()


def _json_value(v):
    if v is None or isinstance(v, (bool, str)):
        return v
    return float(format_float(v))


def to_json(records):
    rows = [{k: _json_value(getattr(r, k)) for k in FIELDS} for r in records]
    return json.dumps(rows, indent=1) + "\n"


def parse_csv(text):
    """Inverse of ``to_csv``: list of dicts with floats, bools and None."""
    lines = text.split("\n")
    if lines[0] != CSV_HEADER:
        raise ValueError("unexpected CSV header")
    out = []
    for line in lines[1:]:
        if not line:
            continue
        row = {}
        for k, s in zip(FIELDS, line.split(",")):
            if s == "":
                row[k] = None
            elif k == "model":
                row[k] = s
            elif k == "valid":
                row[k] = s == "true"
            else:
                row[k] = float(s)
        out.append(row)
    return out
