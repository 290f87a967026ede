"""Built-in and JSON-loaded presets bundling a group, a twist and a calculus.

Three built-ins:

  octonion    Z2^3 with the sign-valued twist whose quasialgebra is the
              octonions, three sign characters, 3-dimensional calculus
  torus       Z^2 with the q-valued twist (noncommutative torus relations),
              derivations calculus
  z2_trivial  Z2 untwisted with the sign character; baseline preset

The JSON schema mirrors the Preset fields:

  {"name": ..., "group": {"cyclic_orders": [...], "free_rank": n},
   "scalars": "rational"|"cyclotomic"|"laurent",
   "cochain_F": {"expr": ..., "base": "root_of_unity", "order": N}
              | {"expr": ..., "base": "laurent"}
              | {"table": [[[g coords], [h coords], "scalar"], ...]},
   "calculus": {"kind": "characters", "weights": [[...], ...]}
             | {"kind": "derivations"},
   "ribbon": [...]}            # optional; defaults to the sum of weights
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .calculus import CalculusSpec
from .cochains import Cochain2
from .groups import GroupSpec
from .scalars import parse_scalar

OCTONION_EXPR = "i1*(j1+j2+j3)+i2*(j2+j3)+i3*j3+j1*i2*i3+i1*j2*i3+i1*i2*j3"
TORUS_EXPR = "i2*j1"

_RING_NAMES = ("rational", "cyclotomic", "laurent")


@dataclass(frozen=True)
class Preset:
    name: str
    group: GroupSpec
    scalars: str
    cochain_spec: tuple
    calculus_kind: str
    weights: tuple = ()
    ribbon: tuple | None = None

    def __post_init__(self):
        if self.scalars not in _RING_NAMES:
            raise ValueError(f"unknown scalar ring {self.scalars!r}")
        if self.calculus_kind == "characters" and not self.weights:
            raise ValueError("characters calculus needs weights")

    def cochain(self) -> Cochain2:
        kind = self.cochain_spec[0]
        if kind == "expr":
            _, base, expr = self.cochain_spec
            return Cochain2.from_expr(self.group, base, expr)
        _, entries = self.cochain_spec
        return Cochain2.from_table(self.group, entries)

    def calculus(self) -> CalculusSpec:
        return CalculusSpec(self.group, self.calculus_kind, tuple(self.weights))

    def ribbon_weight(self) -> tuple[int, ...]:
        if self.ribbon is not None:
            return self.group.check_weight(self.ribbon)
        if self.calculus_kind == "characters":
            return self.group.combine_weights(self.weights)
        return ()


def builtin(name: str) -> Preset:
    if name == "octonion":
        return Preset(
            name="octonion",
            group=GroupSpec((2, 2, 2)),
            scalars="rational",
            cochain_spec=("expr", ("root_of_unity", 2), OCTONION_EXPR),
            calculus_kind="characters",
            weights=((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        )
    if name == "torus":
        return Preset(
            name="torus",
            group=GroupSpec((), free_rank=2),
            scalars="laurent",
            cochain_spec=("expr", ("laurent",), TORUS_EXPR),
            calculus_kind="derivations",
        )
    if name == "z2_trivial":
        return Preset(
            name="z2_trivial",
            group=GroupSpec((2,)),
            scalars="rational",
            cochain_spec=("expr", ("root_of_unity", 2), "0"),
            calculus_kind="characters",
            weights=((1,),),
        )
    raise KeyError(f"no built-in preset {name!r}")


BUILTIN_NAMES = ("octonion", "torus", "z2_trivial")


def from_dict(data: dict) -> Preset:
    group = GroupSpec(
        tuple(data["group"].get("cyclic_orders", ())),
        data["group"].get("free_rank", 0),
    )
    scalars = data["scalars"]
    cf = data["cochain_F"]
    if "expr" in cf:
        if cf["base"] == "root_of_unity":
            base = ("root_of_unity", cf["order"])
        elif cf["base"] == "laurent":
            base = ("laurent",)
        else:
            raise ValueError(f"unknown cochain base {cf['base']!r}")
        cochain_spec = ("expr", base, cf["expr"])
    elif "table" in cf:
        order = data.get("cochain_order", group.exponent)
        entries = [
            (tuple(g), tuple(h), parse_scalar(s, scalars, order))
            for g, h, s in cf["table"]
        ]
        cochain_spec = ("table", tuple(entries))
    else:
        raise ValueError("cochain_F needs an expr or a table")
    calc = data["calculus"]
    weights = tuple(tuple(w) for w in calc.get("weights", ()))
    ribbon = tuple(data["ribbon"]) if "ribbon" in data else None
    return Preset(
        name=data["name"],
        group=group,
        scalars=scalars,
        cochain_spec=cochain_spec,
        calculus_kind=calc["kind"],
        weights=weights,
        ribbon=ribbon,
    )


def load(name_or_path: str) -> Preset:
    """Built-in preset name, or a path to a preset JSON file."""
    if name_or_path in BUILTIN_NAMES:
        return builtin(name_or_path)
    with open(name_or_path) as fh:
        return from_dict(json.load(fh))
