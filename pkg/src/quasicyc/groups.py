"""Finitely generated abelian groups Z_{m1} x .. x Z_{mr} x Z^s.

Elements are plain coordinate tuples in additive notation: torsion
coordinates live in {0..m_t-1}, free coordinates in Z.  Multiplicative
rendering (u, v, w, powers) exists only at the text boundary.

Characters are weight vectors on the torsion part; their values are
roots of unity of order N = lcm(cyclic orders).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from math import lcm

from .scalars import Scalar


class SpecMismatch(ValueError):
    """Element or weight vector does not fit the group spec."""


class InfiniteGroup(ValueError):
    """Exhaustive enumeration requested for a group with free part."""


_GEN_NAMES = ("u", "v", "w")

Element = tuple  # coordinate tuple; torsion first, then free


@dataclass(frozen=True)
class GroupSpec:
    cyclic_orders: tuple[int, ...]
    free_rank: int = 0

    def __post_init__(self):
        object.__setattr__(self, "cyclic_orders", tuple(self.cyclic_orders))
        if any(m < 2 for m in self.cyclic_orders):
            raise SpecMismatch("cyclic orders must be >= 2")
        if self.free_rank < 0 or len(self.cyclic_orders) + self.free_rank < 1:
            raise SpecMismatch("need at least one coordinate")

    # -- structure -----------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.cyclic_orders) + self.free_rank

    @property
    def torsion_rank(self) -> int:
        return len(self.cyclic_orders)

    @property
    def exponent(self) -> int:
        """N = lcm of the cyclic orders (1 for a free group)."""
        return lcm(*self.cyclic_orders) if self.cyclic_orders else 1

    def order(self):
        if self.free_rank:
            return None
        out = 1
        for m in self.cyclic_orders:
            out *= m
        return out

    # -- element arithmetic ----------------------------------------------------

    def reduce(self, coords) -> Element:
        coords = tuple(coords)
        if len(coords) != self.rank:
            raise SpecMismatch(
                f"element has {len(coords)} coordinates, spec wants {self.rank}"
            )
        return tuple(
            c % self.cyclic_orders[i] if i < self.torsion_rank else int(c)
            for i, c in enumerate(coords)
        )

    def identity(self) -> Element:
        return (0,) * self.rank

    def mul(self, g: Element, h: Element) -> Element:
        g, h = self.reduce(g), self.reduce(h)
        return self.reduce(a + b for a, b in zip(g, h))

    def inv(self, g: Element) -> Element:
        return self.reduce(-a for a in g)

    def mul_all(self, gs) -> Element:
        out = self.identity()
        for g in gs:
            out = self.mul(out, g)
        return out

    def is_identity(self, g: Element) -> bool:
        return all(c == 0 for c in self.reduce(g))

    # -- enumeration -----------------------------------------------------------

    def elements(self) -> list[Element]:
        """All elements, lexicographic; the basis order for linear algebra."""
        if self.free_rank:
            raise InfiniteGroup("group has a free part; use window_elements")
        return [tuple(g) for g in itertools.product(*(range(m) for m in self.cyclic_orders))]

    def window_elements(self, b: int) -> list[Element]:
        """Torsion coordinates in full, free coordinates in [-b, b]; lexicographic."""
        ranges = [range(m) for m in self.cyclic_orders]
        ranges += [range(-b, b + 1)] * self.free_rank
        return [tuple(g) for g in itertools.product(*ranges)]

    def sample_window(self, min_size: int = 1000) -> list[Element]:
        """Smallest centered window with at least min_size elements.

        Documented sampling domain for checks on groups with a free part.
        """
        if not self.free_rank:
            return self.elements()
        torsion = 1
        for m in self.cyclic_orders:
            torsion *= m
        b = 0
        while torsion * (2 * b + 1) ** self.free_rank < min_size:
            b += 1
        return self.window_elements(b)

    # -- characters --------------------------------------------------------------

    def check_weight(self, w) -> tuple[int, ...]:
        w = tuple(w)
        if len(w) != self.torsion_rank:
            raise SpecMismatch(
                f"weight has {len(w)} entries, torsion rank is {self.torsion_rank}"
            )
        return tuple(wi % m for wi, m in zip(w, self.cyclic_orders))

    def char_eval(self, w, g: Element) -> Scalar:
        """zeta_N^{sum_t w_t g_t N/m_t}; multiplicative in g, trivial at e."""
        w = self.check_weight(w)
        g = self.reduce(g)
        N = self.exponent
        e = 0
        for t, m in enumerate(self.cyclic_orders):
            e += w[t] * g[t] * (N // m)
        return Scalar.root_of_unity(N, e)

    def combine_weights(self, weights) -> tuple[int, ...]:
        """Weight of the pointwise product of the given characters."""
        total = [0] * self.torsion_rank
        for w in weights:
            w = self.check_weight(w)
            total = [(a + b) % m for a, b, m in zip(total, w, self.cyclic_orders)]
        return tuple(total)

    # -- text form -----------------------------------------------------------------

    def render_element(self, g: Element) -> str:
        g = self.reduce(g)
        if all(c == 0 for c in g):
            return "e"
        if self.rank <= len(_GEN_NAMES):
            parts = []
            for name, c in zip(_GEN_NAMES, g):
                if c == 1:
                    parts.append(name)
                elif c != 0:
                    parts.append(f"{name}^{c}")
            return "*".join(parts)
        return "(" + ",".join(str(c) for c in g) + ")"

    def parse_element(self, text: str) -> Element:
        s = text.strip()
        if not s:
            raise SpecMismatch("empty element text")
        if s.startswith("("):
            if not s.endswith(")"):
                raise SpecMismatch(f"unbalanced coordinate form: {text!r}")
            coords = [int(p) for p in s[1:-1].split(",")] if s[1:-1].strip() else []
            return self.reduce(coords)
        if s == "e":
            return self.identity()
        coords = [0] * self.rank
        for name, power in _iter_generator_factors(s, text):
            try:
                idx = _GEN_NAMES.index(name)
            except ValueError:
                raise SpecMismatch(f"unknown generator {name!r} in {text!r}") from None
            if idx >= self.rank:
                raise SpecMismatch(f"generator {name!r} out of range in {text!r}")
            coords[idx] += power
        return self.reduce(coords)


_FACTOR_RE = re.compile(r"([a-z])(\^(-?\d+))?")


def _iter_generator_factors(s: str, original: str = ""):
    pos = 0
    s = s.replace(" ", "")
    while pos < len(s):
        if s[pos] == "*":
            pos += 1
            continue
        m = _FACTOR_RE.match(s, pos)
        if not m:
            raise SpecMismatch(f"bad element text at position {pos}: {s!r}")
        yield m.group(1), int(m.group(3)) if m.group(3) else 1
        pos = m.end()
