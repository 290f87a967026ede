"""Covariant differential calculi on a group quasialgebra.

Two kinds:

  characters   n commuting generators; relations w_i a = chi_i(a) a w_i
               for chosen characters chi_1..chi_n of the group
  derivations  one generator per free coordinate; w_k central; d reads
               off the coordinate exponents (requires a torsion-free group)

Forms are finitely supported maps (g, S) -> Scalar with S a subset of
{1..n}; the group part multiplies on the left of the wedge monomial w_S.
d(a w_S) = (da) w_S, where da is sum_i (chi_i(a)-1) a w_i for the
characters kind and sum_k coord_k(a) a w_k for derivations.  Twisting by
a 2-cochain F changes only the product, never d.

The integral takes the coefficient of the top wedge monomial at the group
identity; terms below top degree integrate to 0 and raise
LowerDegreeIgnored so silent truncation cannot hide a degree bug.
"""

from __future__ import annotations

import itertools
import random
import warnings
from dataclasses import dataclass

from .cochains import LawReport, braiding_R
from .groups import GroupSpec, SpecMismatch
from .quasialgebra import GradedElement
from .scalars import Scalar


class DegreeMismatch(ValueError):
    """Tuple length or form degree does not match the calculus dimension."""


class KindMismatch(ValueError):
    """Operation asked of the wrong calculus kind or preset shape."""


class LowerDegreeIgnored(UserWarning):
    """Integral or top projection dropped terms below top degree."""


@dataclass(frozen=True)
class CalculusSpec:
    group: GroupSpec
    kind: str
    weights: tuple = ()

    def __post_init__(self):
        if self.kind == "characters":
            if not self.weights:
                raise KindMismatch("characters kind needs at least one weight vector")
            object.__setattr__(
                self, "weights", tuple(self.group.check_weight(w) for w in self.weights)
            )
        elif self.kind == "derivations":
            if self.weights:
                raise KindMismatch("derivations kind takes no weight vectors")
            if self.group.free_rank < 1 or self.group.torsion_rank:
                raise KindMismatch("derivations kind needs a torsion-free group")
        else:
            raise KindMismatch(f"unknown calculus kind {self.kind!r}")

    @property
    def n(self) -> int:
        """Dimension: number of generating 1-forms."""
        if self.kind == "characters":
            return len(self.weights)
        return self.group.free_rank

    def chi(self, i: int, g) -> Scalar:
        """Commutation character of w_i (1-based); trivial for derivations."""
        if self.kind == "characters":
            return self.group.char_eval(self.weights[i - 1], g)
        return Scalar.one()

    def deriv_coeff(self, i: int, g) -> int:
        return self.group.reduce(g)[i - 1]

    def ribbon_weight(self) -> tuple[int, ...]:
        """Weight of chi = prod_i chi_i, the grade character of the calculus."""
        if self.kind == "characters":
            return self.group.combine_weights(self.weights)
        return ()

    def chi_total(self, g) -> Scalar:
        return self.group.char_eval(self.ribbon_weight(), g)


class Form:
    """Finitely supported map (g, S) -> Scalar, S a sorted index tuple."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec: CalculusSpec, terms=()):
        self.spec = spec
        acc: dict = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for (g, S), c in items:
            if not isinstance(c, Scalar):
                c = Scalar.rational(c)
            key = (spec.group.reduce(g), _check_indices(spec, S))
            prev = acc.get(key)
            c = prev + c if prev is not None else c
            if c.is_zero():
                acc.pop(key, None)
            else:
                acc[key] = c
        self.terms = acc

    @classmethod
    def basis(cls, spec: CalculusSpec, g, S=(), coeff=1) -> "Form":
        return cls(spec, [((g, tuple(S)), coeff)])

    @classmethod
    def zero(cls, spec: CalculusSpec) -> "Form":
        return cls(spec)

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> list[int]:
        return sorted({len(S) for _, S in self.terms})

    def coefficient(self, g, S) -> Scalar:
        key = (self.spec.group.reduce(g), _check_indices(self.spec, S))
        return self.terms.get(key, Scalar.zero())

    def __add__(self, other: "Form") -> "Form":
        self._check(other)
        return Form(self.spec, list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other: "Form") -> "Form":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "Form":
        if not isinstance(scalar, Scalar):
            scalar = Scalar.rational(scalar)
        return Form(self.spec, [(k, scalar * c) for k, c in self.terms.items()])

    def __neg__(self):
        return (-1) * self

    def __eq__(self, other):
        return (
            isinstance(other, Form)
            and self.spec == other.spec
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.spec, frozenset(self.terms.items())))

    def _check(self, other: "Form"):
        if self.spec != other.spec:
            raise SpecMismatch("forms live over different calculi")

    def __str__(self):
        return render_form(self)

    def __repr__(self):
        return f"Form({render_form(self)!r})"


def _check_indices(spec: CalculusSpec, S) -> tuple[int, ...]:
    S = tuple(S)
    if list(S) != sorted(set(S)):
        raise SpecMismatch(f"wedge indices must be strictly increasing, got {S}")
    if S and (S[0] < 1 or S[-1] > spec.n):
        raise SpecMismatch(f"wedge index out of range 1..{spec.n}: {S}")
    return S


def _shuffle_sign(S, T) -> int:
    inv = sum(1 for s in S for t in T if s > t)
    return -1 if inv % 2 else 1


def form_product(spec: CalculusSpec, x: Form, y: Form, F=None) -> Form:
    """Product of forms; pass F to twist the group-part multiplication."""
    if x.spec != spec or y.spec != spec:
        raise SpecMismatch("forms do not belong to this calculus")
    if F is not None and F.group != spec.group:
        raise SpecMismatch("cochain group does not match the calculus group")
    grp = spec.group
    out = []
    for (g, S), cx in x.terms.items():
        for (h, T), cy in y.terms.items():
            if set(S) & set(T):
                continue
            c = cx * cy
            if _shuffle_sign(S, T) < 0:
                c = -c
            for i in S:
                c = c * spec.chi(i, h)
            if F is not None:
                c = c * F.value(g, h)
            out.append(((grp.mul(g, h), tuple(sorted(S + T))), c))
    return Form(spec, out)


def differential(spec: CalculusSpec, x: Form) -> Form:
    """d(a w_S) = (da) w_S; the same map for twisted and untwisted products."""
    if x.spec != spec:
        raise SpecMismatch("form does not belong to this calculus")
    out = []
    for (g, S), c in x.terms.items():
        for i in range(1, spec.n + 1):
            if i in S:
                continue
            if spec.kind == "characters":
                ci = spec.chi(i, g) - Scalar.one()
            else:
                ci = Scalar.rational(spec.deriv_coeff(i, g))
            if ci.is_zero():
                continue
            below = sum(1 for s in S if s < i)
            coeff = c * ci
            if below % 2:
                coeff = -coeff
            out.append(((g, tuple(sorted(S + (i,)))), coeff))
    return Form(spec, out)


def _warn_below_top(x: Form, op: str):
    low = [d for d in x.degrees() if d < x.spec.n]
    if low:
        warnings.warn(
            f"{op} ignored terms of degree {low} below top degree {x.spec.n}",
            LowerDegreeIgnored,
            stacklevel=3,
        )


def top_projection(spec: CalculusSpec, x: Form) -> GradedElement:
    """Coefficient of the top wedge monomial, as a group algebra element."""
    if x.spec != spec:
        raise SpecMismatch("form does not belong to this calculus")
    _warn_below_top(x, "top_projection")
    full = tuple(range(1, spec.n + 1))
    return GradedElement(
        spec.group, [(g, c) for (g, S), c in x.terms.items() if S == full]
    )


def integral(spec: CalculusSpec, x: Form) -> Scalar:
    """Graded trace: identity-component of the top projection."""
    if x.spec != spec:
        raise SpecMismatch("form does not belong to this calculus")
    _warn_below_top(x, "integral")
    full = tuple(range(1, spec.n + 1))
    e = spec.group.identity()
    return x.terms.get((e, full), Scalar.zero())


def rho(spec: CalculusSpec, a: GradedElement) -> GradedElement:
    """Modular automorphism rho(g) = chi(g) g of the graded trace."""
    if a.group != spec.group:
        raise SpecMismatch("element group does not match the calculus group")
    return GradedElement(
        spec.group, [(g, spec.chi_total(g) * c) for g, c in a.terms.items()]
    )


def form_ribbon(spec: CalculusSpec, x: Form) -> Form:
    """rho extended to forms: (g, S) -> chi(g) (g, S)."""
    if x.spec != spec:
        raise SpecMismatch("form does not belong to this calculus")
    return Form(spec, [((g, S), spec.chi_total(g) * c) for (g, S), c in x.terms.items()])


# ---------------------------------------------------------------------------
# cyclic cocycle characters

def character_direct(spec: CalculusSpec, gs, F=None) -> Scalar:
    """integral of g0 dg1 .. dgn, products taken left to right."""
    gs = [spec.group.reduce(g) for g in gs]
    if len(gs) != spec.n + 1:
        raise DegreeMismatch(
            f"need {spec.n + 1} group elements for an n={spec.n} calculus, got {len(gs)}"
        )
    acc = Form.basis(spec, gs[0])
    for g in gs[1:]:
        acc = form_product(spec, acc, differential(spec, Form.basis(spec, g)), F)
    return integral(spec, acc)


def character_closed(spec: CalculusSpec, which: str, gs) -> Scalar:
    """Closed-form values of the volume character; which selects the formula.

    "general" works for any characters-kind calculus; "octonion",
    "torus" and "torus_twisted" are preset-shaped fast paths.
    """
    grp = spec.group
    gs = [grp.reduce(g) for g in gs]
    if len(gs) != spec.n + 1:
        raise DegreeMismatch(
            f"need {spec.n + 1} group elements for an n={spec.n} calculus, got {len(gs)}"
        )
    if not grp.is_identity(grp.mul_all(gs)):
        return Scalar.zero()

    if which == "general":
        if spec.kind != "characters":
            raise KindMismatch("general closed form needs the characters kind")
        n = spec.n
        tails = [None] * (n + 2)
        tails[n + 1] = grp.identity()
        for t in range(n, 0, -1):
            tails[t] = grp.mul(gs[t], tails[t + 1])
        total = Scalar.zero()
        for perm in itertools.permutations(range(1, n + 1)):
            inv = sum(
                1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b]
            )
            term = Scalar.rational(-1 if inv % 2 else 1)
            for t in range(1, n + 1):
                w = spec.weights[perm[t - 1] - 1]
                factor = grp.char_eval(w, tails[t]) - grp.char_eval(w, tails[t + 1])
                if factor.is_zero():
                    term = Scalar.zero()
                    break
                term = term * factor
            total = total + term
        return total

    if which == "octonion":
        if spec.kind != "characters" or grp != GroupSpec((2, 2, 2)) or spec.weights != (
            (1, 0, 0),
            (0, 1, 0),
            (0, 0, 1),
        ):
            raise KindMismatch("octonion closed form needs the octonion calculus")
        j, k, l = gs[1], gs[2], gs[3]
        s = lambda *bits: -1 if sum(bits) % 2 else 1
        val = (
            s(l[1], l[2]) * l[0] * (s(k[1]) * j[1] * k[2] - s(k[2]) * j[2] * k[1])
            + s(l[0], l[2]) * l[1] * (s(k[2]) * j[2] * k[0] - s(k[0]) * j[0] * k[2])
            + s(l[0], l[1]) * l[2] * (s(k[0]) * j[0] * k[1] - s(k[1]) * j[1] * k[0])
        )
        return Scalar.rational(-8 * val)

    if which in ("torus", "torus_twisted"):
        if spec.kind != "derivations" or grp.free_rank != 2:
            raise KindMismatch("torus closed forms need the rank-2 derivations kind")
        i, j, k = gs
        area = j[0] * k[1] - j[1] * k[0]
        if which == "torus":
            return Scalar.rational(area)
        return Scalar.q_power(i[1] * j[0] + (i[1] + j[1]) * k[0], area)

    raise ValueError(f"unknown closed form {which!r}")


# ---------------------------------------------------------------------------
# law checking

def _domain_elements(grp: GroupSpec, domain):
    if domain == "exhaustive":
        return grp.elements(), "exhaustive"
    if isinstance(domain, tuple) and domain[0] == "window":
        return grp.window_elements(domain[1]), f"window({domain[1]})"
    raise ValueError(f"unknown domain {domain!r}")


def _all_index_sets(n: int):
    out = []
    for r in range(n + 1):
        out.extend(itertools.combinations(range(1, n + 1), r))
    return out


def _random_form(spec: CalculusSpec, rng: random.Random, els) -> Form:
    sets = _all_index_sets(spec.n)
    terms = []
    for _ in range(rng.randint(1, 3)):
        g = rng.choice(els)
        S = rng.choice(sets)
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        terms.append(((g, S), c))
    return Form(spec, terms)


def check_calculus(
    spec: CalculusSpec,
    law: str,
    F=None,
    domain="exhaustive",
    seed: int = 0,
    degree_max: int | None = None,
) -> LawReport:
    """Check one named calculus law over a domain; F twists the product.

    Laws: leibniz, d_squared, d_products_vanish, graded_trace, closedness.
    """
    els, label = _domain_elements(spec.group, domain)
    sets = _all_index_sets(spec.n)
    full = tuple(range(1, spec.n + 1))

    if law == "leibniz":
        for g, S in itertools.product(els, sets):
            x = Form.basis(spec, g, S)
            dx = differential(spec, x)
            sign = -1 if len(S) % 2 else 1
            for h, T in itertools.product(els, sets):
                y = Form.basis(spec, h, T)
                lhs = differential(spec, form_product(spec, x, y, F))
                rhs = form_product(spec, dx, y, F) + sign * form_product(
                    spec, x, differential(spec, y), F
                )
                if lhs != rhs:
                    return LawReport(law, label, False, ((g, S), (h, T)))
        return LawReport(law, label, True)

    if law == "d_squared":
        for g, S in itertools.product(els, sets):
            x = Form.basis(spec, g, S)
            if not differential(spec, differential(spec, x)).is_zero():
                return LawReport(law, label, False, (g, S))
        rng = random.Random(seed)
        for _ in range(100):
            x = _random_form(spec, rng, els)
            if not differential(spec, differential(spec, x)).is_zero():
                return LawReport(law, label, False, tuple(sorted(x.terms)))
        return LawReport(law, label, True)

    if law == "d_products_vanish":
        kmax = degree_max if degree_max is not None else min(spec.n, 3)
        for k in range(kmax + 1):
            for head in itertools.product(els, repeat=k):
                last = spec.group.inv(spec.group.mul_all(head))
                gs = head + (last,)
                acc = differential(spec, Form.basis(spec, gs[0]))
                for g in gs[1:]:
                    acc = form_product(
                        spec, acc, differential(spec, Form.basis(spec, g)), F
                    )
                if not acc.is_zero():
                    return LawReport(law, label, False, gs)
        return LawReport(law, label, True)

    if law == "graded_trace":
        R = braiding_R(F) if F is not None else None
        for i in range(spec.n + 1):
            j = spec.n - i
            for g, S in itertools.product(els, itertools.combinations(full, i)):
                x = Form.basis(spec, g, S)
                for h, T in itertools.product(els, itertools.combinations(full, j)):
                    y = Form.basis(spec, h, T)
                    lhs = integral(spec, form_product(spec, x, y, F))
                    rhs = spec.chi_total(h) * integral(spec, form_product(spec, y, x, F))
                    if R is not None:
                        rhs = R.value(h, g) * rhs
                    if (i * j) % 2:
                        rhs = -rhs
                    if lhs != rhs:
                        return LawReport(law, label, False, ((g, S), (h, T)))
        return LawReport(law, label, True)

    if law == "closedness":
        for g in els:
            for S in itertools.combinations(full, spec.n - 1):
                val = integral(spec, differential(spec, Form.basis(spec, g, S)))
                if not val.is_zero():
                    return LawReport(law, label, False, (g, S))
        return LawReport(law, label, True)

    raise ValueError(f"unknown law {law!r}")


# ---------------------------------------------------------------------------
# text form

def render_form(x: Form) -> str:
    """Canonical text like "-2*u*w1 + u*v*w1^w2"; wedge joins with ^."""
    if not x.terms:
        return "0"
    parts = []
    order = lambda key: (len(key[1]), key[1], x.spec.group.render_element(key[0]))
    for g, S in sorted(x.terms, key=order):
        c = x.terms[(g, S)]
        bits = []
        body = x.spec.group.render_element(g)
        if body != "e" or not S:
            bits.append(body)
        if S:
            bits.append("^".join(f"w{i}" for i in S))
        term = "*".join(bits)
        cs = c.render()
        if " " in cs:
            cs = f"({cs})"
        if cs == "-1":
            term = f"-{term}"
        elif cs != "1":
            term = f"{cs}*{term}"
        if not parts:
            parts.append(term)
        elif term.startswith("-"):
            parts.append(f"- {term[1:]}")
        else:
            parts.append(f"+ {term}")
    return " ".join(parts)
