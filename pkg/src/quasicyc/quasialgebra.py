"""The twisted group quasialgebra: G-graded elements under g._F h = F(g,h)(g+h).

Elements are finitely supported Scalar-valued maps on the group, extended
bilinearly.  Associativity fails in general; the defect is the coboundary
3-cocycle of F, and the braiding R_F makes the product braided-commutative.
The Cayley-Dickson doubling here is an independent oracle for the octonion
preset: the two constructions are compared by structural properties
(squares, anticommutation, alternativity, norm), never by a basis bijection.
"""

from __future__ import annotations

from fractions import Fraction

from .cochains import Cochain2, LawReport, braiding_R, coboundary_phi
from .groups import GroupSpec, SpecMismatch
from .scalars import Scalar


class GradedElement:
    """Finitely supported map GroupElement -> Scalar; no zero terms stored."""

    __slots__ = ("group", "terms")

    def __init__(self, group: GroupSpec, terms=()):
        self.group = group
        acc: dict = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for g, c in items:
            if not isinstance(c, Scalar):
                c = Scalar.rational(c)
            g = group.reduce(g)
            prev = acc.get(g)
            c = prev + c if prev is not None else c
            if c.is_zero():
                acc.pop(g, None)
            else:
                acc[g] = c
        self.terms = acc

    @classmethod
    def basis(cls, group: GroupSpec, g, coeff=1) -> "GradedElement":
        return cls(group, [(g, coeff)])

    @classmethod
    def zero(cls, group: GroupSpec) -> "GradedElement":
        return cls(group)

    @classmethod
    def unit(cls, group: GroupSpec) -> "GradedElement":
        return cls.basis(group, group.identity())

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, g) -> Scalar:
        return self.terms.get(self.group.reduce(g), Scalar.zero())

    def __add__(self, other: "GradedElement") -> "GradedElement":
        self._check(other)
        return GradedElement(self.group, list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other: "GradedElement") -> "GradedElement":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "GradedElement":
        if not isinstance(scalar, Scalar):
            scalar = Scalar.rational(scalar)
        return GradedElement(self.group, [(g, scalar * c) for g, c in self.terms.items()])

    def __neg__(self):
        return (-1) * self

    def __eq__(self, other):
        return (
            isinstance(other, GradedElement)
            and self.group == other.group
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.group, frozenset(self.terms.items())))

    def _check(self, other: "GradedElement"):
        if self.group != other.group:
            raise SpecMismatch("elements live over different group specs")

    def __str__(self):
        return render_graded(self)

    def __repr__(self):
        return f"GradedElement({render_graded(self)!r})"


def render_graded(a: GradedElement) -> str:
    """Canonical text like "3/2*u*v - q^2*w"; identity element prints as e."""
    if not a.terms:
        return "0"
    parts = []
    for body, g in sorted((a.group.render_element(g), g) for g in a.terms):
        c = a.terms[g]
        cs = c.render()
        if " " in cs:
            cs = f"({cs})"
        if cs == "1":
            term = body
        elif cs == "-1":
            term = f"-{body}"
        else:
            term = f"{cs}*{body}"
        if not parts:
            parts.append(term)
        elif term.startswith("-"):
            parts.append(f"- {term[1:]}")
        else:
            parts.append(f"+ {term}")
    return " ".join(parts)


def twisted_product(F, a: GradedElement, b: GradedElement) -> GradedElement:
    """Bilinear extension of g._F h = F(g,h)(g+h); F=None gives plain CG."""
    a._check(b)
    if F is not None and F.group != a.group:
        raise SpecMismatch("cochain and elements live over different group specs")
    grp = a.group
    out = []
    for g, cg in a.terms.items():
        for h, ch in b.terms.items():
            c = cg * ch
            if F is not None:
                c = c * F.value(g, h)
            out.append((grp.mul(g, h), c))
    return GradedElement(grp, out)


def associator_defect(F: Cochain2, g, h, k) -> Scalar:
    """Scalar s with g.(h.k) = s*((g.h).k); the coboundary 3-cocycle at (g,h,k)."""
    return coboundary_phi(F).value(g, h, k)


def ribbon_apply(group: GroupSpec, weight, a: GradedElement) -> GradedElement:
    """sigma(g) = chi(g) g extended linearly; weight is chi's weight vector."""
    return GradedElement(
        group, [(g, group.char_eval(weight, g) * c) for g, c in a.terms.items()]
    )


def check_ribbon_axiom(F: Cochain2, weight, domain="exhaustive") -> LawReport:
    """sigma(g.h) = R_F(h,g) R_F(g,h) sigma(g).sigma(h) over the domain."""
    grp = F.group
    if domain == "exhaustive":
        els, label = grp.elements(), "exhaustive"
    else:
        els, label = grp.window_elements(domain[1]), f"window({domain[1]})"
    R = braiding_R(F)
    for g in els:
        for h in els:
            lhs = ribbon_apply(grp, weight, twisted_product(
                F, GradedElement.basis(grp, g), GradedElement.basis(grp, h)
            ))
            factor = R.value(h, g) * R.value(g, h)
            rhs = factor * twisted_product(
                F,
                ribbon_apply(grp, weight, GradedElement.basis(grp, g)),
                ribbon_apply(grp, weight, GradedElement.basis(grp, h)),
            )
            if lhs != rhs:
                return LawReport("ribbon_axiom", label, False, (g, h))
    return LawReport("ribbon_axiom", label, True)


def norm_square(a: GradedElement) -> Fraction:
    """Sum of squared coefficients; defined for rational coefficients only."""
    total = Fraction(0)
    for c in a.terms.values():
        if not c.is_rational():
            raise ValueError("norm_square needs rational coefficients")
        total += c.payload * c.payload
    return total


# ---------------------------------------------------------------------------
# Cayley-Dickson doubling oracle

def cayley_dickson_conj(x: list) -> list:
    if len(x) == 1:
        return list(x)
    h = len(x) // 2
    return cayley_dickson_conj(x[:h]) + [-c for c in x[h:]]


def cayley_dickson_product(x: list, y: list) -> list:
    """(a,b)(c,d) = (ac - d*b, da + bc*) with * the doubling conjugation."""
    if len(x) != len(y):
        raise ValueError("dimension mismatch")
    if len(x) == 1:
        return [x[0] * y[0]]
    h = len(x) // 2
    a, b = x[:h], x[h:]
    c, d = y[:h], y[h:]
    left_a = cayley_dickson_product(a, c)
    left_b = cayley_dickson_product(cayley_dickson_conj(d), b)
    right_a = cayley_dickson_product(d, a)
    right_b = cayley_dickson_product(b, cayley_dickson_conj(c))
    return [p - q for p, q in zip(left_a, left_b)] + [
        p + q for p, q in zip(right_a, right_b)
    ]


def cayley_dickson_oracle(dim: int) -> list[list[tuple[int, int]]]:
    """Sign table of the doubling algebra: entry [a][b] = (sign, c) for
    e_a * e_b = sign * e_c."""
    if dim not in (1, 2, 4, 8):
        raise ValueError("dim must be one of 1, 2, 4, 8")
    table = []
    for a in range(dim):
        row = []
        ea = [Fraction(int(i == a)) for i in range(dim)]
        for b in range(dim):
            eb = [Fraction(int(i == b)) for i in range(dim)]
            prod = cayley_dickson_product(ea, eb)
            nz = [(i, c) for i, c in enumerate(prod) if c != 0]
            assert len(nz) == 1 and abs(nz[0][1]) == 1, "basis products must be signed basis elements"
            row.append((1 if nz[0][1] > 0 else -1, nz[0][0]))
        table.append(row)
    return table
