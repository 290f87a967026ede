"""Cyclic cochains on a finite abelian group and the full operator suite.

A degree-k cochain is a map on (k+1)-tuples supported on g0...gk = e, so it
is stored densely over the (g1..gk) index (g0 is determined), dimension
|G|^k.  The grading character chi enters the top coface and the cyclic
operator:

    (d_i phi)(g0..g_{k+1}) = phi(.., g_i g_{i+1}, ..)            i <= k
    (d_{k+1} phi)(g0..g_{k+1}) = chi(g_{k+1}) phi(g_{k+1} g0, g1, .., g_k)
    (lambda phi)(g0..g_k) = (-1)^k chi(g_k) phi(g_k, g0, .., g_{k-1})
    (s_i phi)(g0..g_k) = phi(g0, .., g_i, e, g_{i+1}, .., g_k)

Every operator here is a sum of one-point pullbacks: a map sending the full
output tuple to one input tuple and a unit coefficient.  Operator identities
are checked pointwise on those pullbacks, which is equivalent to checking
them against every cochain and much cheaper.  The extra degeneracy is
s_{-1} = (-1)^n s_0 lambda^{-1} and the mixed-complex operators are

    b = sum_i (-1)^i d_i      N = sum_{i=0}^k lambda^i
    B = (-1)^n N (s_{-1} - s_n)   with n = k-1 on degree-k input
    S = (-1/(n(n+1))) sum_{1<=i<=j<=n} (-1)^{i+j} d_{i-1} d_{j-1},
        n = input degree + 1

The relative sign inside B is forced: with these face, degeneracy and
cyclic conventions, the minus is the only choice (up to an overall sign
of B) under which B^2 = 0 and bB + Bb = 0 both hold; a plus breaks B^2.
b, B and N are validated through those identities and N(lambda - id) = 0
rather than through any chain-level picture.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .cochains import LawReport
from .groups import GroupSpec, InfiniteGroup
from .linalg import rank_kernel
from .scalars import RATIONAL, Scalar


class IndexOutOfRange(ValueError):
    """Face or degeneracy index outside the valid range for the degree."""


class DegreeTooLow(ValueError):
    """Operator needs a positive-degree cochain."""


@lru_cache(maxsize=None)
def _els(group: GroupSpec) -> tuple:
    return tuple(group.elements())


@lru_cache(maxsize=None)
def _pos(group: GroupSpec) -> dict:
    return {g: i for i, g in enumerate(_els(group))}


class _LazyChi(dict):
    def __init__(self, group, weight):
        super().__init__()
        self._group = group
        self._weight = weight

    def __missing__(self, g):
        v = self[g] = self._group.char_eval(self._weight, g)
        return v


class _LazyMul(dict):
    def __init__(self, group):
        super().__init__()
        self._group = group

    def __missing__(self, key):
        v = self[key] = self._group.mul(*key)
        return v


@lru_cache(maxsize=None)
def _chi_table(group: GroupSpec, weight: tuple) -> dict:
    if group.free_rank:
        return _LazyChi(group, weight)
    return {g: group.char_eval(weight, g) for g in _els(group)}


def _chi(group: GroupSpec, weight: tuple, g: tuple) -> Scalar:
    return _chi_table(group, weight)[g]


@lru_cache(maxsize=None)
def _mul_table(group: GroupSpec) -> dict:
    if group.free_rank:
        return _LazyMul(group)
    els = _els(group)
    return {(a, b): group.mul(a, b) for a in els for b in els}


def _index(group: GroupSpec, tail) -> int:
    pos = _pos(group)
    base = len(pos)
    out = 0
    for g in tail:
        out = out * base + pos[g]
    return out


def space_dim(group: GroupSpec, degree: int) -> int:
    return len(_els(group)) ** degree


def index_tuples(group: GroupSpec, degree: int):
    """All (g1..gk) index tuples in vector order."""
    return itertools.product(_els(group), repeat=degree)


def full_tuples(group: GroupSpec, degree: int):
    """All support tuples (g0, g1..gk) in vector order, g0 determined."""
    for tail in index_tuples(group, degree):
        yield (group.inv(group.mul_all(tail)),) + tail


class CyclicCochain:
    __slots__ = ("group", "chi", "degree", "vec")

    def __init__(self, group: GroupSpec, chi, degree: int, vec):
        if group.free_rank:
            raise InfiniteGroup("cyclic cochains need a finite group")
        if degree < 0:
            raise ValueError("degree must be >= 0")
        self.group = group
        self.chi = group.check_weight(chi)
        self.degree = degree
        self.vec = list(vec)
        if len(self.vec) != space_dim(group, degree):
            raise ValueError(
                f"vector has {len(self.vec)} entries, space dimension is "
                f"{space_dim(group, degree)}"
            )

    @classmethod
    def zero(cls, group, chi, degree) -> "CyclicCochain":
        return cls(group, chi, degree, [Scalar.zero()] * space_dim(group, degree))

    @classmethod
    def basis(cls, group, chi, degree, idx: int) -> "CyclicCochain":
        vec = [Scalar.zero()] * space_dim(group, degree)
        vec[idx] = Scalar.one()
        return cls(group, chi, degree, vec)

    @classmethod
    def from_fn(cls, group, chi, degree, fn) -> "CyclicCochain":
        """fn(full_tuple) -> Scalar, evaluated on every support tuple."""
        return cls(group, chi, degree, [fn(t) for t in full_tuples(group, degree)])

    @classmethod
    def random(cls, group, chi, degree, rng) -> "CyclicCochain":
        vec = [
            Scalar.rational(rng.randint(-3, 3))
            for _ in range(space_dim(group, degree))
        ]
        return cls(group, chi, degree, vec)

    def value(self, gs) -> Scalar:
        gs = [self.group.reduce(g) for g in gs]
        if len(gs) != self.degree + 1:
            raise ValueError(
                f"need {self.degree + 1} elements for a degree-{self.degree} cochain"
            )
        if not self.group.is_identity(self.group.mul_all(gs)):
            return Scalar.zero()
        return self.vec[_index(self.group, gs[1:])]

    def _at(self, full) -> Scalar:
        return self.vec[_index(self.group, full[1:])]

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.vec)

    def __add__(self, other: "CyclicCochain") -> "CyclicCochain":
        self._check(other)
        return CyclicCochain(
            self.group, self.chi, self.degree,
            [a + b for a, b in zip(self.vec, other.vec)],
        )

    def __sub__(self, other: "CyclicCochain") -> "CyclicCochain":
        self._check(other)
        return CyclicCochain(
            self.group, self.chi, self.degree,
            [a - b for a, b in zip(self.vec, other.vec)],
        )

    def __rmul__(self, scalar) -> "CyclicCochain":
        if not isinstance(scalar, Scalar):
            scalar = Scalar.rational(scalar)
        return CyclicCochain(
            self.group, self.chi, self.degree, [scalar * v for v in self.vec]
        )

    def __neg__(self):
        return (-1) * self

    def __eq__(self, other):
        return (
            isinstance(other, CyclicCochain)
            and self.group == other.group
            and self.chi == other.chi
            and self.degree == other.degree
            and self.vec == other.vec
        )

    def _check(self, other):
        if (self.group, self.chi, self.degree) != (other.group, other.chi, other.degree):
            raise ValueError("cochains live in different spaces")

    def to_json(self) -> dict:
        entries = []
        for tail in index_tuples(self.group, self.degree):
            v = self.vec[_index(self.group, tail)]
            if not v.is_zero():
                entries.append([[list(g) for g in tail], v.to_text()])
        return {
            "group": {
                "cyclic_orders": list(self.group.cyclic_orders),
                "free_rank": self.group.free_rank,
            },
            "chi": list(self.chi),
            "degree": self.degree,
            "entries": entries,
        }

    @classmethod
    def from_json(cls, data: dict) -> "CyclicCochain":
        from .scalars import parse_scalar

        group = GroupSpec(
            tuple(data["group"]["cyclic_orders"]), data["group"].get("free_rank", 0)
        )
        phi = cls.zero(group, tuple(data["chi"]), data["degree"])
        for tail, text in data["entries"]:
            idx = _index(group, tuple(group.reduce(g) for g in tail))
            phi.vec[idx] = parse_scalar(text)
        return phi


# ---------------------------------------------------------------------------
# one-point pullbacks

_ONE = Scalar.one()


def identity_pull(t):
    return t, _ONE


def face_pull(group: GroupSpec, chi, k: int, i: int):
    """Pullback of d_i: C^k -> C^{k+1}; argument is the full output tuple."""
    if not 0 <= i <= k + 1:
        raise IndexOutOfRange(f"face index {i} not in 0..{k + 1}")
    mul = _mul_table(group)
    if i <= k:
        def pull(t):
            return t[:i] + (mul[t[i], t[i + 1]],) + t[i + 2:], _ONE
    else:
        cv = _chi_table(group, chi)

        def pull(t):
            return (mul[t[k + 1], t[0]],) + t[1:k + 1], cv[t[k + 1]]
    return pull


def degeneracy_pull(group: GroupSpec, k: int, i: int):
    """Pullback of s_i: C^{k+1} -> C^k; argument is the full output tuple."""
    if not 0 <= i <= k:
        raise IndexOutOfRange(f"degeneracy index {i} not in 0..{k}")
    e = group.identity()

    def pull(t):
        return t[:i + 1] + (e,) + t[i + 1:], _ONE

    return pull


def lambda_pull(group: GroupSpec, chi, k: int):
    """Pullback of the signed cyclic operator on C^k."""
    cv = _chi_table(group, chi)
    if k % 2 == 0:
        def pull(t):
            return (t[k],) + t[:k], cv[t[k]]
        return pull
    if not group.free_rank:
        signed = {g: -c for g, c in cv.items()}

        def pull(t):
            return (t[k],) + t[:k], signed[t[k]]
        return pull

    def pull(t):
        return (t[k],) + t[:k], -cv[t[k]]
    return pull


def compose_pulls(*pulls):
    """Pullback of a composite; list the outermost operator first."""
    if not pulls:
        return identity_pull

    def pull(t):
        c = _ONE
        for p in pulls:
            t, ci = p(t)
            c = c * ci
        return t, c

    return pull


def lambda_power_pull(group, chi, k, j):
    return compose_pulls(*([lambda_pull(group, chi, k)] * j))


# ---------------------------------------------------------------------------
# operator application

def _apply_atoms(phi: CyclicCochain, atoms, out_degree: int) -> CyclicCochain:
    """Sum of coeff * (pullback phi) over atoms, as a new cochain."""
    grp = phi.group
    vec = []
    for full in full_tuples(grp, out_degree):
        total = Scalar.zero()
        for coeff, pull in atoms:
            t_in, c = pull(full)
            v = phi._at(t_in)
            if v.is_zero():
                continue
            term = c * v
            if coeff != 1:
                term = coeff * term
            total = total + term
        vec.append(total)
    return CyclicCochain(grp, phi.chi, out_degree, vec)


def apply_face(phi: CyclicCochain, i: int) -> CyclicCochain:
    pull = face_pull(phi.group, phi.chi, phi.degree, i)
    return _apply_atoms(phi, [(1, pull)], phi.degree + 1)


def apply_degeneracy(phi: CyclicCochain, i: int) -> CyclicCochain:
    if phi.degree < 1:
        raise DegreeTooLow("degeneracy needs degree >= 1")
    pull = degeneracy_pull(phi.group, phi.degree - 1, i)
    return _apply_atoms(phi, [(1, pull)], phi.degree - 1)


def apply_lambda(phi: CyclicCochain) -> CyclicCochain:
    pull = lambda_pull(phi.group, phi.chi, phi.degree)
    return _apply_atoms(phi, [(1, pull)], phi.degree)


def extra_degeneracy_pull(group, chi, k: int):
    """Pullback of s_{-1} = (-1)^n s_0 lambda^{-1} on C^k, n = k-1."""
    sign = -1 if (k - 1) % 2 else 1
    pull = compose_pulls(
        degeneracy_pull(group, k - 1, 0), lambda_power_pull(group, chi, k, k)
    )
    if sign == 1:
        return pull
    return lambda t: _negate(pull(t))


def _negate(res):
    t, c = res
    return t, -c


def apply_extra_degeneracy(phi: CyclicCochain) -> CyclicCochain:
    if phi.degree < 1:
        raise DegreeTooLow("extra degeneracy needs degree >= 1")
    pull = extra_degeneracy_pull(phi.group, phi.chi, phi.degree)
    return _apply_atoms(phi, [(1, pull)], phi.degree - 1)


def b_atoms(group, chi, k: int, wrap=None):
    """Atoms of the Hochschild coboundary b: C^k -> C^{k+1}."""
    out = []
    for i in range(k + 2):
        pull = face_pull(group, chi, k, i)
        if wrap is not None:
            pull = wrap(pull, k, k + 1)
        out.append(((-1) ** i, pull))
    return out


def apply_b(phi: CyclicCochain) -> CyclicCochain:
    return _apply_atoms(phi, b_atoms(phi.group, phi.chi, phi.degree), phi.degree + 1)


def n_atoms(group, chi, k: int, wrap=None):
    out = []
    for i in range(k + 1):
        pull = lambda_power_pull(group, chi, k, i)
        if wrap is not None:
            pull = wrap(pull, k, k)
        out.append((1, pull))
    return out


def apply_N(phi: CyclicCochain) -> CyclicCochain:
    return _apply_atoms(phi, n_atoms(phi.group, phi.chi, phi.degree), phi.degree)


def B_atoms(group, chi, k: int, wrap=None):
    """Atoms of B: C^k -> C^{k-1}; the (-1)^n prefactor cancels against the
    one inside s_{-1}, leaving lambda^i s_0 lambda^{-1} - (-1)^n lambda^i s_n."""
    n = k - 1
    sign_n = -1 if n % 2 else 1
    out = []
    for i in range(n + 1):
        lam_i = [lambda_pull(group, chi, n)] * i
        p1 = compose_pulls(
            *lam_i, degeneracy_pull(group, n, 0), lambda_power_pull(group, chi, k, k)
        )
        p2 = compose_pulls(*lam_i, degeneracy_pull(group, n, n))
        if wrap is not None:
            p1 = wrap(p1, k, n)
            p2 = wrap(p2, k, n)
        out.append((1, p1))
        out.append((-sign_n, p2))
    return out


def apply_B(phi: CyclicCochain) -> CyclicCochain:
    if phi.degree < 1:
        raise DegreeTooLow("B needs degree >= 1")
    return _apply_atoms(
        phi, B_atoms(phi.group, phi.chi, phi.degree), phi.degree - 1
    )


def s_atoms(group, chi, m: int, wrap=None):
    """Atoms of the periodicity operator S: C^m -> C^{m+2}, n = m + 1.
    The -1/(n(n+1)) factor is applied by apply_S, not stored in the atoms."""
    n = m + 1
    out = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            pull = compose_pulls(
                face_pull(group, chi, m + 1, i - 1), face_pull(group, chi, m, j - 1)
            )
            if wrap is not None:
                pull = wrap(pull, m, m + 2)
            out.append(((-1) ** (i + j), pull))
    return out


def apply_S(phi: CyclicCochain) -> CyclicCochain:
    n = phi.degree + 1
    raw = _apply_atoms(
        phi, s_atoms(phi.group, phi.chi, phi.degree), phi.degree + 2
    )
    return Scalar.rational(-1, n * (n + 1)) * raw


def atom_rows(group, atoms, out_degree):
    """Sparse rows [(col, coeff)] of sum(coeff * pull); build once, apply to
    many vectors with apply_rows.  Rational unit coefficients are stored as
    +1/-1 ints so the apply loop can skip scalar multiplication."""
    rows = []
    one = Scalar.one()
    minus_one = Scalar.rational(-1)
    for full in full_tuples(group, out_degree):
        row = []
        for coeff, pull in atoms:
            t_in, c = pull(full)
            v = c if coeff == 1 else coeff * c
            if v == one:
                row.append((_index(group, t_in[1:]), 1))
            elif v == minus_one:
                row.append((_index(group, t_in[1:]), -1))
            else:
                row.append((_index(group, t_in[1:]), v))
        rows.append(row)
    return rows


def apply_rows(rows, vec):
    zero = Scalar.zero()
    out = []
    for row in rows:
        acc = zero
        for col, c in row:
            x = vec[col]
            if x.is_zero():
                continue
            if c == 1:
                acc = acc + x
            elif c == -1:
                acc = acc - x
            else:
                acc = acc + c * x
        out.append(acc)
    return out


class OperatorCache:
    """Rows of b, B, lambda and N per degree for one (group, chi) pair."""

    OPS = {"b": 1, "B": -1, "N": 0, "lambda": 0}

    def __init__(self, group, chi):
        self.group = group
        self.chi = group.check_weight(chi)
        self._rows = {}

    def rows(self, op: str, degree: int):
        key = (op, degree)
        if key not in self._rows:
            grp, chi = self.group, self.chi
            if op == "b":
                self._rows[key] = atom_rows(grp, b_atoms(grp, chi, degree), degree + 1)
            elif op == "B":
                self._rows[key] = atom_rows(grp, B_atoms(grp, chi, degree), degree - 1)
            elif op == "N":
                self._rows[key] = atom_rows(grp, n_atoms(grp, chi, degree), degree)
            elif op == "lambda":
                self._rows[key] = atom_rows(
                    grp, [(1, lambda_pull(grp, chi, degree))], degree
                )
            else:
                raise ValueError(f"unknown operator {op!r}")
        return self._rows[key]

    def apply(self, op: str, phi: CyclicCochain) -> CyclicCochain:
        return CyclicCochain(
            self.group, self.chi, phi.degree + self.OPS[op],
            apply_rows(self.rows(op, phi.degree), phi.vec),
        )


def _rows_are_units(rows) -> bool:
    return all(c == 1 or c == -1 for row in rows for _, c in row)


def _apply_raw(rows, vec):
    """apply_rows on plain integer vectors; rows must be +-1 only."""
    out = []
    for row in rows:
        acc = 0
        for col, c in row:
            x = vec[col]
            if x:
                acc = acc + x if c == 1 else acc - x
        out.append(acc)
    return out


def _atoms_apply_raw(group, atoms, out_degree, vec):
    """One-shot streaming apply on an integer vector, no row storage; None
    when some coefficient is not a rational unit."""
    out = []
    for full in full_tuples(group, out_degree):
        acc = 0
        for coeff, pull in atoms:
            t_in, c = pull(full)
            x = vec[_index(group, t_in[1:])]
            if not x:
                continue
            if c.tag != RATIONAL:
                return None
            p = c.payload
            if p == 1:
                acc += coeff * x
            elif p == -1:
                acc -= coeff * x
            else:
                return None
        out.append(acc)
    return out


def mixed_complex_report(
    group: GroupSpec, chi, degree_max: int, count: int = 50, seed: int = 0
) -> list[LawReport]:
    """b^2 = 0, B^2 = 0, bB + Bb = 0, lambda^(k+1) = id, N(lambda - id) = 0
    on seeded random integer cochains.  Uses plain integer vectors whenever
    every operator coefficient is a rational unit (true for trivial and sign
    characters), falling back to scalar vectors otherwise.
    """
    import random as _random

    chi = group.check_weight(chi)
    ops = OperatorCache(group, chi)
    needed = (
        [("b", k) for k in range(degree_max + 2)]
        + [("lambda", k) for k in range(degree_max + 1)]
        + [("N", k) for k in range(degree_max + 1)]
        + [("B", k) for k in range(1, degree_max + 2)]
    )
    raw = all(_rows_are_units(ops.rows(op, k)) for op, k in needed)
    rng = _random.Random(seed)
    domain = f"{count} random cochains per degree <= {degree_max}"
    fails = {}

    def run(op, k, vec):
        if raw:
            return _apply_raw(ops.rows(op, k), vec)
        return apply_rows(ops.rows(op, k), vec)

    def is_zero(vec):
        if raw:
            return not any(vec)
        return all(v.is_zero() for v in vec)

    for k in range(degree_max + 1):
        for trial in range(count):
            if raw:
                vec = [rng.randint(-3, 3) for _ in range(space_dim(group, k))]
            else:
                vec = CyclicCochain.random(group, chi, k, rng).vec
            tag = f"degree {k} trial {trial}"
            if not is_zero(run("b", k + 1, run("b", k, vec))):
                fails.setdefault("b_squared", tag)
            lam = vec
            for _ in range(k + 1):
                lam = run("lambda", k, lam)
            if lam != vec:
                fails.setdefault("lambda_order", tag)
            n_lam = run("N", k, run("lambda", k, vec))
            n_vec = run("N", k, vec)
            if n_lam != n_vec:
                fails.setdefault("N_lambda", tag)
            if k >= 1:
                anti = [
                    a + b
                    for a, b in zip(
                        run("b", k - 1, run("B", k, vec)),
                        run("B", k + 1, run("b", k, vec)),
                    )
                ]
                if not is_zero(anti):
                    fails.setdefault("bB_plus_Bb", tag)
            if k >= 2:
                if not is_zero(run("B", k - 1, run("B", k, vec))):
                    fails.setdefault("B_squared", tag)

    return [
        LawReport(law, domain, law not in fails, fails.get(law))
        for law in ("b_squared", "B_squared", "bB_plus_Bb", "lambda_order", "N_lambda")
    ]


def _dense(rows, dim):
    zero = Scalar.zero()
    one = Scalar.one()
    minus_one = Scalar.rational(-1)
    out = []
    for row in rows:
        dense = [zero] * dim
        for col, c in row:
            if c == 1:
                c = one
            elif c == -1:
                c = minus_one
            dense[col] = dense[col] + c
        out.append(dense)
    return out


def cyclic_cocycle_basis(group: GroupSpec, chi, degree: int):
    """Kernel basis of the stacked (lambda - id, b) map on C^degree, as
    scalar vectors."""
    chi = group.check_weight(chi)
    dim = space_dim(group, degree)
    lam_rows = _dense(
        atom_rows(group, lambda_minus_id_atoms(group, chi, degree), degree), dim
    )
    b_rows = _dense(atom_rows(group, b_atoms(group, chi, degree), degree + 1), dim)
    _, kernel = rank_kernel(lam_rows + b_rows)
    return kernel


def periodicity_report(
    group: GroupSpec, chi, degree_max: int
) -> list[LawReport]:
    """S maps lambda-invariant b-cocycles to lambda-invariant b-cocycles,
    checked on a kernel basis per degree."""
    chi = group.check_weight(chi)
    domain = f"cocycle bases, degrees <= {degree_max}"
    for m in range(degree_max + 1):
        for j, v in enumerate(cyclic_cocycle_basis(group, chi, m)):
            phi = CyclicCochain(group, chi, m, v)
            out = apply_S(phi)
            if not (apply_lambda(out) - out).is_zero():
                return [LawReport(
                    "S_preserves_cocycles", domain, False,
                    f"degree {m} basis vector {j}: lambda invariance",
                )]
            if not apply_b(out).is_zero():
                return [LawReport(
                    "S_preserves_cocycles", domain, False,
                    f"degree {m} basis vector {j}: b closedness",
                )]
    return [LawReport("S_preserves_cocycles", domain, True)]


# ---------------------------------------------------------------------------
# pointwise identity suite

def _sides_equal(tuples, lhs, rhs):
    sign1, pulls1 = lhs
    sign2, pulls2 = rhs
    p1 = compose_pulls(*pulls1)
    p2 = compose_pulls(*pulls2)
    for full in tuples:
        t1, c1 = p1(full)
        t2, c2 = p2(full)
        if sign1 == -1:
            c1 = -c1
        elif sign1 != 1:
            c1 = sign1 * c1
        if sign2 == -1:
            c2 = -c2
        elif sign2 != 1:
            c2 = sign2 * c2
        if t1 != t2 or c1 != c2:
            return full
    return None


def identity_suite(
    group: GroupSpec,
    chi,
    degree_max: int,
    wrap=None,
    window: int | None = None,
    samples: int = 40,
    seed: int = 0,
) -> list[LawReport]:
    """Check the six cocyclic identity families pointwise on pullbacks.

    wrap(pull, in_degree, out_degree) -> pull conjugates each atom; used by
    the twist module to run the same suite on the twisted operators.
    Finite groups are exhaustive; an infinite group needs a window bound
    and draws `samples` seeded tuples per case from it.
    """
    import random as _random

    chi = group.check_weight(chi)
    W = wrap if wrap is not None else (lambda pull, k_in, k_out: pull)
    if group.free_rank and window is None:
        raise InfiniteGroup("identity suite on an infinite group needs a window")

    if window is None:
        def tuples_for(out_degree):
            return full_tuples(group, out_degree)
        domain = f"pointwise, degrees <= {degree_max}"
    else:
        wels = tuple(group.window_elements(window))
        pool = {}

        def tuples_for(out_degree):
            if out_degree not in pool:
                rng = _random.Random(f"{seed}:{out_degree}")
                fixed = [(group.identity(),) * (out_degree + 1)]
                for _ in range(samples):
                    tail = tuple(rng.choice(wels) for _ in range(out_degree))
                    fixed.append((group.inv(group.mul_all(tail)),) + tail)
                pool[out_degree] = fixed
            return pool[out_degree]
        domain = f"pointwise, degrees <= {degree_max}, window({window}) x{samples}"

    def F(k, i):
        return W(face_pull(group, chi, k, i), k, k + 1)

    def S_(k_out, i):
        return W(degeneracy_pull(group, k_out, i), k_out + 1, k_out)

    def L(k):
        return W(lambda_pull(group, chi, k), k, k)

    reports = []

    def check(name, cases):
        for out_degree, lhs, rhs in cases:
            bad = _sides_equal(tuples_for(out_degree), lhs, rhs)
            if bad is not None:
                reports.append(LawReport(name, domain, False, bad))
                return
        reports.append(LawReport(name, domain, True))

    # d_j d_i = d_i d_{j-1} for i < j
    cases = []
    for k in range(degree_max + 1):
        for j in range(1, k + 3):
            for i in range(min(j, k + 2)):
                cases.append(
                    (k + 2,
                     (1, [F(k + 1, j), F(k, i)]),
                     (1, [F(k + 1, i), F(k, j - 1)]))
                )
    check("face_face", cases)

    # s_j s_i = s_i s_{j+1} for i <= j
    cases = []
    for k in range(2, degree_max + 1):
        for j in range(k - 1):
            for i in range(j + 1):
                cases.append(
                    (k - 2,
                     (1, [S_(k - 2, j), S_(k - 1, i)]),
                     (1, [S_(k - 2, i), S_(k - 1, j + 1)]))
                )
    check("deg_deg", cases)

    # s_j d_i three-case identity
    cases = []
    for k in range(degree_max + 1):
        for i in range(k + 2):
            for j in range(k + 1):
                lhs = (1, [S_(k, j), F(k, i)])
                if i < j:
                    rhs = (1, [F(k - 1, i), S_(k - 1, j - 1)])
                elif i in (j, j + 1):
                    rhs = (1, [])
                else:
                    rhs = (1, [F(k - 1, i - 1), S_(k - 1, j)])
                cases.append((k, lhs, rhs))
    check("deg_face", cases)

    # lambda d_i = -d_{i-1} lambda (i >= 1); lambda d_0 = (-1)^{k+1} d_{k+1}
    cases = []
    for k in range(degree_max + 1):
        cases.append(
            (k + 1,
             (1, [L(k + 1), F(k, 0)]),
             ((-1) ** (k + 1), [F(k, k + 1)]))
        )
        for i in range(1, k + 2):
            cases.append(
                (k + 1,
                 (1, [L(k + 1), F(k, i)]),
                 (-1, [F(k, i - 1), L(k)]))
            )
    check("lambda_face", cases)

    # lambda s_i = -s_{i-1} lambda (i >= 1); lambda s_0 = (-1)^{k-1} s_{k-1} lambda^2
    cases = []
    for k in range(1, degree_max + 1):
        cases.append(
            (k - 1,
             (1, [L(k - 1), S_(k - 1, 0)]),
             ((-1) ** (k - 1), [S_(k - 1, k - 1), L(k), L(k)]))
        )
        for i in range(1, k):
            cases.append(
                (k - 1,
                 (1, [L(k - 1), S_(k - 1, i)]),
                 (-1, [S_(k - 1, i - 1), L(k)]))
            )
    check("lambda_deg", cases)

    # lambda^{k+1} = id
    cases = []
    for k in range(degree_max + 1):
        cases.append((k, (1, [L(k)] * (k + 1)), (1, [])))
    check("lambda_order", cases)

    return reports


# ---------------------------------------------------------------------------
# cohomology dimensions

def _operator_matrix(group, atoms, in_degree, out_degree):
    """Dense matrix rows of sum(coeff * pull) : C^in -> C^out."""
    dim_in = space_dim(group, in_degree)
    zero = Scalar.zero()
    rows = []
    for full in full_tuples(group, out_degree):
        row = [zero] * dim_in
        for coeff, pull in atoms:
            t_in, c = pull(full)
            col = _index(group, t_in[1:])
            v = c if coeff == 1 else coeff * c
            row[col] = row[col] + v
        rows.append(row)
    return rows


def lambda_minus_id_atoms(group, chi, k, wrap=None):
    lam = lambda_pull(group, chi, k)
    ident = identity_pull
    if wrap is not None:
        lam = wrap(lam, k, k)
        ident = wrap(ident, k, k)
    return [(1, lam), (-1, ident)]


def cohomology_dims(
    group: GroupSpec,
    chi,
    degree_max: int,
    which: str,
    twist=None,
) -> list[dict]:
    """Exact braided Hochschild (hh) or cyclic (hc) cohomology dimensions.

    dim H^k = dim ker(b on C^k) - rank(b from C^{k-1}), with C^k replaced
    by its lambda-invariant part for hc.  twist conjugates b and lambda by
    the transport prefactor of the given 2-cochain.
    """
    if which not in ("hh", "hc"):
        raise ValueError(f"unknown cohomology kind {which!r}")
    if group.free_rank:
        raise InfiniteGroup("cohomology dimensions need a finite group")
    chi = group.check_weight(chi)
    wrap = None
    if twist is not None:
        from .twist import conjugator

        wrap = conjugator(twist)

    b_mat = [
        _operator_matrix(group, b_atoms(group, chi, k, wrap), k, k + 1)
        for k in range(degree_max + 1)
    ]

    out = []
    if which == "hh":
        prev_rank = 0
        for k in range(degree_max + 1):
            rank_out, kernel = rank_kernel(b_mat[k])
            dim_c = space_dim(group, k)
            out.append({
                "degree": k,
                "dim_C": dim_c,
                "rank_b_in": prev_rank,
                "rank_b_out": rank_out,
                "dim": (dim_c - rank_out) - prev_rank,
            })
            prev_rank = rank_out
        return out

    prev_rank = 0
    for k in range(degree_max + 1):
        lam_mat = _operator_matrix(
            group, lambda_minus_id_atoms(group, chi, k, wrap), k, k
        )
        _, inv_basis = rank_kernel(lam_mat)
        dim_c = len(inv_basis)
        if dim_c:
            cols = []
            for v in inv_basis:
                col = [Scalar.zero()] * space_dim(group, k + 1)
                for j, x in enumerate(v):
                    if x.is_zero():
                        continue
                    for r in range(len(col)):
                        m = b_mat[k][r][j]
                        if not m.is_zero():
                            col[r] = col[r] + m * x
                cols.append(col)
            restricted = [[cols[c][r] for c in range(dim_c)] for r in range(len(cols[0]))]
            rank_out, _ = rank_kernel(restricted)
        else:
            rank_out = 0
        out.append({
            "degree": k,
            "dim_C": dim_c,
            "rank_b_in": prev_rank,
            "rank_b_out": rank_out,
            "dim": (dim_c - rank_out) - prev_rank,
        })
        prev_rank = rank_out
    return out
