"""Exact scalar arithmetic in the three coefficient rings of the kernel.

A Scalar is a tagged value in one of:

  * the rationals Q (arbitrary precision, lowest terms),
  * a cyclotomic field Q(zeta_N), stored on the power basis
    zeta^0 .. zeta^{phi(N)-1} fully reduced modulo the N-th cyclotomic
    polynomial, so equality is coefficient-wise,
  * the Laurent ring Q[q, q^-1] in one formal variable q (an integral
    domain, not a field; only monomials are invertible).

Rationals embed losslessly into the other two rings and auto-promote in
mixed arithmetic.  Values that are rational in content (a constant
cyclotomic payload, a bare q^0 Laurent term) normalize down to the
rational tag, so canonical form is unique across tags.  No floats.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


class RingMismatch(TypeError):
    """Arithmetic between scalars of incompatible ring tags."""


class NonUnitLaurent(ArithmeticError):
    """Inverse of a Laurent element that is not a single monomial."""


RATIONAL = "rational"
CYCLOTOMIC = "cyclotomic"
LAURENT = "laurent"


# ---------------------------------------------------------------------------
# integer polynomial helpers (coefficient lists, low degree first)

def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def euler_phi(n: int) -> int:
    out = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            out -= out // p
        p += 1
    if m > 1:
        out -= out // m
    return out


def _int_poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    # den is monic; division is exact by construction
    num = list(num)
    dn, dd = len(num) - 1, len(den) - 1
    quo = [0] * (dn - dd + 1)
    for k in range(dn - dd, -1, -1):
        c = num[k + dd]
        quo[k] = c
        if c:
            for i, dc in enumerate(den):
                num[k + i] -= c * dc
    assert all(c == 0 for c in num), "inexact cyclotomic division"
    return quo


@lru_cache(maxsize=None)
def cyclotomic_poly(N: int) -> tuple[int, ...]:
    """Coefficients of Phi_N, low degree first, monic of degree phi(N)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    if N == 1:
        return (-1, 1)
    poly = [-1] + [0] * (N - 1) + [1]  # x^N - 1
    for d in _divisors(N):
        if d < N:
            poly = _int_poly_div_exact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


def _cyc_reduce(N: int, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    """Reduce a coefficient list modulo Phi_N to degree < phi(N)."""
    phi = cyclotomic_poly(N)
    k = len(phi) - 1
    a = list(coeffs)
    for deg in range(len(a) - 1, k - 1, -1):
        c = a[deg]
        if c:
            for i in range(k + 1):
                a[deg - k + i] -= c * phi[i]
        a.pop()
    while len(a) < k:
        a.append(Fraction(0))
    return tuple(a)


def _cyc_mul(N: int, a: tuple[Fraction, ...], b: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return _cyc_reduce(N, out)


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    # over Q, b nonzero
    a = list(a)
    db = len(b) - 1
    while db >= 0 and b[db] == 0:
        db -= 1
    quo = [Fraction(0)] * max(len(a) - db, 1)
    for k in range(len(a) - 1 - db, -1, -1):
        if len(a) > k + db and a[k + db]:
            c = a[k + db] / b[db]
            quo[k] = c
            for i in range(db + 1):
                a[k + i] -= c * b[i]
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return quo, a


def _cyc_inverse(N: int, a: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    """Inverse modulo Phi_N by the extended Euclidean algorithm over Q[x]."""
    if all(c == 0 for c in a):
        raise ZeroDivisionError("scalar inverse of zero")
    r0 = [Fraction(c) for c in cyclotomic_poly(N)]
    r1 = list(a)
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while any(c != 0 for c in r1):
        q, r = _poly_divmod(r0, r1)
        # s_next = s0 - q*s1
        prod = [Fraction(0)] * (len(q) + len(s1) - 1)
        for i, qi in enumerate(q):
            if qi:
                for j, sj in enumerate(s1):
                    prod[i + j] += qi * sj
        s_next = [
            (s0[i] if i < len(s0) else Fraction(0)) - (prod[i] if i < len(prod) else Fraction(0))
            for i in range(max(len(s0), len(prod)))
        ]
        r0, r1 = r1, r
        s0, s1 = s1, s_next
    g = r0  # gcd, a nonzero constant since Phi_N is irreducible over Q
    if len(g) != 1 or g[0] == 0:
        raise ZeroDivisionError("noninvertible cyclotomic payload")
    inv = [c / g[0] for c in s0]
    return _cyc_reduce(N, inv)


# ---------------------------------------------------------------------------

def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not an exact coefficient: {x!r}")


class Scalar:
    """Immutable exact scalar; see module docstring for the three rings."""

    __slots__ = ("tag", "n", "payload")

    def __init__(self, tag, n, payload, _raw=False):
        # not the public entry point; use the class-method constructors
        if not _raw:
            raise TypeError("use Scalar.rational / .cyclotomic / .laurent")
        object.__setattr__(self, "tag", tag)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "payload", payload)

    def __setattr__(self, *_):
        raise AttributeError("Scalar is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def rational(cls, p, q=1) -> "Scalar":
        return cls(RATIONAL, 0, Fraction(p, q) if q != 1 else _as_fraction(p), _raw=True)

    @classmethod
    def zero(cls) -> "Scalar":
        return cls.rational(0)

    @classmethod
    def one(cls) -> "Scalar":
        return cls.rational(1)

    @classmethod
    def cyclotomic(cls, N: int, coeffs) -> "Scalar":
        vec = _cyc_reduce(N, [_as_fraction(c) for c in coeffs])
        if all(c == 0 for c in vec[1:]):
            return cls.rational(vec[0] if vec else 0)
        return cls(CYCLOTOMIC, N, vec, _raw=True)

    @classmethod
    def root_of_unity(cls, N: int, k: int) -> "Scalar":
        """Canonical representative of zeta_N^k."""
        if N < 1:
            raise ValueError("N must be >= 1")
        k %= N
        return cls.cyclotomic(N, [0] * k + [1])

    @classmethod
    def laurent(cls, terms) -> "Scalar":
        """terms: mapping or iterable of (exponent, coefficient) pairs."""
        acc: dict[int, Fraction] = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for e, c in items:
            acc[e] = acc.get(e, Fraction(0)) + _as_fraction(c)
        acc = {e: c for e, c in acc.items() if c != 0}
        if not acc:
            return cls.rational(0)
        if set(acc) == {0}:
            return cls.rational(acc[0])
        return cls(LAURENT, 0, tuple(sorted(acc.items())), _raw=True)

    @classmethod
    def q_power(cls, k: int, coeff=1) -> "Scalar":
        return cls.laurent([(k, coeff)])

    @classmethod
    def _coerce_operand(cls, x):
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.rational(x)
        return None

    # -- ring structure ------------------------------------------------------

    def _promote(self, other: "Scalar"):
        """Return (tag, n, payload_self, payload_other) in a common ring."""
        a, b = self, other
        if a.tag == b.tag and a.n == b.n:
            return a.tag, a.n, a.payload, b.payload
        if a.tag == RATIONAL:
            if b.tag == CYCLOTOMIC:
                k = len(b.payload)
                return CYCLOTOMIC, b.n, (a.payload,) + (Fraction(0),) * (k - 1), b.payload
            if b.tag == LAURENT:
                return LAURENT, 0, ((0, a.payload),) if a.payload else (), b.payload
        if b.tag == RATIONAL:
            tag, n, pb, pa = other._promote(a)
            return tag, n, pa, pb
        raise RingMismatch(f"cannot combine {a.ring_name()} with {b.ring_name()}")

    def ring_name(self) -> str:
        if self.tag == CYCLOTOMIC:
            return f"Q(zeta_{self.n})"
        if self.tag == LAURENT:
            return "Q[q,q^-1]"
        return "Q"

    def is_zero(self) -> bool:
        return self.tag == RATIONAL and self.payload == 0

    def is_one(self) -> bool:
        return self.tag == RATIONAL and self.payload == 1

    def is_rational(self) -> bool:
        return self.tag == RATIONAL

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other):
        other = Scalar._coerce_operand(other)
        if other is None:
            return NotImplemented
        tag, n, pa, pb = self._promote(other)
        if tag == RATIONAL:
            return Scalar.rational(pa + pb)
        if tag == CYCLOTOMIC:
            return Scalar.cyclotomic(n, [x + y for x, y in zip(pa, pb)])
        acc = dict(pa)
        for e, c in pb:
            acc[e] = acc.get(e, Fraction(0)) + c
        return Scalar.laurent(acc)

    __radd__ = __add__

    def __neg__(self):
        if self.tag == RATIONAL:
            return Scalar.rational(-self.payload)
        if self.tag == CYCLOTOMIC:
            return Scalar(CYCLOTOMIC, self.n, tuple(-c for c in self.payload), _raw=True)
        return Scalar(LAURENT, 0, tuple((e, -c) for e, c in self.payload), _raw=True)

    def __sub__(self, other):
        other = Scalar._coerce_operand(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = Scalar._coerce_operand(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = Scalar._coerce_operand(other)
        if other is None:
            return NotImplemented
        tag, n, pa, pb = self._promote(other)
        if tag == RATIONAL:
            return Scalar.rational(pa * pb)
        if tag == CYCLOTOMIC:
            return Scalar.cyclotomic(n, _cyc_mul(n, pa, pb))
        acc: dict[int, Fraction] = {}
        for e1, c1 in pa:
            for e2, c2 in pb:
                e = e1 + e2
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return Scalar.laurent(acc)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.tag == RATIONAL:
            if self.payload == 0:
                raise ZeroDivisionError("scalar inverse of zero")
            return Scalar.rational(1 / self.payload)
        if self.tag == CYCLOTOMIC:
            return Scalar.cyclotomic(self.n, _cyc_inverse(self.n, self.payload))
        if len(self.payload) != 1:
            raise NonUnitLaurent(f"not a unit in Q[q,q^-1]: {self}")
        (e, c), = self.payload
        return Scalar.laurent([(-e, 1 / c)])

    def __truediv__(self, other):
        other = Scalar._coerce_operand(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = Scalar._coerce_operand(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base = self.inverse()
            k = -k
        out = Scalar.one()
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = Scalar._coerce_operand(other)
        if other is None:
            return NotImplemented
        return (self.tag, self.n, self.payload) == (other.tag, other.n, other.payload)

    def __hash__(self):
        if self.tag == RATIONAL:
            return hash(self.payload)
        return hash((self.tag, self.n, self.payload))

    # -- text form -----------------------------------------------------------

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Scalar({self.render()!r})"

    def render(self) -> str:
        """Canonical text form without ring header; see parse_scalar."""
        if self.tag == RATIONAL:
            return str(self.payload)
        if self.tag == CYCLOTOMIC:
            return _render_terms(
                [(c, "z", e) for e, c in enumerate(self.payload) if c != 0]
            )
        return _render_terms([(c, "q", e) for e, c in self.payload])

    def to_text(self) -> str:
        """Text form with the ring header where the ring is not implied."""
        if self.tag == CYCLOTOMIC:
            return f"Q(zeta_{self.n}): {self.render()}"
        return self.render()


def _render_terms(terms) -> str:
    # terms: list of (coeff, symbol, exponent), already ordered
    if not terms:
        return "0"
    parts = []
    for i, (c, sym, e) in enumerate(terms):
        neg = c < 0
        mag = -c if neg else c
        if e == 0:
            body = str(mag)
        else:
            pw = sym if e == 1 else f"{sym}^{e}"
            body = pw if mag == 1 else f"{mag}*{pw}"
        if i == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# parsing

def parse_scalar(text: str, ring: str = RATIONAL, N: int = 0) -> Scalar:
    """Parse the canonical text form back into a Scalar.

    `ring`/`N` give the expected ring when the text has no header and no
    variable occurrence would disambiguate it; a "Q(zeta_N):" header wins.
    """
    s = text.strip()
    if s.startswith("Q(zeta_"):
        head, _, rest = s.partition(":")
        N = int(head[len("Q(zeta_"):-1])
        ring = CYCLOTOMIC
        s = rest.strip()
    if "q" in s:
        ring = LAURENT
    if s == "":
        raise ValueError("empty scalar text")
    terms = _split_terms(s)
    if ring == LAURENT:
        acc: dict[int, Fraction] = {}
        for sign, term in terms:
            c, e = _parse_term(term, "q")
            acc[e] = acc.get(e, Fraction(0)) + sign * c
        return Scalar.laurent(acc)
    if "z" in s or ring == CYCLOTOMIC:
        if N < 1:
            raise ValueError(f"cyclotomic text without ring header: {text!r}")
        coeffs = [Fraction(0)] * euler_phi(N)
        for sign, term in terms:
            c, e = _parse_term(term, "z")
            if e >= len(coeffs):
                coeffs.extend([Fraction(0)] * (e - len(coeffs) + 1))
            coeffs[e] += sign * c
        return Scalar.cyclotomic(N, coeffs)
    total = Fraction(0)
    for sign, term in terms:
        c, e = _parse_term(term, None)
        total += sign * c
    return Scalar.rational(total)


def _split_terms(s: str) -> list[tuple[int, str]]:
    """Split on top-level + and -; signs after '^' belong to exponents."""
    out = []
    sign, buf, prev = 1, [], ""
    for ch in s:
        if ch in "+-" and prev != "^" and prev != "":
            if "".join(buf).strip():
                out.append((sign, "".join(buf).strip()))
            sign, buf = (1 if ch == "+" else -1), []
            prev = ""
            continue
        if ch == "-" and prev == "":
            sign = -sign
            continue
        buf.append(ch)
        if not ch.isspace():
            prev = ch
    if "".join(buf).strip():
        out.append((sign, "".join(buf).strip()))
    return out


def _parse_term(term: str, sym) -> tuple[Fraction, int]:
    """One product term 'c', 'c*v^e', 'v^e', or 'v'; returns (coeff, exp)."""
    t = term.replace(" ", "")
    if sym is None or sym not in t:
        return Fraction(t), 0
    coeff_s, _, var_s = t.rpartition("*")
    if not coeff_s:
        coeff = Fraction(1)
    else:
        coeff = Fraction(coeff_s)
    if not var_s.startswith(sym):
        raise ValueError(f"bad scalar term: {term!r}")
    rest = var_s[len(sym):]
    if rest == "":
        e = 1
    elif rest.startswith("^"):
        e = int(rest[1:])
    else:
        raise ValueError(f"bad scalar term: {term!r}")
    return coeff, e
