"""Exact sparse multivariate polynomials over the rationals.

A Ring declares the symbols for a system of n univariate degree-d
polynomials f_i(x) = a_i_0 x^d + a_i_1 x^(d-1) + ... + a_i_d: the
coefficient variables a_i_j, optionally the eliminand x, and optionally
the substitution symbols r and b_i_j used by planted-root checks.

Coefficients are arbitrary-precision Fractions, monomials are sparse
exponent maps, and every value is immutable after construction, so
polynomials can be shared freely between threads.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, NamedTuple, Union

Rational = Union[int, Fraction]


class RingMismatchError(ValueError):
    """Operands declared over incompatible rings, or an unknown variable."""


class ZeroPolynomialError(ValueError):
    """An operation that needs a nonzero polynomial got the zero polynomial."""


class Variable(NamedTuple):
    """A ring symbol. kind is "a" (coefficient of the input system),
    "x" (the eliminand), or one of the auxiliaries "r", "b"."""

    kind: str
    i: int = 0
    j: int = 0

    @property
    def name(self) -> str:
        if self.kind in ("x", "r"):
            return self.kind
        return f"{self.kind}_{self.i}_{self.j}"

    @classmethod
    def parse(cls, name: str) -> "Variable":
        if name in ("x", "r"):
            return cls(name)
        kind, sep, rest = name.partition("_")
        if sep and kind in ("a", "b"):
            parts = rest.split("_")
            if len(parts) == 2 and parts[0].isdigit() and parts[1].isdigit():
                return cls(kind, int(parts[0]), int(parts[1]))
        raise ValueError(f"unrecognized variable name {name!r}")

    def __str__(self) -> str:
        return self.name


class Ring:
    """The variable set for a (d, n) system.

    Equality is structural: two rings with the same d, n and the same
    optional symbol groups have interchangeable variables.
    """

    __slots__ = ("d", "n", "with_x", "with_aux", "_members", "_key")

    def __init__(self, d: int, n: int, *, with_x: bool = False, with_aux: bool = False):
        if d < 1:
            raise ValueError(f"degree d must be >= 1, got {d}")
        if n < 1:
            raise ValueError(f"system size n must be >= 1, got {n}")
        self.d = d
        self.n = n
        self.with_x = with_x
        self.with_aux = with_aux
        members = {Variable("a", i, j) for i in range(1, n + 1) for j in range(d + 1)}
        if with_x:
            members.add(Variable("x"))
        if with_aux:
            members.add(Variable("r"))
            members.update(Variable("b", i, j) for i in range(1, n + 1) for j in range(d))
        self._members = frozenset(members)
        self._key = (d, n, with_x, with_aux)

    def coeff(self, i: int, j: int) -> Variable:
        """The coefficient symbol a_i_j, 1 <= i <= n, 0 <= j <= d."""
        if not (1 <= i <= self.n and 0 <= j <= self.d):
            raise ValueError(f"coefficient index ({i},{j}) outside 1..{self.n} x 0..{self.d}")
        return Variable("a", i, j)

    @property
    def x(self) -> Variable:
        if not self.with_x:
            raise RingMismatchError("ring was declared without the eliminand x")
        return Variable("x")

    @property
    def root(self) -> Variable:
        if not self.with_aux:
            raise RingMismatchError("ring was declared without auxiliary symbols")
        return Variable("r")

    def aux(self, i: int, j: int) -> Variable:
        """The cofactor coefficient symbol b_i_j, 0 <= j <= d-1."""
        if not self.with_aux:
            raise RingMismatchError("ring was declared without auxiliary symbols")
        if not (1 <= i <= self.n and 0 <= j <= self.d - 1):
            raise ValueError(f"auxiliary index ({i},{j}) outside 1..{self.n} x 0..{self.d - 1}")
        return Variable("b", i, j)

    def coeff_vars_row_major(self) -> tuple:
        """a_1_0, a_1_1, ..., a_1_d, a_2_0, ..., a_n_d."""
        return tuple(Variable("a", i, j) for i in range(1, self.n + 1) for j in range(self.d + 1))

    def coeff_vars_column_major(self) -> tuple:
        """a_1_0, a_2_0, ..., a_n_0, a_1_1, ..., a_n_d."""
        return tuple(Variable("a", i, j) for j in range(self.d + 1) for i in range(1, self.n + 1))

    @property
    def variables(self) -> tuple:
        return tuple(sorted(self._members))

    def __contains__(self, var: Variable) -> bool:
        return var in self._members

    def __eq__(self, other) -> bool:
        return isinstance(other, Ring) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        flags = "".join(
            s for s, on in ((", with_x", self.with_x), (", with_aux", self.with_aux)) if on
        )
        return f"Ring(d={self.d}, n={self.n}{flags})"


def _check_same_ring(p: "Polynomial", q: "Polynomial") -> None:
    if p.ring != q.ring:
        raise RingMismatchError(f"mixed rings {p.ring!r} and {q.ring!r}")


class Monomial:
    """A sparse exponent vector; variables not listed have exponent zero."""

    __slots__ = ("exps", "_hash")

    def __init__(self, exps: Iterable = ()):
        items = exps.items() if isinstance(exps, Mapping) else exps
        merged: dict = {}
        for v, e in items:
            e = int(e)
            if e < 0:
                raise ValueError(f"negative exponent {e} for {v}")
            if e:
                merged[v] = merged.get(v, 0) + e
        self.exps = tuple(sorted(merged.items()))
        self._hash = hash(self.exps)

    @classmethod
    def _make(cls, sorted_pairs: tuple) -> "Monomial":
        # trusted path: pairs already sorted, positive, unique
        m = cls.__new__(cls)
        m.exps = sorted_pairs
        m._hash = hash(sorted_pairs)
        return m

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    @property
    def support(self) -> frozenset:
        return frozenset(v for v, _ in self.exps)

    @property
    def is_one(self) -> bool:
        return not self.exps

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.exps)

    def __getitem__(self, var: Variable) -> int:
        for v, e in self.exps:
            if v == var:
                return e
        return 0

    def mul(self, other: "Monomial") -> "Monomial":
        if not self.exps:
            return other
        if not other.exps:
            return self
        merged = dict(self.exps)
        for v, e in other.exps:
            merged[v] = merged.get(v, 0) + e
        return Monomial._make(tuple(sorted(merged.items())))

    def divides(self, other: "Monomial") -> bool:
        it = dict(other.exps)
        return all(it.get(v, 0) >= e for v, e in self.exps)

    def div(self, other: "Monomial") -> "Monomial":
        """Exact quotient self / other; raises if other does not divide self."""
        quot = dict(self.exps)
        for v, e in other.exps:
            left = quot.get(v, 0) - e
            if left < 0:
                raise ValueError(f"{other!r} does not divide {self!r}")
            if left:
                quot[v] = left
            else:
                del quot[v]
        return Monomial._make(tuple(sorted(quot.items())))

    def lcm(self, other: "Monomial") -> "Monomial":
        merged = dict(self.exps)
        for v, e in other.exps:
            if merged.get(v, 0) < e:
                merged[v] = e
        return Monomial._make(tuple(sorted(merged.items())))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return self.mul(other)

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        if not self.exps:
            return "1"
        return "*".join(v.name if e == 1 else f"{v.name}^{e}" for v, e in self.exps)


MONOMIAL_ONE = Monomial()


def format_rational(c: Rational) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


class Polynomial:
    """A finite Fraction-linear combination of monomials over a fixed ring."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: Mapping[Monomial, Rational] = (), *, _trusted: bool = False):
        self.ring = ring
        if _trusted:
            self.terms = terms
            return
        clean = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for m, c in items:
            c = Fraction(c)
            if not c:
                continue
            for v, _ in m.exps:
                if v not in ring:
                    raise RingMismatchError(f"variable {v.name} not in {ring!r}")
            clean[m] = clean.get(m, Fraction(0)) + c
            if not clean[m]:
                del clean[m]
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ring: Ring) -> "Polynomial":
        return cls(ring, {}, _trusted=True)

    @classmethod
    def constant(cls, ring: Ring, c: Rational) -> "Polynomial":
        c = Fraction(c)
        return cls(ring, {MONOMIAL_ONE: c} if c else {}, _trusted=True)

    @classmethod
    def variable(cls, ring: Ring, var: Variable) -> "Polynomial":
        if var not in ring:
            raise RingMismatchError(f"variable {var.name} not in {ring!r}")
        return cls(ring, {Monomial(((var, 1),)): Fraction(1)}, _trusted=True)

    @classmethod
    def term(cls, ring: Ring, mono: Monomial, c: Rational) -> "Polynomial":
        return cls(ring, {mono: c})

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def total_degree(self) -> int:
        """Maximum term degree; the zero polynomial reports -1."""
        return max((m.degree for m in self.terms), default=-1)

    def items(self):
        return self.terms.items()

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(mono, Fraction(0))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        _check_same_ring(self, other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s:
                out[m] = s
            elif m in out:
                del out[m]
        return Polynomial(self.ring, out, _trusted=True)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        _check_same_ring(self, other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            s = -c if s is None else s - c
            if s:
                out[m] = s
            elif m in out:
                del out[m]
        return Polynomial(self.ring, out, _trusted=True)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()}, _trusted=True)

    def scale(self, c: Rational) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.ring)
        return Polynomial(self.ring, {m: c * v for m, v in self.terms.items()}, _trusted=True)

    def mul_term(self, mono: Monomial, c: Rational) -> "Polynomial":
        """Fast product with the single term c * mono."""
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.ring)
        return Polynomial(
            self.ring, {m.mul(mono): c * v for m, v in self.terms.items()}, _trusted=True
        )

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        _check_same_ring(self, other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1.mul(m2)
                s = out.get(m)
                s = c1 * c2 if s is None else s + c1 * c2
                if s:
                    out[m] = s
                elif m in out:
                    del out[m]
        return Polynomial(self.ring, out, _trusted=True)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    # -- substitution and evaluation ---------------------------------------

    def substitute(self, assignment: Mapping[Variable, object], into: Ring = None) -> "Polynomial":
        """Ring-homomorphic image under var -> polynomial (or constant).

        Variables without an image map to themselves; they must then exist
        in the target ring, otherwise a RingMismatchError is raised.
        """
        target = self.ring if into is None else into
        images = {}
        for v, val in assignment.items():
            if isinstance(val, Polynomial):
                if val.ring != target:
                    raise RingMismatchError(f"image of {v.name} lives in {val.ring!r}, not {target!r}")
                images[v] = val
            else:
                images[v] = Polynomial.constant(target, val)
        pow_cache = {}

        def power(v: Variable, e: int) -> "Polynomial":
            got = pow_cache.get((v, e))
            if got is None:
                base = images[v]
                got = base
                for _ in range(e - 1):
                    got = got * base
                pow_cache[(v, e)] = got
            return got

        out = Polynomial.zero(target)
        for mono, c in self.terms.items():
            acc = Polynomial.constant(target, c)
            for v, e in mono.exps:
                if v in images:
                    acc = acc * power(v, e)
                elif v in target:
                    acc = acc.mul_term(Monomial(((v, e),)), 1)
                else:
                    raise RingMismatchError(
                        f"variable {v.name} has no image and is absent from {target!r}"
                    )
            out = out + acc
        return out

    def evaluate(self, assignment: Mapping[Variable, Rational]):
        """Exact value at a total assignment of the support variables.

        Stays in machine/big integers whenever the inputs allow it."""
        total = 0
        for mono, c in self.terms.items():
            v = c.numerator if c.denominator == 1 else c
            for var, e in mono.exps:
                try:
                    val = assignment[var]
                except KeyError:
                    raise KeyError(f"no value for variable {var.name}") from None
                v = v * (val if e == 1 else val**e)
            total += v
        return total

    # -- normal forms ------------------------------------------------------

    def canonical_lead_monomial(self) -> Monomial:
        """Order-free deterministic lead: lex over the sorted variable list."""
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no lead monomial")
        ranking = self.ring.variables
        return max(self.terms, key=lambda m: tuple(m[v] for v in ranking))

    def content_normalize(self, order=None) -> "Polynomial":
        """Scale to coprime integer coefficients with positive lead coefficient.

        The lead is taken in the given term order when provided, otherwise in
        the canonical order-free sense. Ideal membership is unaffected.
        """
        if not self.terms:
            raise ZeroPolynomialError("cannot normalize the zero polynomial")
        den = 1
        for c in self.terms.values():
            den = lcm(den, c.denominator)
        num = 0
        for c in self.terms.values():
            num = gcd(num, c.numerator * (den // c.denominator))
        factor = Fraction(den, num)
        if order is not None:
            lead = max(self.terms, key=order.key)
        else:
            lead = self.canonical_lead_monomial()
        if self.terms[lead] < 0:
            factor = -factor
        return self.scale(factor)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> list:
        """Term list [{"c": "num/den", "m": {name: exp}}, ...], stably ordered."""
        ranking = self.ring.variables
        order_key = lambda m: tuple(m[v] for v in ranking)
        out = []
        for m in sorted(self.terms, key=order_key, reverse=True):
            out.append(
                {"c": format_rational(self.terms[m]), "m": {v.name: e for v, e in m.exps}}
            )
        return out

    @classmethod
    def from_json(cls, ring: Ring, data: Iterable) -> "Polynomial":
        terms = []
        for entry in data:
            mono = Monomial((Variable.parse(name), e) for name, e in entry["m"].items())
            terms.append((mono, parse_rational(entry["c"])))
        return cls(ring, terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        ranking = self.ring.variables
        parts = []
        for m in sorted(self.terms, key=lambda m: tuple(m[v] for v in ranking), reverse=True):
            c = self.terms[m]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if m.is_one:
                body = format_rational(mag)
            elif mag == 1:
                body = repr(m)
            else:
                body = f"{format_rational(mag)}*{m!r}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text
