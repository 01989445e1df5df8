"""Scalar semirings and the symmetrized (pos, neg) coefficient pairs.

A :class:`ScalarDomain` bundles the carrier operations of one of five exact
semirings.  A :class:`PairScalar` is an element of the symmetrization
``A x A`` with componentwise addition and the twist product

    (a0, a1) * (b0, b1) = (a0*b0 + a1*b1, a0*b1 + a1*b0)

so the second slot records the formally negated part.  Swapping the slots is
the negation map; the diagonal pairs ``(t, t)`` are the quasi-zeros, and ``y``
surpasses ``x`` when ``y = x + (t, t)`` for some scalar ``t``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from .errors import DomainMismatchError, ScalarParseError, UnsupportedDomainError


class _NegInfType:
    """The additive identity of max-plus: a sentinel below every number."""

    _instance: Optional["_NegInfType"] = None

    def __new__(cls) -> "_NegInfType":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "-inf"

    def __reduce__(self):
        return (_NegInfType, ())


NEG_INF = _NegInfType()


class Kind(enum.Enum):
    INTEGERS = "int"
    RATIONALS = "rat"
    NATURALS = "nat"
    BOOLEANS = "bool"
    MAXPLUS = "maxplus"


class ScalarDomain:
    """A commutative semiring with exact, decidable equality.

    Subclasses provide ``add``, ``mul``, ``coerce`` and the witness search
    used by :func:`surpass_witness`.  Instances are singletons, so identity
    comparison is a valid domain check.
    """

    kind: Kind
    zero: Any
    one: Any
    has_negation: bool = False

    @property
    def name(self) -> str:
        return self.kind.value

    def __repr__(self) -> str:
        return f"<ScalarDomain {self.name}>"

    def __reduce__(self):
        return (get_domain, (self.name,))

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def eq(self, a, b) -> bool:
        return a == b

    def is_zero(self, a) -> bool:
        return self.eq(a, self.zero)

    def sum(self, values):
        total = self.zero
        for v in values:
            total = self.add(total, v)
        return total

    def coerce(self, value):
        """Validate ``value`` as a carrier element and return its canonical form."""
        raise NotImplementedError

    def parse(self, literal):
        """Read a JSON/CSV scalar literal (number, ``"p/q"`` string, bool, ``"-inf"``)."""
        raise NotImplementedError

    def to_json(self, value):
        raise NotImplementedError

    def shift_witness(self, xp, xn, yp, yn):
        """Return ``t`` with ``yp = xp + t`` and ``yn = xn + t``, or ``None``."""
        raise NotImplementedError


def _exact_number(literal) -> Fraction:
    """Parse a numeric literal exactly; floats are refused."""
    if isinstance(literal, bool):
        raise ScalarParseError(f"boolean {literal!r} is not a number")
    if isinstance(literal, int):
        return Fraction(literal)
    if isinstance(literal, Fraction):
        return literal
    if isinstance(literal, str):
        text = literal.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise ScalarParseError(f"not an exact number: {literal!r}") from None
    raise ScalarParseError(f"unsupported scalar literal {literal!r} ({type(literal).__name__})")


class _Integers(ScalarDomain):
    kind = Kind.INTEGERS
    zero = 0
    one = 1
    has_negation = True

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def coerce(self, value):
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise ScalarParseError(f"{value!r} is not an integer")
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise ScalarParseError(f"{value} is not an integer")
            return value.numerator
        return value

    def parse(self, literal):
        if literal == "-inf":
            raise ScalarParseError("'-inf' is only valid over maxplus")
        return self.coerce(_exact_number(literal))

    def to_json(self, value):
        return value

    def shift_witness(self, xp, xn, yp, yn):
        t = yp - xp
        return t if yn - xn == t else None


class _Naturals(_Integers):
    kind = Kind.NATURALS
    has_negation = False

    def coerce(self, value):
        value = super().coerce(value)
        if value < 0:
            raise ScalarParseError(f"{value} is not a natural number")
        return value

    def shift_witness(self, xp, xn, yp, yn):
        t = yp - xp
        return t if t >= 0 and yn - xn == t else None


class _Rationals(ScalarDomain):
    kind = Kind.RATIONALS
    zero = Fraction(0)
    one = Fraction(1)
    has_negation = True

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def coerce(self, value):
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise ScalarParseError(f"{value!r} is not a rational number")
        return Fraction(value)

    def parse(self, literal):
        if literal == "-inf":
            raise ScalarParseError("'-inf' is only valid over maxplus")
        return _exact_number(literal)

    def to_json(self, value):
        if value.denominator == 1:
            return value.numerator
        return f"{value.numerator}/{value.denominator}"

    def shift_witness(self, xp, xn, yp, yn):
        t = yp - xp
        return t if yn - xn == t else None


class _Booleans(ScalarDomain):
    kind = Kind.BOOLEANS
    zero = False
    one = True

    def add(self, a, b):
        return a or b

    def mul(self, a, b):
        return a and b

    def coerce(self, value):
        if isinstance(value, bool):
            return value
        if isinstance(value, int) and value in (0, 1):
            return bool(value)
        raise ScalarParseError(f"{value!r} is not a boolean (use true/false or 0/1)")

    def parse(self, literal):
        if isinstance(literal, str):
            text = literal.strip().lower()
            if text in ("true", "1"):
                return True
            if text in ("false", "0"):
                return False
            raise ScalarParseError(f"{literal!r} is not a boolean")
        return self.coerce(literal)

    def to_json(self, value):
        return bool(value)

    def shift_witness(self, xp, xn, yp, yn):
        for t in (False, True):
            if (xp or t) == yp and (xn or t) == yn:
                return t
        return None


class _MaxPlus(ScalarDomain):
    """Max-plus: ``a + b = max(a, b)``, ``a * b = a + b``, zero is ``NEG_INF``."""

    kind = Kind.MAXPLUS
    zero = NEG_INF
    one = 0

    def add(self, a, b):
        if a is NEG_INF:
            return b
        if b is NEG_INF:
            return a
        return a if a >= b else b

    def mul(self, a, b):
        if a is NEG_INF or b is NEG_INF:
            return NEG_INF
        return a + b

    def coerce(self, value):
        if value is NEG_INF:
            return value
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise ScalarParseError(f"{value!r} is not a max-plus scalar")
        if isinstance(value, Fraction) and value.denominator == 1:
            return value.numerator
        return value

    def parse(self, literal):
        if isinstance(literal, str) and literal.strip().lower() == "-inf":
            return NEG_INF
        return self.coerce(_exact_number(literal))

    def to_json(self, value):
        if value is NEG_INF:
            return "-inf"
        if isinstance(value, Fraction):
            return f"{value.numerator}/{value.denominator}"
        return value

    def leq(self, a, b) -> bool:
        if a is NEG_INF:
            return True
        if b is NEG_INF:
            return False
        return a <= b

    def shift_witness(self, xp, xn, yp, yn):
        # Any solution t is either -inf (then y == x), y.pos or y.neg.
        for t in (NEG_INF, yp, yn):
            if self.add(xp, t) == yp and self.add(xn, t) == yn:
                return t
        return None


INTEGERS = _Integers()
RATIONALS = _Rationals()
NATURALS = _Naturals()
BOOLEANS = _Booleans()
MAXPLUS = _MaxPlus()

DOMAINS = {d.name: d for d in (INTEGERS, RATIONALS, NATURALS, BOOLEANS, MAXPLUS)}

_ALIASES = {
    "integers": "int",
    "z": "int",
    "rationals": "rat",
    "q": "rat",
    "naturals": "nat",
    "n": "nat",
    "booleans": "bool",
    "boolean": "bool",
    "max-plus": "maxplus",
    "tropical": "maxplus",
}


def get_domain(name: str | ScalarDomain) -> ScalarDomain:
    """Look up a domain by short name (``int``, ``rat``, ``nat``, ``bool``, ``maxplus``)."""
    if isinstance(name, ScalarDomain):
        return name
    key = name.strip().lower()
    key = _ALIASES.get(key, key)
    try:
        return DOMAINS[key]
    except KeyError:
        raise UnsupportedDomainError(f"unknown scalar domain {name!r}; choose from {sorted(DOMAINS)}") from None


@dataclass(frozen=True, slots=True)
class PairScalar:
    """A symmetrized coefficient ``(pos, neg)`` over ``domain``."""

    pos: Any
    neg: Any
    domain: ScalarDomain

    @classmethod
    def embed(cls, value, domain: ScalarDomain) -> "PairScalar":
        return cls(value, domain.zero, domain)

    @classmethod
    def zero_of(cls, domain: ScalarDomain) -> "PairScalar":
        return cls(domain.zero, domain.zero, domain)

    @classmethod
    def one_of(cls, domain: ScalarDomain) -> "PairScalar":
        return cls(domain.one, domain.zero, domain)

    def __add__(self, other: "PairScalar") -> "PairScalar":
        return pair_add(self, other)

    def __mul__(self, other: "PairScalar") -> "PairScalar":
        return pair_mul(self, other)

    def swap(self) -> "PairScalar":
        return PairScalar(self.neg, self.pos, self.domain)

    def is_zero(self) -> bool:
        d = self.domain
        return d.is_zero(self.pos) and d.is_zero(self.neg)

    def is_balanced(self) -> bool:
        return self.domain.eq(self.pos, self.neg)

    def __repr__(self) -> str:
        return f"({self.pos!r}, {self.neg!r})"


def _check_same(x: PairScalar, y: PairScalar) -> ScalarDomain:
    if x.domain is not y.domain:
        raise DomainMismatchError(f"cannot combine {x.domain.name} and {y.domain.name} scalars")
    return x.domain


def pair_add(x: PairScalar, y: PairScalar) -> PairScalar:
    d = _check_same(x, y)
    return PairScalar(d.add(x.pos, y.pos), d.add(x.neg, y.neg), d)


def pair_mul(x: PairScalar, y: PairScalar) -> PairScalar:
    """Twist product of two pairs."""
    d = _check_same(x, y)
    add, mul = d.add, d.mul
    return PairScalar(
        add(mul(x.pos, y.pos), mul(x.neg, y.neg)),
        add(mul(x.pos, y.neg), mul(x.neg, y.pos)),
        d,
    )


def pair_swap(x: PairScalar) -> PairScalar:
    return x.swap()


def is_balanced(x: PairScalar) -> bool:
    """True iff ``x`` is a quasi-zero, i.e. a diagonal pair."""
    return x.is_balanced()


def pair_sub_formal(x: PairScalar) -> PairScalar:
    """``x (-) x``; always a quasi-zero."""
    return pair_add(x, x.swap())


def shift_witness(x: PairScalar, y: PairScalar):
    """The scalar ``t`` with ``y = x + (t, t)``, or ``None`` when there is none."""
    d = _check_same(x, y)
    return d.shift_witness(x.pos, x.neg, y.pos, y.neg)


def surpass_witness(x: PairScalar, y: PairScalar) -> bool:
    """Decide whether ``y`` surpasses ``x``."""
    return shift_witness(x, y) is not None
