"""Hasse-Schmidt derivations induced by an endomorphism of ``V_n``.

For ``f`` in ``End(V_n)`` the induced derivation acts on a basis word by

    D_k(b_{i_1} ^ ... ^ b_{i_r}) = sum over k_1 + ... + k_r = k of
                                   f^{k_1}(b_{i_1}) ^ ... ^ f^{k_r}(b_{i_r})

and ``D(z) = sum_k D_k z^k``.  Series are kept as :class:`ZPolynomial`
objects, i.e. coefficient lists truncated at an explicit order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import DegreeError, DomainMismatchError, UnsupportedDomainError
from .exterior import MultiVector, Word, mv_sum, wedge
from .scalars import RATIONALS, PairScalar, ScalarDomain, pair_add


@dataclass(frozen=True)
class Endomorphism:
    """An ``n x n`` matrix over ``domain``; column ``j`` is the image of ``b_j``.

    ``matrix[i][j]`` is the ``b_i`` coordinate of ``f(b_j)``.
    """

    n: int
    domain: ScalarDomain
    matrix: Tuple[Tuple, ...]
    _powers: List = field(default_factory=list, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        rows = tuple(tuple(self.domain.coerce(a) for a in row) for row in self.matrix)
        if len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise ValueError(f"matrix is not {self.n} x {self.n}")
        object.__setattr__(self, "matrix", rows)

    @classmethod
    def identity(cls, n: int, domain: ScalarDomain) -> "Endomorphism":
        return cls(n, domain, tuple(tuple(domain.one if i == j else domain.zero for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, n: int, domain: ScalarDomain) -> "Endomorphism":
        return cls(n, domain, tuple(tuple(domain.zero for _ in range(n)) for _ in range(n)))

    @classmethod
    def from_images(cls, n: int, domain: ScalarDomain, images: Dict[int, Dict[int, object]]) -> "Endomorphism":
        """Build from ``{j: {i: coeff}}`` meaning ``f(b_j) = sum_i coeff * b_i``."""
        rows = [[domain.zero] * n for _ in range(n)]
        for j, image in images.items():
            for i, c in image.items():
                rows[i][j] = domain.coerce(c)
        return cls(n, domain, tuple(map(tuple, rows)))

    def power(self, k: int) -> Tuple[Tuple, ...]:
        """The matrix of ``f^k`` (memoized)."""
        if k < 0:
            raise ValueError("negative power")
        d = self.domain
        powers = self._powers
        if not powers:
            powers.append(Endomorphism.identity(self.n, d).matrix)
        while len(powers) <= k:
            prev = powers[-1]
            n = self.n
            powers.append(
                tuple(
                    tuple(d.sum(d.mul(self.matrix[i][m], prev[m][j]) for m in range(n)) for j in range(n))
                    for i in range(n)
                )
            )
        return powers[k]

    def image_column(self, j: int, k: int = 1) -> List:
        """Coordinates of ``f^k(b_j)``."""
        mat = self.power(k)
        return [mat[i][j] for i in range(self.n)]

    def apply_coordinates(self, coords: Sequence) -> List:
        d = self.domain
        return [d.sum(d.mul(self.matrix[i][j], coords[j]) for j in range(self.n)) for i in range(self.n)]


def _check_rank(f: Endomorphism, x: MultiVector) -> None:
    if f.domain is not x.domain:
        raise DomainMismatchError(f"endomorphism over {f.domain.name}, element over {x.domain.name}")
    if f.n != x.n:
        raise DomainMismatchError(f"endomorphism of rank {f.n}, element of rank {x.n}")


def endo_apply(f: Endomorphism, v: MultiVector) -> MultiVector:
    """Apply ``f`` to a degree-1 element."""
    _check_rank(f, v)
    if any(d != 1 for d in v.degrees()):
        raise DegreeError("endo_apply needs a pure degree-1 element")
    return MultiVector.vector(v.n, v.domain, f.apply_coordinates(v.vector_coordinates()))


def compositions(k: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Weak compositions of ``k`` into ``parts`` ordered non-negative parts."""
    if parts == 0:
        if k == 0:
            yield ()
        return
    if parts == 1:
        yield (k,)
        return
    for first in range(k, -1, -1):
        for rest in compositions(k - first, parts - 1):
            yield (first,) + rest


def _wedge_columns(domain: ScalarDomain, columns: Sequence[Sequence], out: Dict[Word, list]) -> None:
    """Accumulate ``c_1 ^ ... ^ c_r`` for plain degree-1 coordinate vectors into ``out``.

    ``out`` maps words to mutable ``[pos, neg]`` lists.
    """
    add, mul, is_zero = domain.add, domain.mul, domain.is_zero
    state: Dict[Word, Tuple] = {(): (domain.one, domain.zero)}
    for col in columns:
        support = [(a, c) for a, c in enumerate(col) if not is_zero(c)]
        nxt: Dict[Word, list] = {}
        for w, (p, q) in state.items():
            for a, c in support:
                if a in w:
                    continue
                above = sum(1 for x in w if x > a)
                nw = tuple(sorted(w + (a,)))
                np_, nq = mul(c, p), mul(c, q)
                if above & 1:
                    np_, nq = nq, np_
                slot = nxt.get(nw)
                if slot is None:
                    nxt[nw] = [np_, nq]
                else:
                    slot[0] = add(slot[0], np_)
                    slot[1] = add(slot[1], nq)
        state = {w: (s[0], s[1]) for w, s in nxt.items()}
        if not state:
            return
    for w, (p, q) in state.items():
        slot = out.get(w)
        if slot is None:
            out[w] = [p, q]
        else:
            slot[0] = add(slot[0], p)
            slot[1] = add(slot[1], q)


@lru_cache(maxsize=1 << 16)
def _word_hs(f: Endomorphism, word: Word, k: int) -> Tuple[Tuple[Word, Tuple], ...]:
    """``D_k`` of one canonical basis word, as raw ``(word, (pos, neg))`` items."""
    acc: Dict[Word, list] = {}
    for parts in compositions(k, len(word)):
        _wedge_columns(f.domain, [f.image_column(i, e) for i, e in zip(word, parts)], acc)
    return tuple((w, (p, q)) for w, (p, q) in acc.items())


def hs_coefficient(f: Endomorphism, k: int, x: MultiVector) -> MultiVector:
    """``D_k(x)`` for the derivation induced by ``f``; ``D_0`` is the identity."""
    _check_rank(f, x)
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return x
    d = f.domain
    out: Dict[Word, PairScalar] = {}
    for word, c in x.terms.items():
        for w, (p, q) in _word_hs(f, word, k):
            term = PairScalar(p, q, d) * c
            prev = out.get(w)
            out[w] = term if prev is None else pair_add(prev, term)
    return MultiVector._trusted(x.n, d, out)


class ZPolynomial:
    """A truncated power series ``sum_k coeffs[k] z^k`` with multivector coefficients.

    Coefficients beyond ``trunc`` are discarded.  ``trunc=None`` means the
    list is an honest polynomial with nothing dropped.
    """

    __slots__ = ("coeffs", "trunc", "n", "domain")

    def __init__(self, coeffs: Sequence[MultiVector], trunc: Optional[int] = None) -> None:
        if not coeffs:
            raise ValueError("a ZPolynomial needs at least one coefficient")
        first = coeffs[0]
        for c in coeffs:
            if c.n != first.n or c.domain is not first.domain:
                raise DomainMismatchError("coefficients over different ranks or domains")
        coeffs = list(coeffs)
        if trunc is not None:
            if trunc < 0:
                raise ValueError("trunc must be non-negative")
            coeffs = coeffs[: trunc + 1]
        self.coeffs = tuple(coeffs)
        self.trunc = trunc
        self.n = first.n
        self.domain = first.domain

    @classmethod
    def constant(cls, x: MultiVector, trunc: Optional[int] = None) -> "ZPolynomial":
        return cls([x], trunc)

    def coefficient(self, k: int) -> MultiVector:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return MultiVector.zero(self.n, self.domain)

    def __getitem__(self, k: int) -> MultiVector:
        return self.coefficient(k)

    def __len__(self) -> int:
        return len(self.coeffs)

    def degree(self) -> Optional[int]:
        """Highest power with a nonzero coefficient, ``None`` for the zero series."""
        for k in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[k]:
                return k
        return None

    def _joint_trunc(self, other: "ZPolynomial") -> Optional[int]:
        ts = [t for t in (self.trunc, other.trunc) if t is not None]
        return min(ts) if ts else None

    def __add__(self, other: "ZPolynomial") -> "ZPolynomial":
        size = max(len(self), len(other))
        return ZPolynomial([self[k] + other[k] for k in range(size)], self._joint_trunc(other))

    def __mul__(self, other: "ZPolynomial") -> "ZPolynomial":
        """Cauchy product with the wedge on coefficients."""
        trunc = self._joint_trunc(other)
        top = len(self) + len(other) - 2
        if trunc is not None:
            top = min(top, trunc)
        out = []
        for k in range(top + 1):
            out.append(
                mv_sum(
                    (wedge(self[i], other[k - i]) for i in range(max(0, k - len(other) + 1), min(k, len(self) - 1) + 1)),
                    self.n,
                    self.domain,
                )
            )
        return ZPolynomial(out, trunc)

    def shift(self, k: int = 1) -> "ZPolynomial":
        """Multiply by ``z^k``; a series known through ``z^t`` becomes known through ``z^(t+k)``."""
        zero = MultiVector.zero(self.n, self.domain)
        trunc = None if self.trunc is None else self.trunc + k
        return ZPolynomial([zero] * k + list(self.coeffs), trunc)

    def with_trunc(self, trunc: int) -> "ZPolynomial":
        coeffs = list(self.coeffs) + [MultiVector.zero(self.n, self.domain)] * max(0, trunc + 1 - len(self))
        return ZPolynomial(coeffs, trunc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZPolynomial):
            return NotImplemented
        size = max(len(self), len(other))
        return all(self[k] == other[k] for k in range(size))

    def __repr__(self) -> str:
        body = " + ".join(f"[{c!r}]z^{k}" for k, c in enumerate(self.coeffs) if c) or "0"
        return f"ZPolynomial({body}, trunc={self.trunc})"


def hs_series(f: Endomorphism, x: MultiVector, trunc: int) -> ZPolynomial:
    """``D(z) x`` truncated at ``z^trunc``."""
    if trunc < 0:
        raise ValueError("trunc must be non-negative")
    return ZPolynomial([hs_coefficient(f, k, x) for k in range(trunc + 1)], trunc)


def apply_hs_series(f: Endomorphism, poly: ZPolynomial, trunc: int) -> ZPolynomial:
    """``D(z)`` applied coefficientwise to a series, powers of ``z`` collected."""
    total = None
    for i, c in enumerate(poly.coeffs):
        if i > trunc:
            break
        term = hs_series(f, c, trunc - i).shift(i).with_trunc(trunc)
        total = term if total is None else total + term
    return total


# The displayed Schur polynomials: each entry is (coefficient, (k_1, ..., k_m)),
# standing for coefficient * d_{k_1} d_{k_2} ... d_{k_m}.
SCHUR_DISPLAY = {
    1: [(Fraction(1), (1,))],
    2: [(Fraction(1, 2), (1, 1)), (Fraction(1), (2,))],
    3: [(Fraction(1, 6), (1, 1, 1)), (Fraction(1), (1, 2)), (Fraction(1), (3,))],
    4: [
        (Fraction(1, 24), (1, 1, 1, 1)),
        (Fraction(1, 2), (1, 1, 2)),
        (Fraction(1, 2), (2, 2)),
        (Fraction(1), (1, 3)),
        (Fraction(1), (4,)),
    ],
}


def schur_higher_derivation(delta: Endomorphism, r: int, x: MultiVector) -> MultiVector:
    """``D_r(x)`` for the higher derivation of ``delta`` (every ``d_k = delta``).

    Only the four displayed Schur polynomials are available and only over the
    rationals, since they divide by factorials.
    """
    if delta.domain is not RATIONALS:
        raise UnsupportedDomainError("Schur higher derivations need the rationals")
    if r not in SCHUR_DISPLAY:
        raise ValueError(f"r={r} out of range; only D_1..D_4 are implemented")
    _check_rank(delta, x)
    if any(d != 1 for d in x.degrees()):
        raise DegreeError("schur_higher_derivation acts on degree-1 elements")
    terms = []
    for coeff, word in SCHUR_DISPLAY[r]:
        y = x
        for _ in reversed(word):
            y = endo_apply(delta, y)
        terms.append(y.scale(PairScalar.embed(coeff, RATIONALS)))
    return mv_sum(terms, x.n, x.domain)


def leibniz_mismatch(f: Endomorphism, u: MultiVector, v: MultiVector, trunc: int) -> Optional[Tuple[str, int]]:
    """First failure of the Leibniz rule or of series multiplicativity on ``u ^ v``.

    Checks ``D_k(u ^ v) = sum_{i+j=k} D_i u ^ D_j v`` for each ``k <= trunc``
    and ``D(z)(u ^ v) = D(z)u * D(z)v`` as truncated series.  Returns
    ``None`` when both hold, else ``(rule, power)`` of the first mismatch.
    """
    du = hs_series(f, u, trunc)
    dv = hs_series(f, v, trunc)
    duv = hs_series(f, wedge(u, v), trunc)
    for k in range(trunc + 1):
        rhs = mv_sum((wedge(du[i], dv[k - i]) for i in range(k + 1)), f.n, f.domain)
        if duv[k] != rhs:
            return ("leibniz", k)
    product = du * dv
    for k in range(trunc + 1):
        if duv[k] != product[k]:
            return ("multiplicativity", k)
    return None
