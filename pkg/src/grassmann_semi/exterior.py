"""The reduced Grassmann semialgebra over a free module of rank ``n``.

Elements are sparse maps from canonical words (strictly increasing index
tuples) to :class:`~grassmann_semi.scalars.PairScalar` coefficients.  A
coefficient ``(p, q)`` on word ``w`` stands for ``p*w + q*((-)w)``; the
negated word ``(-)w`` is any odd rearrangement of ``w``.  Products with a
repeated index vanish (``b_i ^ b_i = 0``).  The negation map only exists in
degree >= 2, so degree 0 and 1 terms must keep an empty ``neg`` slot.
"""

from __future__ import annotations

from bisect import bisect_right
from itertools import combinations
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

from .errors import DegreeError, DomainMismatchError, NegationUndefinedError
from .scalars import PairScalar, ScalarDomain, pair_add, pair_mul, surpass_witness

Word = Tuple[int, ...]

EVEN, ODD = 0, 1


def inversion_parity(seq: Sequence[int]) -> int:
    """Parity (0 even, 1 odd) of the number of inversions in ``seq``."""
    count = 0
    for i in range(len(seq)):
        a = seq[i]
        for j in range(i + 1, len(seq)):
            if a > seq[j]:
                count += 1
    return count & 1


def sort_word(indices: Sequence[int], n: Optional[int] = None) -> Optional[Tuple[Word, int]]:
    """Bring an index sequence to normal form.

    Returns ``(word, parity)`` with ``word`` sorted and ``parity`` the parity
    of the sorting permutation, or ``None`` (the zero word) when an index
    repeats.
    """
    if n is not None:
        for i in indices:
            if not 0 <= i < n:
                raise IndexError(f"index {i} outside [0, {n - 1}]")
    word = tuple(sorted(indices))
    for a, b in zip(word, word[1:]):
        if a == b:
            return None
    return word, inversion_parity(indices)


def _merge(w1: Word, w2: Word) -> Optional[Tuple[Word, int]]:
    """``sort_word(w1 + w2)`` for two canonical words, without re-sorting from scratch."""
    if not w1:
        return w2, EVEN
    if not w2:
        return w1, EVEN
    crossings = 0
    for b in w2:
        k = bisect_right(w1, b)
        if k and w1[k - 1] == b:
            return None
        crossings += len(w1) - k
    return tuple(sorted(w1 + w2)), crossings & 1


class MultiVector:
    """An element of the reduced Grassmann semialgebra over ``domain``.

    ``terms`` maps canonical words to pair coefficients.  Zero pairs are
    dropped on construction.
    """

    __slots__ = ("n", "domain", "_terms")

    def __init__(
        self,
        n: int,
        domain: ScalarDomain,
        terms: Optional[Mapping[Sequence[int], PairScalar]] = None,
    ) -> None:
        self.n = n
        self.domain = domain
        clean: Dict[Word, PairScalar] = {}
        for word, coeff in (terms or {}).items():
            word = tuple(word)
            if any(not 0 <= i < n for i in word) or any(a >= b for a, b in zip(word, word[1:])):
                raise ValueError(f"{word} is not a strictly increasing word over [0, {n - 1}]")
            if coeff.domain is not domain:
                raise DomainMismatchError(
                    f"coefficient over {coeff.domain.name} in a {domain.name} multivector"
                )
            if coeff.is_zero():
                continue
            if len(word) < 2 and not domain.is_zero(coeff.neg):
                raise NegationUndefinedError(
                    f"degree {len(word)} term {word} has a nonzero negated part"
                )
            clean[word] = coeff
        self._terms = clean

    @classmethod
    def _trusted(cls, n: int, domain: ScalarDomain, terms: Dict[Word, PairScalar]) -> "MultiVector":
        mv = cls.__new__(cls)
        mv.n = n
        mv.domain = domain
        mv._terms = {w: c for w, c in terms.items() if not c.is_zero()}
        return mv

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n: int, domain: ScalarDomain) -> "MultiVector":
        return cls._trusted(n, domain, {})

    @classmethod
    def basis(
        cls,
        n: int,
        domain: ScalarDomain,
        indices: Sequence[int],
        coeff: Optional[PairScalar] = None,
    ) -> "MultiVector":
        """The product ``b_{i_1} ^ ... ^ b_{i_k}`` in the given order, times ``coeff``."""
        if coeff is None:
            coeff = PairScalar.one_of(domain)
        normal = sort_word(indices, n)
        if normal is None:
            return cls.zero(n, domain)
        word, parity = normal
        return cls(n, domain, {word: coeff.swap() if parity else coeff})

    @classmethod
    def vector(cls, n: int, domain: ScalarDomain, values: Sequence) -> "MultiVector":
        """A degree-1 element from its ``n`` basis coordinates."""
        if len(values) != n:
            raise ValueError(f"expected {n} coordinates, got {len(values)}")
        return cls(n, domain, {(i,): PairScalar.embed(domain.coerce(v), domain) for i, v in enumerate(values)})

    @classmethod
    def top(cls, n: int, domain: ScalarDomain) -> "MultiVector":
        """``b_0 ^ b_1 ^ ... ^ b_{n-1}``."""
        return cls.basis(n, domain, range(n))

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> Mapping[Word, PairScalar]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Word, PairScalar]]:
        return iter(sorted(self._terms.items(), key=lambda kv: (len(kv[0]), kv[0])))

    def coefficient(self, word: Sequence[int]) -> PairScalar:
        return self._terms.get(tuple(word), PairScalar.zero_of(self.domain))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> set:
        return {len(w) for w in self._terms}

    @property
    def degree(self) -> int:
        """The pure degree; raises for mixed-degree elements.  Zero has degree 0."""
        degs = self.degrees()
        if len(degs) > 1:
            raise DegreeError(f"mixed degrees {sorted(degs)}")
        return degs.pop() if degs else 0

    def is_balanced(self) -> bool:
        """Every coefficient is a quasi-zero (the element surpasses zero)."""
        return all(c.is_balanced() for c in self._terms.values())

    def vector_coordinates(self) -> list:
        """Coordinates of a degree-1 element (``pos`` slots)."""
        if any(len(w) != 1 for w in self._terms):
            raise DegreeError("not a degree-1 element")
        coords = [self.domain.zero] * self.n
        for (i,), c in self._terms.items():
            coords[i] = c.pos
        return coords

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "MultiVector") -> None:
        if not isinstance(other, MultiVector):
            raise TypeError(f"expected MultiVector, got {type(other).__name__}")
        if other.domain is not self.domain:
            raise DomainMismatchError(f"{self.domain.name} vs {other.domain.name}")
        if other.n != self.n:
            raise DomainMismatchError(f"rank {self.n} vs rank {other.n}")

    def __add__(self, other: "MultiVector") -> "MultiVector":
        return mv_add(self, other)

    def __xor__(self, other: "MultiVector") -> "MultiVector":
        return wedge(self, other)

    def scale(self, c: PairScalar) -> "MultiVector":
        """Multiply every coefficient by the pair ``c`` (twist product)."""
        if not self.domain.is_zero(c.neg) and any(len(w) < 2 for w in self._terms):
            raise NegationUndefinedError("a negated scalar cannot act in degree 0 or 1")
        return MultiVector._trusted(self.n, self.domain, {w: pair_mul(c, x) for w, x in self._terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiVector):
            return NotImplemented
        return (
            self.n == other.n
            and self.domain is other.domain
            and self._terms.keys() == other._terms.keys()
            and all(
                self.domain.eq(c.pos, other._terms[w].pos) and self.domain.eq(c.neg, other._terms[w].neg)
                for w, c in self._terms.items()
            )
        )

    def __hash__(self) -> int:
        return hash((self.n, self.domain.name, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for word, c in self.items():
            name = "^".join(f"b{i}" for i in word) or "1"
            parts.append(f"{c!r}*{name}")
        return " + ".join(parts)


def mv_add(x: MultiVector, y: MultiVector) -> MultiVector:
    x._check(y)
    out = dict(x._terms)
    for w, c in y._terms.items():
        prev = out.get(w)
        out[w] = c if prev is None else pair_add(prev, c)
    return MultiVector._trusted(x.n, x.domain, out)


def mv_sum(items: Iterable[MultiVector], n: int, domain: ScalarDomain) -> MultiVector:
    out: Dict[Word, PairScalar] = {}
    for x in items:
        if x.domain is not domain or x.n != n:
            raise DomainMismatchError("summands over different domains or ranks")
        for w, c in x._terms.items():
            prev = out.get(w)
            out[w] = c if prev is None else pair_add(prev, c)
    return MultiVector._trusted(n, domain, out)


def wedge(x: MultiVector, y: MultiVector) -> MultiVector:
    """Bilinear wedge product; odd reorderings swap the coefficient pair."""
    x._check(y)
    out: Dict[Word, PairScalar] = {}
    for w1, c1 in x._terms.items():
        for w2, c2 in y._terms.items():
            merged = _merge(w1, w2)
            if merged is None:
                continue
            word, parity = merged
            c = pair_mul(c1, c2)
            if parity:
                c = c.swap()
            prev = out.get(word)
            out[word] = c if prev is None else pair_add(prev, c)
    return MultiVector._trusted(x.n, x.domain, out)


def wedge_all(factors: Sequence[MultiVector]) -> MultiVector:
    if not factors:
        raise ValueError("empty product")
    result = factors[0]
    for f in factors[1:]:
        result = wedge(result, f)
    return result


def negate(x: MultiVector) -> MultiVector:
    """The negation map: swap every coefficient.  Defined only in degree >= 2."""
    low = sorted({len(w) for w in x._terms if len(w) < 2})
    if low:
        raise NegationUndefinedError(f"no negation map in degree {low[0]}")
    return MultiVector._trusted(x.n, x.domain, {w: c.swap() for w, c in x._terms.items()})


def mv_surpasses(x: MultiVector, y: MultiVector) -> bool:
    """Whether ``y`` surpasses ``x``: ``y = x + d`` with ``d`` balanced, word by word."""
    x._check(y)
    zero = PairScalar.zero_of(x.domain)
    for w in x._terms.keys() | y._terms.keys():
        if not surpass_witness(x._terms.get(w, zero), y._terms.get(w, zero)):
            return False
    return True


def words_of_degree(n: int, k: int) -> Iterator[Word]:
    return combinations(range(n), k)


def nondegeneracy_check(u: MultiVector, n: Optional[int] = None) -> bool:
    """Search the complementary basis words ``v`` for one with ``u ^ v`` unbalanced.

    ``u`` must be of pure degree ``k`` with ``2 <= k < n`` and must not be
    balanced; violations raise.
    """
    n = u.n if n is None else n
    if n != u.n:
        raise DomainMismatchError(f"rank {n} given for a rank {u.n} element")
    k = u.degree
    if not 2 <= k < n:
        raise DegreeError(f"degree {k} outside [2, {n - 1}]")
    if u.is_balanced():
        raise ValueError("precondition violated: every coefficient of u is balanced")
    for word in words_of_degree(n, n - k):
        if not wedge(u, MultiVector.basis(n, u.domain, word)).is_balanced():
            return True
    return False
