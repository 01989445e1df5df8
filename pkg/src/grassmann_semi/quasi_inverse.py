"""The canonical quasi-inverse of ``D(z)`` and the Cayley-Hamilton checks.

On a word ``u ^ v`` of degree 2 the quasi-inverse is the quadratic

    u ^ v + D_1(v ^ u) z + (f(u) ^ f(v)) z^2

and on longer words ``u_1 ^ rest`` it is obtained from the value on
``rest`` by one application of :func:`ovd_step`.  On the top power
``zeta = b_0 ^ ... ^ b_{n-1}`` both ``D(z)`` and its quasi-inverse act by
pairs of scalars; these give the eigenvalue pairs ``(e_i, e_i')`` and
``(h_i, h_i')`` from which the Cayley-Hamilton residuals are built.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

from .errors import DegreeError, DomainMismatchError
from .exterior import MultiVector, Word, mv_sum, negate, wedge
from .hasse_schmidt import (
    Endomorphism,
    ZPolynomial,
    apply_hs_series,
    hs_coefficient,
    hs_series,
)
from .scalars import PairScalar, pair_mul, shift_witness


class Verdict(NamedTuple):
    holds: bool
    residual: MultiVector


def _basis_vector(f: Endomorphism, i: int) -> MultiVector:
    return MultiVector.basis(f.n, f.domain, (i,))


def _image(f: Endomorphism, i: int) -> MultiVector:
    return MultiVector.vector(f.n, f.domain, f.image_column(i))


def ovd_step(f: Endomorphism, u_index: int, poly: ZPolynomial) -> ZPolynomial:
    """``b_u ^ P + z * (-)(f(b_u) ^ P)`` for a series ``P`` of degree >= 1 coefficients."""
    if any(0 in c.degrees() for c in poly.coeffs):
        raise DegreeError("ovd_step needs coefficients of degree >= 1")
    bu = _basis_vector(f, u_index)
    fu = _image(f, u_index)
    zero = MultiVector.zero(f.n, f.domain)
    head = [wedge(bu, c) for c in poly.coeffs] + [zero]
    tail = [zero] + [negate(wedge(fu, c)) for c in poly.coeffs]
    return ZPolynomial([a + b for a, b in zip(head, tail)], poly.trunc)


@lru_cache(maxsize=1 << 14)
def _word_quasi_inverse(f: Endomorphism, word: Word) -> ZPolynomial:
    n, d = f.n, f.domain
    if len(word) == 2:
        u, v = word
        vu = MultiVector.basis(n, d, (v, u))
        return ZPolynomial(
            [
                MultiVector.basis(n, d, word),
                hs_coefficient(f, 1, vu),
                wedge(_image(f, u), _image(f, v)),
            ]
        )
    return ovd_step(f, word[0], _word_quasi_inverse(f, word[1:]))


def quasi_inverse(f: Endomorphism, x: MultiVector) -> ZPolynomial:
    """The quasi-inverse ``Dbar{z} x``, a polynomial of z-degree at most ``deg x``.

    ``x`` may mix degrees but every term must have degree >= 2.
    """
    if f.domain is not x.domain or f.n != x.n:
        raise DomainMismatchError("endomorphism and element disagree on domain or rank")
    degs = x.degrees()
    if any(k < 2 for k in degs):
        raise DegreeError(f"quasi_inverse is defined here on degree >= 2 only, got {sorted(degs)}")
    top = max(degs, default=0)
    buckets: List[List[MultiVector]] = [[] for _ in range(top + 1)]
    for word, c in x.terms.items():
        for k, coeff in enumerate(_word_quasi_inverse(f, word).coeffs):
            buckets[k].append(coeff.scale(c))
    return ZPolynomial([mv_sum(b, f.n, f.domain) for b in buckets])


def apply_quasi_inverse(f: Endomorphism, poly: ZPolynomial, trunc: int) -> ZPolynomial:
    """``Dbar{z}`` applied to each coefficient of ``poly``, powers collected up to ``trunc``."""
    zero = MultiVector.zero(f.n, f.domain)
    acc: List[List[MultiVector]] = [[] for _ in range(trunc + 1)]
    for i, c in enumerate(poly.coeffs[: trunc + 1]):
        if not c:
            continue
        for j, coeff in enumerate(quasi_inverse(f, c).coeffs):
            if i + j <= trunc:
                acc[i + j].append(coeff)
    return ZPolynomial([mv_sum(b, f.n, f.domain) if b else zero for b in acc], trunc)


@dataclass(frozen=True)
class EigenData:
    """Eigenvalue pairs on the top exterior power.

    ``e[i]`` is the coefficient pair of ``Dbar_i zeta`` and ``h[i]`` that of
    ``D_i zeta``, for ``i = 0..n``.
    """

    n: int
    e: Tuple[PairScalar, ...]
    h: Tuple[PairScalar, ...]

    def net_e(self) -> List:
        """``e_i - e_i'`` (only meaningful over domains with subtraction)."""
        return [p.pos - p.neg for p in self.e]


@lru_cache(maxsize=1024)
def eigen_data(f: Endomorphism) -> EigenData:
    if f.n < 2:
        raise DegreeError("eigenvalue pairs need n >= 2")
    zeta = MultiVector.top(f.n, f.domain)
    full = tuple(range(f.n))
    qi = quasi_inverse(f, zeta)
    e = tuple(qi[i].coefficient(full) for i in range(f.n + 1))
    h = tuple(hs_coefficient(f, i, zeta).coefficient(full) for i in range(f.n + 1))
    return EigenData(f.n, e, h)


def witness(x: MultiVector, y: MultiVector) -> Optional[MultiVector]:
    """The balanced ``d`` with ``y = x + d`` word by word, or ``None``."""
    x._check(y)
    terms = {}
    for w in x.terms.keys() | y.terms.keys():
        t = shift_witness(x.coefficient(w), y.coefficient(w))
        if t is None:
            return None
        terms[w] = PairScalar(t, t, x.domain)
    return MultiVector(x.n, x.domain, terms) if terms else MultiVector.zero(x.n, x.domain)


def _compare_series(
    lower: ZPolynomial, upper: ZPolynomial, powers: Sequence[int]
) -> Verdict:
    """Check ``upper[k]`` surpasses ``lower[k]`` for each listed power."""
    witnesses = []
    for k in powers:
        d = witness(lower[k], upper[k])
        if d is None:
            return Verdict(False, upper[k])
        witnesses.append(d)
    return Verdict(True, mv_sum(witnesses, upper.n, upper.domain))


def quasi_inverse_composites(
    f: Endomorphism, x: MultiVector, trunc: int
) -> Tuple[ZPolynomial, ZPolynomial]:
    """``(Dbar{z} D(z) x, D(z) Dbar{z} x)`` truncated at ``trunc``."""
    qd = apply_quasi_inverse(f, hs_series(f, x, trunc), trunc)
    dq = apply_hs_series(f, quasi_inverse(f, x), trunc)
    return qd, dq


def quasi_inverse_verdict(f: Endomorphism, x: MultiVector, trunc: Optional[int] = None) -> Verdict:
    top = max(x.degrees(), default=0)
    if trunc is None:
        trunc = 2 * f.n
    if trunc < top + f.n:
        raise ValueError(f"trunc={trunc} below degree + n = {top + f.n}")
    target = ZPolynomial.constant(x).with_trunc(trunc)
    powers = range(0, trunc - f.n + 1)
    residuals = []
    for series in quasi_inverse_composites(f, x, trunc):
        v = _compare_series(target, series, powers)
        if not v.holds:
            return v
        residuals.append(v.residual)
    return Verdict(True, mv_sum(residuals, f.n, f.domain))


def check_quasi_inverse(f: Endomorphism, x: MultiVector, trunc: Optional[int] = None) -> bool:
    """Both ``Dbar D x`` and ``D Dbar x`` surpass ``x`` at every exact order."""
    return quasi_inverse_verdict(f, x, trunc).holds


def prech_sides(
    f: Endomorphism, u: MultiVector, v: MultiVector, trunc: int
) -> Tuple[ZPolynomial, ZPolynomial]:
    """``(Dbar{z}(D(z)u ^ v), u ^ Dbar{z} v)`` truncated at ``trunc``."""
    du = hs_series(f, u, trunc)
    left = apply_quasi_inverse(f, ZPolynomial([wedge(c, v) for c in du.coeffs], trunc), trunc)
    right = ZPolynomial([wedge(u, c) for c in quasi_inverse(f, v).coeffs]).with_trunc(trunc)
    return left, right


def prech_verdict(
    f: Endomorphism, u: MultiVector, v: MultiVector, trunc: Optional[int] = None
) -> Verdict:
    du_deg, v_deg = u.degree, v.degree
    if du_deg < 1:
        raise DegreeError("u must have pure degree >= 1")
    if v_deg < 2:
        raise DegreeError("v must have pure degree >= 2")
    if du_deg + v_deg > f.n:
        raise DegreeError(f"deg u + deg v = {du_deg + v_deg} exceeds n = {f.n}")
    if trunc is None:
        trunc = 2 * f.n
    if trunc < f.n + du_deg:
        raise ValueError(f"trunc={trunc} below n + deg u = {f.n + du_deg}")
    left, right = prech_sides(f, u, v, trunc)
    return _compare_series(right, left, range(trunc + 1))


def check_prech(f: Endomorphism, u: MultiVector, v: MultiVector, trunc: Optional[int] = None) -> bool:
    """``Dbar{z}(D(z)u ^ v)`` surpasses ``u ^ Dbar{z} v`` at every retained power."""
    return prech_verdict(f, u, v, trunc).holds


def precheh_sum(f: Endomorphism) -> PairScalar:
    """``sum_i e_i h_{n-i}`` as a pair; its ``pos`` slot is the displayed scalar sum."""
    data = eigen_data(f)
    total = PairScalar.zero_of(f.domain)
    for i in range(f.n + 1):
        total = total + pair_mul(data.e[i], data.h[f.n - i])
    return total


def check_precheh(f: Endomorphism) -> bool:
    return precheh_sum(f).is_balanced()


def _as_element(f: Endomorphism, x: Union[MultiVector, Sequence[int]]) -> MultiVector:
    if isinstance(x, MultiVector):
        return x
    return MultiVector.basis(f.n, f.domain, tuple(x))


def _eigen_combination(f: Endomorphism, u: MultiVector, after=None) -> MultiVector:
    """``sum_k (e_k, e_k') * D_{n-k} u``, optionally post-processed by ``after``.

    Built as ``X (+) (-)Y`` with ``X`` using ``(e_k, 0)`` and ``Y`` using
    ``(e_k', 0)``, which keeps every sign inside the negation map.
    """
    data = eigen_data(f)
    d = f.domain
    xs, ys = [], []
    for k in range(f.n + 1):
        dk = hs_coefficient(f, f.n - k, u)
        if after is not None:
            dk = after(dk)
        xs.append(dk.scale(PairScalar.embed(data.e[k].pos, d)))
        ys.append(dk.scale(PairScalar.embed(data.e[k].neg, d)))
    x = mv_sum(xs, f.n, d)
    y = mv_sum(ys, f.n, d)
    return x + negate(y)


def check_cayley_hamilton(
    f: Endomorphism,
    u: Union[MultiVector, Sequence[int]],
    v: Union[MultiVector, Sequence[int]],
) -> Tuple[bool, MultiVector]:
    """Cayley-Hamilton residual ``(sum_k e_k D_{n-k}u) ^ v (-) (sum_k e_k' D_{n-k}u) ^ v``.

    Returns whether the residual is balanced, and the residual itself.
    """
    u = _as_element(f, u)
    v = _as_element(f, v)
    du, dv = u.degree, v.degree
    if du < 1:
        raise DegreeError("u must have degree >= 1")
    if du + dv != f.n or f.n < 2:
        raise DegreeError(f"deg u + deg v = {du + dv} must equal n = {f.n} >= 2")
    residual = _eigen_combination(f, u, after=lambda w: wedge(w, v))
    return residual.is_balanced(), residual


def ch_corollary_residual(f: Endomorphism, u: Union[MultiVector, Sequence[int]]) -> Tuple[bool, MultiVector]:
    """``sum_k (e_k (-) e_k') D_{n-k} u`` for ``u`` of pure degree >= 2."""
    u = _as_element(f, u)
    if u.degree < 2:
        raise DegreeError("the corollary residual is only available in degree >= 2")
    residual = _eigen_combination(f, u)
    return residual.is_balanced(), residual
