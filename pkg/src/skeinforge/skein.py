"""Coordinates of singular links and the two-variable polynomial invariant.

Resolving each singular crossing of a link both ways (smoothing or
negative crossing) yields 2^d classical closures.  Their polynomial
values form a vector p related to the link's coordinates a in the basis
indexed by {0,1}^d through a Kronecker power of the fixed 2x2 matrix

    M = [[delta, 1], [1, delta]],      det M = D / x^2,

so a is recovered by applying M^(-1) along each of the d tensor axes.
Summing coordinates over patterns with equal zero/one counts projects
onto the commutative polynomial invariant in the two generators X and
Y.  Coordinates live in the localization at D; no other denominators
ever appear.
"""

from __future__ import annotations

from concurrent.futures import Executor
from typing import Mapping

from .braid import OrderedSingularLink, SingularBraidWord, all_patterns, resolve_all
from .errors import BoundError
from .homfly import DEFAULT_MAX_CROSSINGS, homfly
from .rings import LaurentPoly, LocalizedScalar, Ring, _mono_str

__all__ = [
    "DEFAULT_MAX_SING",
    "EvalMatrix",
    "OrderedSkeinElement",
    "SkeinPolynomial",
    "eval_vector",
    "solve_coordinates",
    "apply_cube",
    "invariant_ordered",
    "star",
    "project_unordered",
    "invariant",
]

DEFAULT_MAX_SING = 10


class EvalMatrix:
    """The 2x2 resolution matrix for one singular crossing, and its inverse.

    Row r, column e: the value contribution of resolving a generator of
    kind e (0 for X, 1 for Y) by move r.  The inverse has entries
    x(t^(-1)-t)/D on the diagonal and -x^2/D off it.
    """

    __slots__ = ("ring", "m", "m_inv")

    def __init__(self, ring: Ring):
        one = ring.scalar_one
        diag = ring.scalar(ring.delta)
        self.ring = ring
        self.m = ((diag, one), (one, diag))
        a = ring.scalar(ring.x * (ring.t_inv - ring.t), 1)
        b = ring.scalar(-(ring.x * ring.x), 1)
        self.m_inv = ((a, b), (b, a))


_eval_matrices: dict[tuple, EvalMatrix] = {}


def _matrix(ring: Ring) -> EvalMatrix:
    mat = _eval_matrices.get(ring.key)
    if mat is None:
        mat = EvalMatrix(ring)
        _eval_matrices[ring.key] = mat
    return mat


class OrderedSkeinElement:
    """An element of the degree-d ordered module: coordinates per bit pattern.

    ``coords`` is sparse; missing patterns mean a zero coefficient.
    """

    __slots__ = ("ring", "d", "coords")

    def __init__(self, ring: Ring, d: int, coords: Mapping):
        clean = {}
        for bits, c in coords.items():
            bits = tuple(bits)
            if len(bits) != d or any(b not in (0, 1) for b in bits):
                raise ValueError(f"bad pattern {bits} for degree {d}")
            if c:
                clean[bits] = c
        self.ring = ring
        self.d = d
        self.coords = clean

    def coefficient(self, bits) -> LocalizedScalar:
        return self.coords.get(tuple(bits), self.ring.scalar_zero)

    def _check(self, other: "OrderedSkeinElement") -> None:
        if self.ring.key != other.ring.key:
            raise ValueError("ring modes differ")
        if self.d != other.d:
            raise ValueError(f"degrees differ: {self.d} vs {other.d}")

    def __add__(self, other: "OrderedSkeinElement") -> "OrderedSkeinElement":
        self._check(other)
        out = dict(self.coords)
        for bits, c in other.coords.items():
            s = out.get(bits)
            out[bits] = c if s is None else s + c
        return OrderedSkeinElement(self.ring, self.d, out)

    def __sub__(self, other: "OrderedSkeinElement") -> "OrderedSkeinElement":
        self._check(other)
        return self + other.scale(-self.ring.one)

    def scale(self, factor) -> "OrderedSkeinElement":
        """Multiply every coordinate by a polynomial or localized scalar."""
        return OrderedSkeinElement(
            self.ring, self.d, {bits: c * factor for bits, c in self.coords.items()}
        )

    @property
    def is_zero(self) -> bool:
        return not self.coords

    def __eq__(self, other) -> bool:
        if not isinstance(other, OrderedSkeinElement):
            return NotImplemented
        return (
            self.ring.key == other.ring.key
            and self.d == other.d
            and self.coords == other.coords
        )

    __hash__ = None

    def __str__(self) -> str:
        if not self.coords:
            return "0"
        lines = []
        for bits in sorted(self.coords):
            tag = "".join(str(b) for b in bits)
            lines.append(f"a[{tag}] = {self.coords[bits]}")
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"OrderedSkeinElement(d={self.d}, {len(self.coords)} terms)"


class SkeinPolynomial:
    """A polynomial in the two commuting generators X and Y.

    ``coeffs`` maps (i, j) to the localized coefficient of X^i Y^j;
    missing keys are zero.
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs: Mapping):
        clean = {}
        for key, c in coeffs.items():
            i, j = key
            if i < 0 or j < 0:
                raise ValueError(f"bad exponent pair {key}")
            if c:
                clean[(i, j)] = c
        self.ring = ring
        self.coeffs = clean

    @classmethod
    def constant(cls, ring: Ring, scalar: LocalizedScalar) -> "SkeinPolynomial":
        return cls(ring, {(0, 0): scalar})

    def coefficient(self, i: int, j: int) -> LocalizedScalar:
        return self.coeffs.get((i, j), self.ring.scalar_zero)

    def _check(self, other: "SkeinPolynomial") -> None:
        if self.ring.key != other.ring.key:
            raise ValueError("ring modes differ")

    def __add__(self, other: "SkeinPolynomial") -> "SkeinPolynomial":
        self._check(other)
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            s = out.get(key)
            out[key] = c if s is None else s + c
        return SkeinPolynomial(self.ring, out)

    def __sub__(self, other: "SkeinPolynomial") -> "SkeinPolynomial":
        self._check(other)
        return self + other.scale(-self.ring.one)

    def __mul__(self, other: "SkeinPolynomial") -> "SkeinPolynomial":
        self._check(other)
        out: dict[tuple[int, int], LocalizedScalar] = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                key = (i1 + i2, j1 + j2)
                c = c1 * c2
                s = out.get(key)
                out[key] = c if s is None else s + c
        return SkeinPolynomial(self.ring, out)

    def scale(self, factor) -> "SkeinPolynomial":
        return SkeinPolynomial(
            self.ring, {key: c * factor for key, c in self.coeffs.items()}
        )

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkeinPolynomial):
            return NotImplemented
        return self.ring.key == other.ring.key and self.coeffs == other.coeffs

    __hash__ = None

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        if set(self.coeffs) == {(0, 0)}:
            return str(self.coeffs[(0, 0)])
        pieces = []
        for key in sorted(self.coeffs):
            sign, body = _poly_term_str(self.coeffs[key], _basis_str(*key))
            if not pieces:
                pieces.append(body if sign == "+" else f"-{body}")
            else:
                pieces.append(f"{'+' if sign == '+' else '-'} {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"SkeinPolynomial[{self}]"


def _basis_str(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("X" if i == 1 else f"X^{i}")
    if j:
        parts.append("Y" if j == 1 else f"Y^{j}")
    return " ".join(parts)


def _poly_term_str(scalar: LocalizedScalar, basis: str) -> tuple[str, str]:
    """Render one term as (sign, body); monomial coefficients stay unbracketed."""
    num = scalar.num
    if scalar.dpow == 0 and len(num.terms) == 1:
        ((e_t, e_x), c) = next(iter(num.terms.items()))
        negative = num.base.p is None and c < 0
        mag = -c if negative else c
        parts = []
        if mag != 1 or (e_t == 0 and e_x == 0 and not basis):
            parts.append(str(mag))
        if e_t or e_x:
            parts.append(_mono_str(e_t, e_x))
        if basis:
            parts.append(basis)
        return ("-" if negative else "+", " ".join(parts))
    body = f"({scalar})"
    if basis:
        body += f" {basis}"
    return ("+", body)


# -- the resolution cube ----------------------------------------------


def _bits_to_index(bits: tuple[int, ...]) -> int:
    idx = 0
    for b in bits:
        idx = (idx << 1) | b
    return idx


def _cube_task(args) -> LaurentPoly:
    # Top-level so process pools can pickle it; rings are re-interned per worker.
    p, conway, strands, letters, max_crossings = args
    ring = Ring.get(p, conway)
    word = SingularBraidWord(strands, letters)
    return homfly(word, ring, max_crossings=max_crossings)


def eval_vector(
    link: OrderedSingularLink,
    ring: Ring,
    *,
    max_sing: int = DEFAULT_MAX_SING,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
    pool: Executor | None = None,
) -> dict[tuple[int, ...], LaurentPoly]:
    """Polynomial value of every full resolution, keyed by bit pattern."""
    d = link.d
    if d > max_sing:
        raise BoundError(f"{d} singular crossings exceeds the bound {max_sing}")
    if len(link.word.letters) > max_crossings:
        raise BoundError(
            f"{len(link.word.letters)} letters exceeds the crossing bound {max_crossings}"
        )
    patterns = list(all_patterns(d))
    words = [resolve_all(link, bits) for bits in patterns]
    if pool is not None and len(words) >= 8:
        p, conway = ring.key
        tasks = [(p, conway, w.strands, w.letters, max_crossings) for w in words]
        values = list(pool.map(_cube_task, tasks, chunksize=max(1, len(tasks) // 32)))
    else:
        values = [homfly(w, ring, max_crossings=max_crossings) for w in words]
    return dict(zip(patterns, values))


def _axis_pass(vec: list, d: int, diag, off) -> None:
    # One tensor axis of ((diag, off), (off, diag)) applied in place.
    for axis in range(d):
        stride = 1 << (d - 1 - axis)
        for base in range(1 << d):
            if base & stride:
                continue
            v0, v1 = vec[base], vec[base | stride]
            vec[base] = diag * v0 + off * v1
            vec[base | stride] = off * v0 + diag * v1


def solve_coordinates(
    values: Mapping[tuple[int, ...], LaurentPoly | LocalizedScalar], ring: Ring
) -> OrderedSkeinElement:
    """Coordinates a with (M tensor ... tensor M) a = values.

    ``values`` must hold all 2^d patterns of one length d.  Each axis is
    inverted independently, O(d 2^d) scalar operations in total, and the
    result's denominators never exceed D^d.
    """
    if not values:
        raise ValueError("values must contain the empty pattern at least")
    d = len(next(iter(values)))
    if len(values) != 1 << d or any(
        len(bits) != d or any(b not in (0, 1) for b in bits) for bits in values
    ):
        raise ValueError(f"need all {1 << d} patterns of length {d}")
    vec: list[LocalizedScalar] = [ring.scalar_zero] * (1 << d)
    for bits, value in values.items():
        if isinstance(value, LaurentPoly):
            value = ring.scalar(value)
        vec[_bits_to_index(bits)] = value
    (a, b) = _matrix(ring).m_inv[0]
    _axis_pass(vec, d, a, b)
    coords = {bits: vec[_bits_to_index(bits)] for bits in all_patterns(d)}
    return OrderedSkeinElement(ring, d, coords)


def apply_cube(element: OrderedSkeinElement) -> dict[tuple[int, ...], LocalizedScalar]:
    """Forward map: resolution values of an element given by coordinates."""
    ring, d = element.ring, element.d
    vec = [ring.scalar_zero] * (1 << d)
    for bits, c in element.coords.items():
        vec[_bits_to_index(bits)] = c
    (diag, off) = _matrix(ring).m[0]
    _axis_pass(vec, d, diag, off)
    return {bits: vec[_bits_to_index(bits)] for bits in all_patterns(d)}


# -- invariants --------------------------------------------------------


def invariant_ordered(
    link: OrderedSingularLink,
    ring: Ring,
    *,
    max_sing: int = DEFAULT_MAX_SING,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
    pool: Executor | None = None,
) -> OrderedSkeinElement:
    """Coordinates of the link in the degree-d basis; an isotopy invariant."""
    values = eval_vector(
        link, ring, max_sing=max_sing, max_crossings=max_crossings, pool=pool
    )
    return solve_coordinates(values, ring)


def star(a: OrderedSkeinElement, b: OrderedSkeinElement) -> OrderedSkeinElement:
    """Concatenation product: coordinate at (eps, mu) is a_eps * b_mu."""
    if a.ring.key != b.ring.key:
        raise ValueError("ring modes differ")
    out = {}
    for bits_a, ca in a.coords.items():
        for bits_b, cb in b.coords.items():
            out[bits_a + bits_b] = ca * cb
    return OrderedSkeinElement(a.ring, a.d + b.d, out)


def project_unordered(element: OrderedSkeinElement) -> SkeinPolynomial:
    """Sum coordinates over patterns with i zeros and j ones onto X^i Y^j."""
    out: dict[tuple[int, int], LocalizedScalar] = {}
    for bits, c in element.coords.items():
        ones = sum(bits)
        key = (element.d - ones, ones)
        s = out.get(key)
        out[key] = c if s is None else s + c
    return SkeinPolynomial(element.ring, out)


def invariant(
    link: OrderedSingularLink,
    ring: Ring,
    *,
    max_sing: int = DEFAULT_MAX_SING,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
    pool: Executor | None = None,
) -> SkeinPolynomial:
    """The polynomial invariant; independent of how singular crossings are labeled."""
    return project_unordered(
        invariant_ordered(
            link, ring, max_sing=max_sing, max_crossings=max_crossings, pool=pool
        )
    )
