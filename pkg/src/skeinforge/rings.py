"""Exact coefficient arithmetic for skein computations.

Three modes cover every coefficient ring the rest of the package uses:

* ``generic``: sparse Laurent polynomials in the invertible symbols t
  and x with integer coefficients;
* ``conway``: the same with t collapsed to 1, i.e. Laurent polynomials
  in x alone;
* ``gf(p)``: coefficients reduced into the prime field GF(p).

The only division ever needed is by powers of the fixed element

    D = t^(-2) - 2 + t^2 - x^2 = (t^(-1) - t - x)(t^(-1) - t + x),

so fractions are tracked symbolically by :class:`LocalizedScalar` as a
numerator plus a power of D, and every computation stays exact.  All
values are immutable after construction and may be shared freely
between threads or processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

__all__ = [
    "BaseRing",
    "LaurentPoly",
    "LocalizedScalar",
    "Ring",
    "exact_div",
    "specialize",
    "specialize_scalar",
    "GENERIC",
    "CONWAY",
    "gf",
]


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    # Deterministic Miller-Rabin for anything below 3.3e24, which is far
    # beyond any modulus a caller can sanely ask for.
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        y = pow(a, d, n)
        if y == 1 or y == n - 1:
            continue
        for _ in range(r - 1):
            y = y * y % n
            if y == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class BaseRing:
    """Coefficient domain: the integers when ``p`` is None, else GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"modulus must be prime, got {self.p}")

    @classmethod
    def integers(cls) -> "BaseRing":
        return cls()

    @classmethod
    def prime_field(cls, p: int) -> "BaseRing":
        return cls(p)

    @property
    def kind(self) -> str:
        return "integers" if self.p is None else "prime-field"

    def __str__(self) -> str:
        return "ZZ" if self.p is None else f"GF({self.p})"


def _mono_str(e_t: int, e_x: int) -> str:
    parts = []
    for sym, e in (("t", e_t), ("x", e_x)):
        if e == 0:
            continue
        if e == 1:
            parts.append(sym)
        elif e > 0:
            parts.append(f"{sym}^{e}")
        else:
            parts.append(f"{sym}^({e})")
    return " ".join(parts)


class LaurentPoly:
    """Sparse Laurent polynomial in t and x.

    ``terms`` maps exponent pairs ``(e_t, e_x)`` to nonzero coefficients
    (reduced residues over GF(p)); the map is canonical, so equal values
    always carry identical term maps.  Instances are never mutated.
    """

    __slots__ = ("base", "terms")

    def __init__(self, base: BaseRing, terms: Mapping | Iterable = ()):
        acc: dict[tuple[int, int], int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (e_t, e_x), c in items:
            key = (e_t, e_x)
            acc[key] = acc.get(key, 0) + c
        p = base.p
        if p is None:
            clean = {k: c for k, c in acc.items() if c}
        else:
            clean = {}
            for k, c in acc.items():
                c %= p
                if c:
                    clean[k] = c
        self.base = base
        self.terms = clean

    @classmethod
    def _raw(cls, base: BaseRing, terms: dict) -> "LaurentPoly":
        # Internal fast path: terms must already be canonical.
        obj = cls.__new__(cls)
        obj.base = base
        obj.terms = terms
        return obj

    # -- predicates ------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_one(self) -> bool:
        return self.terms == {(0, 0): 1}

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check(self, other: "LaurentPoly") -> None:
        if self.base != other.base:
            raise ValueError(
                f"coefficient rings differ: {self.base} vs {other.base}"
            )

    # -- arithmetic ------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        p = self.base.p
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if p is not None:
                s %= p
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentPoly._raw(self.base, out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "LaurentPoly":
        p = self.base.p
        if p is None:
            out = {k: -c for k, c in self.terms.items()}
        else:
            out = {k: p - c for k, c in self.terms.items()}
        return LaurentPoly._raw(self.base, out)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        if not self.terms or not other.terms:
            return LaurentPoly._raw(self.base, {})
        acc: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                acc[k] = acc.get(k, 0) + c1 * c2
        p = self.base.p
        if p is None:
            out = {k: c for k, c in acc.items() if c}
        else:
            out = {}
            for k, c in acc.items():
                c %= p
                if c:
                    out[k] = c
        return LaurentPoly._raw(self.base, out)

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers are not defined for general polynomials")
        result = LaurentPoly._raw(self.base, {(0, 0): 1})
        square = self
        while k:
            if k & 1:
                result = result * square
            k >>= 1
            if k:
                square = square * square
        return result

    # -- comparison and display -------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.base == other.base and self.terms == other.terms

    __hash__ = None

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        # Canonical order: descending in e_t, then ascending in e_x.
        keys = sorted(self.terms, key=lambda k: (-k[0], k[1]))
        pieces = []
        for k in keys:
            mono = _mono_str(*k)
            c = self.terms[k]
            pieces.append(f"{c} {mono}" if mono else str(c))
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly[{self}]"


def exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly | None:
    """Return q with q*b == a, or None when no such Laurent polynomial exists.

    Works by shifting both operands into the ordinary polynomial ring
    (monomials are units, so divisibility is shift-invariant) and
    peeling leading terms under the lexicographic order on (e_t, e_x).
    """
    a._check(b)
    if not b.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a.terms:
        return LaurentPoly._raw(a.base, {})

    def shifted(poly: LaurentPoly) -> tuple[dict, int, int]:
        mt = min(e for e, _ in poly.terms)
        mx = min(e for _, e in poly.terms)
        return {(e - mt, f - mx): c for (e, f), c in poly.terms.items()}, mt, mx

    ra, at, ax = shifted(a)
    rb, bt, bx = shifted(b)
    lead_b = max(rb)
    cb = rb[lead_b]
    p = a.base.p
    inv_cb = pow(cb, -1, p) if p is not None else None

    quot: dict[tuple[int, int], int] = {}
    while ra:
        lead_a = max(ra)
        e_t = lead_a[0] - lead_b[0]
        e_x = lead_a[1] - lead_b[1]
        if e_t < 0 or e_x < 0:
            return None
        ca = ra[lead_a]
        if p is None:
            qc, rem = divmod(ca, cb)
            if rem:
                return None
        else:
            qc = ca * inv_cb % p
        quot[(e_t, e_x)] = qc
        for (u, v), c in rb.items():
            k = (u + e_t, v + e_x)
            s = ra.get(k, 0) - qc * c
            if p is not None:
                s %= p
            if s:
                ra[k] = s
            else:
                ra.pop(k, None)
    dt, dx = at - bt, ax - bx
    return LaurentPoly._raw(a.base, {(u + dt, v + dx): c for (u, v), c in quot.items()})


class Ring:
    """A computation mode: coefficient base plus the optional t = 1 collapse.

    Interns the symbols t, x and their inverses, the two-component
    unlink value delta = x^(-1)(t^(-1) - t), and the localization
    denominator D, so the rest of the package never rebuilds them.
    Use :meth:`Ring.get` to share instances.
    """

    __slots__ = (
        "base",
        "conway",
        "key",
        "name",
        "zero",
        "one",
        "t",
        "t_inv",
        "x",
        "x_inv",
        "delta",
        "denom",
        "_delta_pows",
        "_denom_pows",
        "scalar_zero",
        "scalar_one",
    )

    _registry: dict[tuple, "Ring"] = {}

    def __init__(self, base: BaseRing, conway: bool = False):
        self.base = base
        self.conway = conway
        self.key = (base.p, conway)
        if base.p is None:
            self.name = "conway" if conway else "generic"
        else:
            self.name = f"gf:{base.p}" + ("+conway" if conway else "")
        self.zero = LaurentPoly._raw(base, {})
        self.one = self.monomial(1)
        self.t = self.monomial(1, 1, 0)
        self.t_inv = self.monomial(1, -1, 0)
        self.x = self.monomial(1, 0, 1)
        self.x_inv = self.monomial(1, 0, -1)
        self.delta = self.x_inv * (self.t_inv - self.t)
        self.denom = (self.t_inv - self.t - self.x) * (self.t_inv - self.t + self.x)
        self._delta_pows = [self.one]
        self._denom_pows = [self.one]
        self.scalar_zero = LocalizedScalar._make(self, self.zero, 0)
        self.scalar_one = LocalizedScalar._make(self, self.one, 0)

    @classmethod
    def get(cls, p: int | None = None, conway: bool = False) -> "Ring":
        key = (p, conway)
        ring = cls._registry.get(key)
        if ring is None:
            ring = cls(BaseRing(p), conway)
            cls._registry[key] = ring
        return ring

    def monomial(self, coeff: int, e_t: int = 0, e_x: int = 0) -> LaurentPoly:
        """Build coeff * t^e_t * x^e_x, folding t to 1 in conway mode."""
        if self.conway:
            e_t = 0
        return LaurentPoly(self.base, [((e_t, e_x), coeff)])

    def const(self, c: int) -> LaurentPoly:
        return self.monomial(c)

    def poly(self, terms: Mapping | Iterable) -> LaurentPoly:
        items = terms.items() if isinstance(terms, Mapping) else terms
        if self.conway:
            items = [((0, e_x), c) for (_, e_x), c in items]
        return LaurentPoly(self.base, items)

    def delta_pow(self, k: int) -> LaurentPoly:
        pows = self._delta_pows
        while len(pows) <= k:
            pows.append(pows[-1] * self.delta)
        return pows[k]

    def denom_pow(self, k: int) -> LaurentPoly:
        pows = self._denom_pows
        while len(pows) <= k:
            pows.append(pows[-1] * self.denom)
        return pows[k]

    def scalar(self, num: LaurentPoly, dpow: int = 0) -> "LocalizedScalar":
        return LocalizedScalar(self, num, dpow)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ring):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"Ring({self.name})"


def _reduce_fraction(ring: Ring, num: LaurentPoly, dpow: int) -> tuple[LaurentPoly, int]:
    if not num.terms:
        return ring.zero, 0
    while dpow > 0:
        q = exact_div(num, ring.denom)
        if q is None:
            break
        num = q
        dpow -= 1
    return num, dpow


class LocalizedScalar:
    """A Laurent polynomial divided by a power of the denominator D.

    Normal form: either ``dpow`` is 0 or D does not divide ``num``
    exactly, and zero is always (0, 0).  Equal values therefore have
    identical normal forms, so ``==`` is a value comparison.
    """

    __slots__ = ("ring", "num", "dpow")

    def __init__(self, ring: Ring, num: LaurentPoly, dpow: int = 0):
        if num.base != ring.base:
            raise ValueError(f"numerator base {num.base} does not match ring {ring.name}")
        if dpow < 0:
            raise ValueError("denominator exponent must be nonnegative")
        num, dpow = _reduce_fraction(ring, num, dpow)
        self.ring = ring
        self.num = num
        self.dpow = dpow

    @classmethod
    def _make(cls, ring: Ring, num: LaurentPoly, dpow: int) -> "LocalizedScalar":
        # Internal fast path: (num, dpow) must already be in normal form.
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.num = num
        obj.dpow = dpow
        return obj

    def _check(self, other: "LocalizedScalar") -> None:
        if self.ring.key != other.ring.key:
            raise ValueError(
                f"ring modes differ: {self.ring.name} vs {other.ring.name}"
            )

    @property
    def is_zero(self) -> bool:
        return not self.num.terms

    def __bool__(self) -> bool:
        return bool(self.num.terms)

    def __add__(self, other: "LocalizedScalar") -> "LocalizedScalar":
        if not isinstance(other, LocalizedScalar):
            return NotImplemented
        self._check(other)
        ring = self.ring
        k = max(self.dpow, other.dpow)
        n1 = self.num * ring.denom_pow(k - self.dpow)
        n2 = other.num * ring.denom_pow(k - other.dpow)
        return LocalizedScalar(ring, n1 + n2, k)

    def __sub__(self, other: "LocalizedScalar") -> "LocalizedScalar":
        if not isinstance(other, LocalizedScalar):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "LocalizedScalar":
        return LocalizedScalar._make(self.ring, -self.num, self.dpow)

    def __mul__(self, other) -> "LocalizedScalar":
        if isinstance(other, LaurentPoly):
            return LocalizedScalar(self.ring, self.num * other, self.dpow)
        if not isinstance(other, LocalizedScalar):
            return NotImplemented
        self._check(other)
        return LocalizedScalar(self.ring, self.num * other.num, self.dpow + other.dpow)

    def __rmul__(self, other) -> "LocalizedScalar":
        if isinstance(other, LaurentPoly):
            return LocalizedScalar(self.ring, self.num * other, self.dpow)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, LocalizedScalar):
            return NotImplemented
        return (
            self.ring.key == other.ring.key
            and self.dpow == other.dpow
            and self.num == other.num
        )

    __hash__ = None

    def __str__(self) -> str:
        if self.dpow == 0:
            return str(self.num)
        return f"{self.num} / D^{self.dpow}"

    def __repr__(self) -> str:
        return f"LocalizedScalar[{self}]"


def specialize(poly: LaurentPoly, target: Ring) -> LaurentPoly:
    """Apply the coefficient homomorphism into ``target``.

    Folds t to 1 when the target is a conway mode and reduces integer
    coefficients mod p when the target is a prime field.  Source
    coefficients must be integers unless the moduli already agree.
    """
    if poly.base.p is not None and poly.base.p != target.base.p:
        raise ValueError("prime-field coefficients cannot change modulus or lift back")
    return target.poly(poly.terms)


def specialize_scalar(scalar: LocalizedScalar, target: Ring) -> LocalizedScalar:
    """Specialize a localized value; the denominator maps to the target's D."""
    return LocalizedScalar(target, specialize(scalar.num, target), scalar.dpow)


GENERIC = Ring.get()
CONWAY = Ring.get(conway=True)


def gf(p: int) -> Ring:
    """The prime-field mode GF(p) with t, x kept generic."""
    return Ring.get(p)
