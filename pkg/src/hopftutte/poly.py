"""Exact multivariate Laurent polynomials with half-integer exponents.

Exponents are stored doubled, so ``x^(1/2)`` is held as ``{"x": 1}``.
Coefficients are integers; a rational coefficient only appears when a caller
averages over non-uniform data, and is kept as a ``Fraction``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .errors import FractionalSubstitution, NonInvertibleBinding, NonSquareBase

Monomial = tuple  # tuple[tuple[str, int], ...], sorted by name, doubled exponents, no zeros
Coefficient = Union[int, Fraction]
Scalar = Union[int, Fraction]

ONE_MONOMIAL: Monomial = ()


def _norm_coeff(c: Coefficient) -> Coefficient:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    merged = dict(a)
    for name, d in b:
        s = merged.get(name, 0) + d
        if s:
            merged[name] = s
        else:
            del merged[name]
    return tuple(sorted(merged.items()))


def _mono_scale(m: Monomial, k: int) -> Monomial:
    """Raise a monomial to an integer power (doubled exponents times k)."""
    if k == 0:
        return ONE_MONOMIAL
    return tuple((name, d * k) for name, d in m)


def rational_sqrt(q: Scalar) -> Fraction | None:
    """Exact nonnegative square root of a rational, or None."""
    q = Fraction(q)
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _doubled(value: Scalar, name: str, half: bool) -> int:
    twice = Fraction(value) * 2
    if twice.denominator != 1:
        raise ValueError(f"exponent {value} of {name} is not a half-integer")
    d = int(twice)
    if d % 2 and not half:
        raise ValueError(
            f"exponent {value} of {name} is half-integral; pass half=True to allow it"
        )
    return d


class Polynomial:
    """Immutable polynomial in canonical form (no zero coefficients)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Coefficient] | None = None):
        clean: dict[Monomial, Coefficient] = {}
        if terms:
            for m, c in terms.items():
                c = _norm_coeff(c)
                if c:
                    clean[m] = c
        self._terms = clean
        self._hash: int | None = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def _raw(cls, terms: dict[Monomial, Coefficient]) -> "Polynomial":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Scalar) -> "Polynomial":
        return cls({ONE_MONOMIAL: c})

    @classmethod
    def var(cls, name: str) -> "Polynomial":
        return cls({((name, 2),): 1})

    @classmethod
    def monomial(
        cls, exponents: Mapping[str, Scalar], coeff: Scalar = 1, *, half: bool = False
    ) -> "Polynomial":
        """Monomial from actual exponents; half-integers need ``half=True``."""
        items = []
        for name, e in exponents.items():
            d = _doubled(e, name, half)
            if d:
                items.append((name, d))
        return cls({tuple(sorted(items)): coeff})

    @classmethod
    def from_records(
        cls, records: Iterable[Mapping], *, allow_half: bool = False
    ) -> "Polynomial":
        """Inverse of :meth:`to_records`; exponents in the records are doubled."""
        acc: dict[Monomial, Coefficient] = {}
        for rec in records:
            exps = rec.get("exponents", {})
            items = []
            for name, d in exps.items():
                d = int(d)
                if d % 2 and not allow_half:
                    raise ValueError(
                        f"odd doubled exponent for {name}; pass allow_half=True"
                    )
                if d:
                    items.append((name, d))
            m = tuple(sorted(items))
            c = rec["coefficient"]
            if isinstance(c, str):
                c = Fraction(c)
            acc[m] = acc.get(m, 0) + c
        return cls(acc)

    # -- inspection -------------------------------------------------------
    def terms(self) -> Iterator[tuple[Monomial, Coefficient]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def coefficient(self, exponents: Mapping[str, int] | Monomial = ()) -> Coefficient:
        """Coefficient of the monomial given by doubled exponents."""
        if isinstance(exponents, Mapping):
            exponents = tuple(sorted((k, v) for k, v in exponents.items() if v))
        return self._terms.get(tuple(exponents), 0)

    @property
    def variables(self) -> frozenset[str]:
        return frozenset(name for m in self._terms for name, _ in m)

    def has_half_exponents(self) -> bool:
        return any(d % 2 for m in self._terms for _, d in m)

    def is_integral(self) -> bool:
        """True when every coefficient is an integer."""
        return all(isinstance(c, int) for c in self._terms.values())

    def constant_value(self) -> Coefficient:
        if any(m for m in self._terms):
            raise ValueError(f"{self} is not a constant")
        return self._terms.get(ONE_MONOMIAL, 0)

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _norm_coeff(s)
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, Coefficient] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial({m: c for m, c in out.items()})

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero scalar or by a monomial."""
        if isinstance(other, (int, Fraction)):
            return Polynomial({m: Fraction(c) / other for m, c in self._terms.items()})
        if isinstance(other, Polynomial) and other.is_monomial():
            return self * other.inverse()
        raise NonInvertibleBinding(f"cannot divide by {other}")

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = Polynomial.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse(self) -> "Polynomial":
        if not self.is_monomial():
            raise NonInvertibleBinding(f"{self} is not a monomial")
        ((m, c),) = self._terms.items()
        return Polynomial({_mono_scale(m, -1): Fraction(1) / c})

    def sqrt(self) -> "Polynomial":
        """Square root of a monomial with a square coefficient (positive branch)."""
        if self.is_zero():
            return self
        if not self.is_monomial():
            raise FractionalSubstitution(f"no monomial square root of {self}")
        ((m, c),) = self._terms.items()
        r = rational_sqrt(c)
        if r is None:
            raise FractionalSubstitution(f"coefficient {c} of {self} is not a square")
        if any(d % 2 for _, d in m):
            raise FractionalSubstitution(f"{self} has half-integer exponents already")
        return Polynomial({tuple((n, d // 2) for n, d in m): r})

    def half_power(self, k: int) -> "Polynomial":
        """``self ** (k/2)`` for an integer k."""
        if k % 2 == 0:
            return self ** (k // 2)
        return self.sqrt() ** k

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- substitution and evaluation --------------------------------------
    def substitute(self, bindings: Mapping[str, "Polynomial | Scalar"]) -> "Polynomial":
        """Replace variables by polynomials; unbound variables pass through.

        A variable carried to an odd doubled exponent must be bound to a
        monomial with a square root (for instance ``s**2`` for a fresh ``s``).
        """
        if not bindings:
            return self
        binds = {k: self._coerce(v) for k, v in bindings.items()}
        cache: dict[tuple[str, int], Polynomial] = {}

        def power(name: str, d: int) -> Polynomial:
            key = (name, d)
            if key not in cache:
                try:
                    cache[key] = binds[name].half_power(d)
                except FractionalSubstitution as exc:
                    raise FractionalSubstitution(
                        f"{name}^{_fmt_exp(d)} needs a square root of {binds[name]}"
                    ) from exc
                except NonInvertibleBinding as exc:
                    raise NonInvertibleBinding(
                        f"{name}^{_fmt_exp(d)} needs the inverse of {binds[name]}"
                    ) from exc
            return cache[key]

        acc = Polynomial()
        for m, c in self._terms.items():
            kept = tuple((n, d) for n, d in m if n not in binds)
            term = Polynomial({kept: c})
            for n, d in m:
                if n in binds:
                    term = term * power(n, d)
                    if term.is_zero():
                        break
            acc = acc + term
        return acc

    def rename(self, mapping: Mapping[str, str]) -> "Polynomial":
        """Rename variables (simultaneously)."""
        out: dict[Monomial, Coefficient] = {}
        for m, c in self._terms.items():
            merged: dict[str, int] = {}
            for n, d in m:
                n2 = mapping.get(n, n)
                merged[n2] = merged.get(n2, 0) + d
            key = tuple(sorted((n, d) for n, d in merged.items() if d))
            out[key] = out.get(key, 0) + c
        return Polynomial(out)

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        """Exact rational value; half-integer powers need square bases."""
        total = Fraction(0)
        roots: dict[str, Fraction] = {}
        for m, c in self._terms.items():
            value = Fraction(c)
            for n, d in m:
                if n not in point:
                    raise KeyError(f"variable {n} is unbound")
                base = Fraction(point[n])
                if d % 2:
                    if n not in roots:
                        r = rational_sqrt(base)
                        if r is None:
                            raise NonSquareBase(f"{n}={base} is not a rational square")
                        roots[n] = r
                    value *= roots[n] ** d
                else:
                    value *= base ** (d // 2)
            total += value
        return total

    # -- rendering --------------------------------------------------------
    def sorted_terms(self) -> list[tuple[Monomial, Coefficient]]:
        """Terms in graded-lex order over sorted variable names (descending)."""
        names = sorted(self.variables)

        def key(item):
            m, _ = item
            exps = dict(m)
            vec = tuple(exps.get(n, 0) for n in names)
            return (-sum(vec), tuple(-v for v in vec))

        return sorted(self._terms.items(), key=key)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            negative = c < 0
            mag = -c if negative else c
            factors = [f"{n}^{_fmt_exp(d)}" if d != 2 else n for n, d in m]
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if i == 0:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"

    def to_records(self) -> list[dict]:
        """Structured form: ``[{coefficient, exponents: {var: doubled}}]``."""
        out = []
        for m, c in self.sorted_terms():
            coeff = c if isinstance(c, int) else str(c)
            out.append({"coefficient": coeff, "exponents": dict(m)})
        return out


def _fmt_exp(d: int) -> str:
    if d % 2 == 0:
        return str(d // 2)
    return f"{d}/2"


def var(name: str) -> Polynomial:
    return Polynomial.var(name)


def variables(names: str) -> tuple[Polynomial, ...]:
    return tuple(Polynomial.var(n) for n in names.split())


def const(c: Scalar) -> Polynomial:
    return Polynomial.const(c)


ZERO = Polynomial()
ONE = Polynomial.const(1)


def reduce_square(p: Polynomial, name: str, square: Polynomial) -> Polynomial:
    """Rewrite every power of ``name`` using ``name**2 == square``.

    Even powers become powers of ``square``; an odd power keeps one factor of
    ``name``. Used to eliminate ``t`` with ``t**2 = -lam``.
    """
    acc = Polynomial()
    for m, c in p.terms():
        d = dict(m).get(name, 0)
        if d % 2:
            raise FractionalSubstitution(f"{name} appears to a half-integer power")
        k = d // 2
        rest = tuple((n, e) for n, e in m if n != name)
        q, r = divmod(k, 2)
        term = Polynomial({rest: c}) * square ** q
        if r:
            term = term * Polynomial.var(name)
        acc = acc + term
    return acc


def clear_reciprocal(p: Polynomial, name: str, base: Polynomial, degree: int) -> Polynomial:
    """``base**degree * p`` with ``name`` replaced by ``1/base``, kept polynomial.

    Each ``name**k`` becomes ``base**(degree - k)``; ``degree`` must cover the
    largest power of ``name`` that occurs.
    """
    acc = Polynomial()
    for m, c in p.terms():
        d = dict(m).get(name, 0)
        if d % 2:
            raise FractionalSubstitution(f"{name} appears to a half-integer power")
        k = d // 2
        if k > degree or k < 0:
            raise ValueError(f"{name}^{k} is outside 0..{degree}")
        rest = tuple((n, e) for n, e in m if n != name)
        acc = acc + Polynomial({rest: c}) * base ** (degree - k)
    return acc
