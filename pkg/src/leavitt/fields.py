"""Exact coefficient fields with a designated involution.

Four families cover every behavior the decision procedures distinguish:

* ``Rationals()``                 identity involution, positive definite
* ``GaussianRationals(conj)``     conjugation is positive definite, identity
                                  is proper but not 2-proper
* ``PrimeField(p)``               identity involution, 2-proper iff p = 3 mod 4
* ``QuadraticExtField(p)``        Frobenius involution x -> x^p, never 2-proper

Values are exact (fractions and residues) and always canonical, so equality
is structural. ``improper_tuple`` is deliberately an independent brute-force
oracle on finite fields: it searches rather than consulting
``properness_level``, and the test suite cross-checks the two.
"""

from __future__ import annotations

import functools
import re
from fractions import Fraction

from .omega import OMEGA


class FieldError(ValueError):
    """Malformed field spec, literal, or value."""


class FieldMismatchError(FieldError):
    """Raised when values of different fields are combined."""


class FieldValue:
    """An immutable element of a specific field, with operator arithmetic."""

    __slots__ = ("field", "payload")

    def __init__(self, field, payload):
        self.field = field
        self.payload = payload

    def _coerce(self, other):
        if isinstance(other, FieldValue):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"mixed fields: {self.field.spec_string()} and {other.field.spec_string()}"
                )
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldValue(self.field, self.field._add(self.payload, other.payload))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldValue(self.field, self.field._sub(self.payload, other.payload))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldValue(self.field, self.field._sub(other.payload, self.payload))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldValue(self.field, self.field._mul(self.payload, other.payload))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __neg__(self):
        return FieldValue(self.field, self.field._neg(self.payload))

    def inv(self) -> "FieldValue":
        if not self:
            raise ZeroDivisionError(f"division by zero in {self.field.spec_string()}")
        return FieldValue(self.field, self.field._inv(self.payload))

    def conj(self) -> "FieldValue":
        return FieldValue(self.field, self.field._conj(self.payload))

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except FieldMismatchError:
            return False
        if other is None:
            return NotImplemented
        return self.payload == other.payload

    def __bool__(self):
        return self.payload != self.field._zero_payload()

    def __hash__(self):
        return hash((self.field, self.payload))

    def __repr__(self):
        return self.field.literal(self.payload)


class Field:
    """Abstract base; concrete fields are compared and hashed structurally."""

    def _key(self):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return self.spec_string()

    # --- construction ------------------------------------------------

    @property
    def zero(self) -> FieldValue:
        return FieldValue(self, self._zero_payload())

    @property
    def one(self) -> FieldValue:
        return FieldValue(self, self._from_int(1))

    def from_int(self, n: int) -> FieldValue:
        return FieldValue(self, self._from_int(n))

    def conj(self, value: FieldValue) -> FieldValue:
        if value.field != self:
            raise FieldMismatchError("value belongs to a different field")
        return value.conj()

    # --- involution and properness ------------------------------------

    def properness_level(self):
        """Largest n (or OMEGA) such that a vanishing sum of n star-squares
        forces all n entries to vanish."""
        raise NotImplementedError

    def improper_tuple(self, n: int):
        """A not-all-zero tuple (x_1..x_n) with sum of conj(x_i)*x_i = 0, or
        None when no such tuple exists."""
        raise NotImplementedError

    def elements(self):
        raise FieldError(f"{self.spec_string()} is infinite")

    def _search_improper(self, n: int):
        # Exhaustive witness search for finite fields. Any witness can be
        # permuted and scaled so its first entry is 1, so fixing x_1 = 1
        # loses nothing while cutting the space by a factor of |K|.
        if n < 1:
            raise FieldError("n must be positive")
        pool = list(self.elements())
        one = self.one

        def rec(prefix, acc):
            if len(prefix) == n:
                return prefix if acc == self.zero else None
            for x in pool:
                found = rec(prefix + [x], acc + x.conj() * x)
                if found is not None:
                    return found
            return None

        found = rec([one], one.conj() * one)
        return tuple(found) if found is not None else None

    # --- literals ------------------------------------------------------

    def literal(self, payload) -> str:
        raise NotImplementedError

    def format(self, value: FieldValue) -> str:
        return self.literal(value.payload)

    def scan_literal(self, text: str, pos: int):
        """Parse a literal at pos; return (FieldValue, end) or None."""
        raise NotImplementedError

    def parse_literal(self, text: str) -> FieldValue:
        scanned = self.scan_literal(text, 0)
        if scanned is None or scanned[1] != len(text):
            raise FieldError(f"malformed {self.spec_string()} literal: {text!r}")
        return scanned[0]

    def spec_string(self) -> str:
        raise NotImplementedError

    def sample(self, rng) -> FieldValue:
        raise NotImplementedError


_RAT = re.compile(r"[+-]?\d+(?:/\d+)?")


def _scan_fraction(text, pos):
    m = _RAT.match(text, pos)
    if not m:
        return None
    return Fraction(m.group()), m.end()


class Rationals(Field):
    """The rational numbers with the identity involution."""

    def _key(self):
        return ("Q",)

    def spec_string(self):
        return "Q"

    def _zero_payload(self):
        return Fraction(0)

    def _from_int(self, n):
        return Fraction(n)

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _inv(self, a):
        return 1 / a

    def _conj(self, a):
        return a

    def properness_level(self):
        return OMEGA

    def improper_tuple(self, n):
        # A sum of rational squares vanishes only if every term does.
        if n < 1:
            raise FieldError("n must be positive")
        return None

    def literal(self, payload):
        return str(payload)

    def scan_literal(self, text, pos):
        scanned = _scan_fraction(text, pos)
        if scanned is None:
            return None
        value, end = scanned
        return FieldValue(self, value), end

    def sample(self, rng):
        return FieldValue(self, Fraction(rng.randint(-6, 6), rng.randint(1, 4)))


class GaussianRationals(Field):
    """Q[i], with either complex conjugation or the identity involution."""

    def __init__(self, conjugation: bool):
        self.conjugation = conjugation

    def _key(self):
        return ("Q[i]", self.conjugation)

    def spec_string(self):
        return "Q[i]/conj" if self.conjugation else "Q[i]/id"

    def _zero_payload(self):
        return (Fraction(0), Fraction(0))

    def _from_int(self, n):
        return (Fraction(n), Fraction(0))

    def _add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def _sub(self, a, b):
        return (a[0] - b[0], a[1] - b[1])

    def _mul(self, a, b):
        return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def _neg(self, a):
        return (-a[0], -a[1])

    def _inv(self, a):
        norm = a[0] * a[0] + a[1] * a[1]
        return (a[0] / norm, -a[1] / norm)

    def _conj(self, a):
        return (a[0], -a[1]) if self.conjugation else a

    @property
    def i(self) -> FieldValue:
        return FieldValue(self, (Fraction(0), Fraction(1)))

    def properness_level(self):
        return OMEGA if self.conjugation else 1

    def improper_tuple(self, n):
        if n < 1:
            raise FieldError("n must be positive")
        if self.conjugation or n == 1:
            return None
        # 1^2 + i^2 = 0; pad with zeros for larger n.
        return (self.one, self.i) + (self.zero,) * (n - 2)

    def literal(self, payload):
        re_, im = payload
        if im == 0:
            return str(re_)
        imag = "i" if abs(im) == 1 else f"{abs(im)}i"
        if re_ == 0:
            return imag if im > 0 else f"-{imag}"
        sign = "+" if im > 0 else "-"
        return f"{re_}{sign}{imag}"

    def _scan_part(self, text, pos, *, explicit_sign):
        """One literal part: [sign] (number ['i'] | 'i'). Returns
        ((value, is_imaginary), end) or None."""
        sign = 1
        p = pos
        if p < len(text) and text[p] in "+-":
            if text[p] == "-":
                sign = -1
            p += 1
        elif explicit_sign:
            return None
        m = re.compile(r"\d+(?:/\d+)?").match(text, p)
        if m:
            value = Fraction(m.group())
            p = m.end()
            if p < len(text) and text[p] == "i":
                return (sign * value, True), p + 1
            return (sign * value, False), p
        if p < len(text) and text[p] == "i":
            return (Fraction(sign), True), p + 1
        return None

    def scan_literal(self, text, pos):
        first = self._scan_part(text, pos, explicit_sign=False)
        if first is None:
            return None
        (v1, imag1), p1 = first
        if not imag1:
            second = self._scan_part(text, p1, explicit_sign=True)
            if second is not None and second[0][1]:
                (v2, _), p2 = second
                return FieldValue(self, (v1, v2)), p2
            return FieldValue(self, (v1, Fraction(0))), p1
        return FieldValue(self, (Fraction(0), v1)), p1

    def sample(self, rng):
        return FieldValue(
            self,
            (Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
             Fraction(rng.randint(-4, 4), rng.randint(1, 3))),
        )


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeField(Field):
    """GF(p) with the identity involution."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p

    def _key(self):
        return ("GF", self.p)

    def spec_string(self):
        return f"GF({self.p})"

    def _zero_payload(self):
        return 0

    def _from_int(self, n):
        return n % self.p

    def _add(self, a, b):
        return (a + b) % self.p

    def _sub(self, a, b):
        return (a - b) % self.p

    def _mul(self, a, b):
        return (a * b) % self.p

    def _neg(self, a):
        return (-a) % self.p

    def _inv(self, a):
        return pow(a, -1, self.p)

    def _conj(self, a):
        return a

    def elements(self):
        return [FieldValue(self, k) for k in range(self.p)]

    def properness_level(self):
        # -1 is a square mod p unless p = 3 (mod 4); any element of GF(p) is
        # a sum of two squares, so three squares can always cancel.
        return 2 if self.p % 4 == 3 else 1

    def improper_tuple(self, n):
        return self._search_improper(n)

    def literal(self, payload):
        return str(payload)

    def scan_literal(self, text, pos):
        m = re.compile(r"[+-]?\d+").match(text, pos)
        if not m:
            return None
        return FieldValue(self, int(m.group()) % self.p), m.end()

    def sample(self, rng):
        return FieldValue(self, rng.randrange(self.p))


class QuadraticExtField(Field):
    """GF(p^2) with the Frobenius involution x -> x^p.

    Represented on the basis {1, t} with t^2 = t + 1 for p = 2 and t^2 = c
    (c the smallest non-residue) for odd p. Values print as "a+bt".
    """

    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        if p == 2:
            self._u, self._w = 1, 1
        else:
            squares = {pow(x, 2, p) for x in range(p)}
            self._u = 0
            self._w = next(c for c in range(2, p) if c not in squares)

    def _key(self):
        return ("GF2ext", self.p)

    def spec_string(self):
        return f"GF({self.p},2)"

    def _zero_payload(self):
        return (0, 0)

    def _from_int(self, n):
        return (n % self.p, 0)

    def _add(self, a, b):
        return ((a[0] + b[0]) % self.p, (a[1] + b[1]) % self.p)

    def _sub(self, a, b):
        return ((a[0] - b[0]) % self.p, (a[1] - b[1]) % self.p)

    def _mul(self, a, b):
        # (a0 + a1 t)(b0 + b1 t) with t^2 = u t + w
        cross = a[1] * b[1]
        return (
            (a[0] * b[0] + cross * self._w) % self.p,
            (a[0] * b[1] + a[1] * b[0] + cross * self._u) % self.p,
        )

    def _neg(self, a):
        return ((-a[0]) % self.p, (-a[1]) % self.p)

    def _pow(self, a, k):
        result = self._from_int(1)
        base = a
        while k:
            if k & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            k >>= 1
        return result

    def _conj(self, a):
        return self._pow(a, self.p)

    def _inv(self, a):
        # x^{-1} = conj(x) / N(x) with N(x) = x * x^p landing in GF(p)
        c = self._conj(a)
        norm = self._mul(a, c)
        assert norm[1] == 0
        scale = pow(norm[0], -1, self.p)
        return ((c[0] * scale) % self.p, (c[1] * scale) % self.p)

    @property
    def t(self) -> FieldValue:
        return FieldValue(self, (0, 1))

    def elements(self):
        return [FieldValue(self, (a, b)) for a in range(self.p) for b in range(self.p)]

    def properness_level(self):
        # conj(x) x is the norm onto GF(p), which is surjective, so some
        # norm equals -1 and 1-properness is the best possible.
        return 1

    def improper_tuple(self, n):
        return self._search_improper(n)

    def literal(self, payload):
        a, b = payload
        if b == 0:
            return str(a)
        tpart = "t" if b == 1 else f"{b}t"
        return tpart if a == 0 else f"{a}+{tpart}"

    def _scan_part(self, text, pos, *, explicit_sign):
        sign = 1
        p = pos
        if p < len(text) and text[p] in "+-":
            if text[p] == "-":
                sign = -1
            p += 1
        elif explicit_sign:
            return None
        m = re.compile(r"\d+").match(text, p)
        if m:
            value = int(m.group())
            p = m.end()
            if p < len(text) and text[p] == "t":
                return (sign * value, True), p + 1
            return (sign * value, False), p
        if p < len(text) and text[p] == "t":
            return (sign, True), p + 1
        return None

    def scan_literal(self, text, pos):
        first = self._scan_part(text, pos, explicit_sign=False)
        if first is None:
            return None
        (v1, t1), p1 = first
        second = self._scan_part(text, p1, explicit_sign=True)
        if second is not None and second[0][1] != t1:
            (v2, t2), p2 = second
            a = v2 if t1 else v1
            b = v1 if t1 else v2
            return FieldValue(self, (a % self.p, b % self.p)), p2
        if t1:
            return FieldValue(self, (0, v1 % self.p)), p1
        return FieldValue(self, (v1 % self.p, 0)), p1

    def sample(self, rng):
        return FieldValue(self, (rng.randrange(self.p), rng.randrange(self.p)))


_SPEC_RE = re.compile(r"GF\((\d+)(?:,(\d+))?\)$")


@functools.lru_cache(maxsize=None)
def parse_field_spec(text: str) -> Field:
    """Field spec strings: Q, Q[i]/id, Q[i]/conj, GF(p), GF(p,2)."""
    text = text.strip()
    if text == "Q":
        return Rationals()
    if text == "Q[i]/id":
        return GaussianRationals(conjugation=False)
    if text == "Q[i]/conj":
        return GaussianRationals(conjugation=True)
    m = _SPEC_RE.match(text)
    if m:
        p = int(m.group(1))
        degree = int(m.group(2)) if m.group(2) else 1
        if degree == 1:
            return PrimeField(p)
        if degree == 2:
            return QuadraticExtField(p)
        raise FieldError(f"unsupported extension degree {degree}")
    raise FieldError(f"unknown field spec {text!r}")
