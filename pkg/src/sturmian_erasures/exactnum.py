"""Exact arithmetic for numbers of the form sum(q_b * sqrt(b)) with rational q_b.

Basis keys b are square-free positive integers (b = 1 carries the rational
part).  Square roots of distinct square-free integers are linearly
independent over the rationals, so equality, sign and floor are decidable
with no rounding error.
"""

from __future__ import annotations

import ast
import math
from fractions import Fraction

__all__ = ["SqrtBasisNumber", "rational", "sqrt", "parse_number"]


def _squarefree_split(k):
    """Return (m, d) with k = m*m*d and d square-free."""
    if k < 1:
        raise ValueError(f"square root argument must be a positive integer, got {k}")
    m, d, n, p = 1, 1, k, 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            m *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    return m, d * n


# Cached rational enclosures: sqrt(b) lies in [s, s+1] / 2**k with s = isqrt(b * 4**k).
_BOUND_CACHE = {}


def _sqrt_floor(b, k):
    key = (b, k)
    s = _BOUND_CACHE.get(key)
    if s is None:
        s = math.isqrt(b << (2 * k))
        _BOUND_CACHE[key] = s
    return s


class SqrtBasisNumber:
    """Immutable exact value sum(q_b * sqrt(b)) over square-free keys b."""

    __slots__ = ("_coords",)

    def __init__(self, coords=None):
        cleaned = {}
        for b, q in (coords or {}).items():
            q = q if isinstance(q, Fraction) else Fraction(q)
            if q == 0:
                continue
            m, d = _squarefree_split(b)
            q = q * m
            tot = cleaned.get(d, 0) + q
            if tot == 0:
                cleaned.pop(d, None)
            else:
                cleaned[d] = tot
        self._coords = cleaned

    @property
    def coords(self):
        return dict(self._coords)

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, SqrtBasisNumber):
            return x
        if isinstance(x, (int, Fraction)):
            return SqrtBasisNumber({1: Fraction(x)})
        return NotImplemented

    # -- ring operations ------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._coords)
        for b, q in other._coords.items():
            out[b] = out.get(b, 0) + q
        return SqrtBasisNumber(out)

    __radd__ = __add__

    def __neg__(self):
        return SqrtBasisNumber({b: -q for b, q in self._coords.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for a, p in self._coords.items():
            for b, q in other._coords.items():
                # sqrt(a)*sqrt(b) = g*sqrt((a/g)*(b/g)) with g = gcd(a, b)
                g = math.gcd(a, b)
                key = (a // g) * (b // g)
                out[key] = out.get(key, 0) + p * q * g
        return SqrtBasisNumber(out)

    __rmul__ = __mul__

    def _inverse(self):
        if not self._coords:
            raise ZeroDivisionError("division by zero")
        keys = [b for b in self._coords if b != 1]
        if not keys:
            return SqrtBasisNumber({1: 1 / self._coords[1]})
        # Rationalize one prime at a time: with x = A + sqrt(p)*B where B collects
        # the keys divisible by p, x * sigma_p(x) = A*A - p*B*B has no key
        # divisible by p, so the recursion strictly shrinks the prime support.
        p = min(min(_prime_factors(b)) for b in keys)
        conj = SqrtBasisNumber(
            {b: (-q if b % p == 0 else q) for b, q in self._coords.items()}
        )
        return conj * (self * conj)._inverse()

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other._inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = SqrtBasisNumber({1: 1})
        for _ in range(n):
            out = out * self
        return out

    # -- exact comparisons ----------------------------------------------------

    def is_zero(self):
        return not self._coords

    def is_rational(self):
        return set(self._coords) <= {1}

    def sign(self):
        """Exact sign in {-1, 0, +1} by interval refinement."""
        if not self._coords:
            return 0
        if self.is_rational():
            q = self._coords[1]
            return 1 if q > 0 else -1
        k = 64
        while True:
            lo = hi = Fraction(0)
            scale = 1 << k
            for b, q in self._coords.items():
                if b == 1:
                    lo += q
                    hi += q
                    continue
                s = _sqrt_floor(b, k)
                if q > 0:
                    lo += q * Fraction(s, scale)
                    hi += q * Fraction(s + 1, scale)
                else:
                    lo += q * Fraction(s + 1, scale)
                    hi += q * Fraction(s, scale)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            # A nonzero value is bounded away from 0; only precision is missing.
            k *= 2

    def floor(self):
        """The unique integer m with m <= x < m + 1."""
        if self.is_rational():
            q = self._coords.get(1, Fraction(0))
            return q.numerator // q.denominator
        k = 64
        while True:
            lo = hi = Fraction(0)
            scale = 1 << k
            for b, q in self._coords.items():
                if b == 1:
                    lo += q
                    hi += q
                    continue
                s = _sqrt_floor(b, k)
                if q > 0:
                    lo += q * Fraction(s, scale)
                    hi += q * Fraction(s + 1, scale)
                else:
                    lo += q * Fraction(s + 1, scale)
                    hi += q * Fraction(s, scale)
            flo = lo.numerator // lo.denominator
            fhi = hi.numerator // hi.denominator
            if flo == fhi:
                return flo
            # An irrational value is never an integer, so the enclosure
            # eventually falls inside a single unit interval.
            k *= 2

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coords == other._coords

    def __hash__(self):
        return hash(tuple(sorted(self._coords.items())))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __bool__(self):
        return bool(self._coords)

    # -- presentation ---------------------------------------------------------

    def __float__(self):
        return float(
            sum(float(q) * math.sqrt(b) for b, q in self._coords.items())
        )

    def __str__(self):
        if not self._coords:
            return "0"
        parts = []
        for b in sorted(self._coords):
            q = self._coords[b]
            term = str(abs(q)) if b == 1 else f"{abs(q)}*sqrt({b})"
            if not parts:
                parts.append(term if q > 0 else f"-{term}")
            else:
                parts.append(f"{'+' if q > 0 else '-'} {term}")
        return " ".join(parts)

    def __repr__(self):
        return f"SqrtBasisNumber({self._coords!r})"


def _prime_factors(n):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


def rational(q):
    """Embed an integer or Fraction."""
    return SqrtBasisNumber({1: Fraction(q)})


def sqrt(k):
    """Exact square root of a positive integer."""
    return SqrtBasisNumber({k: 1})


# -- expression grammar: integers, p/q, sqrt(k), binary + - * /, parentheses --

_BINOPS = {ast.Add: "+", ast.Sub: "-", ast.Mult: "*", ast.Div: "/"}


def parse_number(text):
    """Parse an expression such as "(3-sqrt(5))/2" into an exact value."""
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise ValueError(
            f"bad number expression {text!r}: syntax error at offset {exc.offset}"
        ) from None
    try:
        return _eval_node(tree.body)
    except ZeroDivisionError:
        raise ValueError(f"bad number expression {text!r}: division by zero") from None


def _eval_node(node):
    if isinstance(node, ast.Constant):
        if isinstance(node.value, int) and not isinstance(node.value, bool):
            return rational(node.value)
        raise ValueError(
            f"unsupported literal {node.value!r}: use integers and p/q rationals"
        )
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        left = _eval_node(node.left)
        right = _eval_node(node.right)
        op = _BINOPS[type(node.op)]
        if op == "+":
            return left + right
        if op == "-":
            return left - right
        if op == "*":
            return left * right
        return left / right
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        value = _eval_node(node.operand)
        return -value if isinstance(node.op, ast.USub) else value
    if (
        isinstance(node, ast.Call)
        and isinstance(node.func, ast.Name)
        and node.func.id == "sqrt"
        and len(node.args) == 1
        and not node.keywords
    ):
        arg = _eval_node(node.args[0])
        if not arg.is_rational():
            raise ValueError("sqrt argument must be a positive integer")
        q = arg.coords.get(1, Fraction(0))
        if q.denominator != 1 or q <= 0:
            raise ValueError(f"sqrt argument must be a positive integer, got {q}")
        return sqrt(q.numerator)
    raise ValueError(f"unsupported expression element: {ast.dump(node)}")
