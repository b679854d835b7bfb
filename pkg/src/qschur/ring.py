"""Exact scalars: Laurent polynomials in q over Z, their fraction field, and
multivariate Laurent polynomials in X_1..X_m with coefficients in Z[q, q^-1].

All values are immutable.  Coefficients are Python ints, so nothing ever
overflows and nothing is ever rounded.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from sympy.polys.domains import ZZ
from sympy.polys.euclidtools import dup_gcd
from sympy.polys.densearith import dup_exquo


class IntLaurent:
    """Element of Z[q, q^-1], stored as {exponent: coefficient} without zeros."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if v:
                    c[int(e)] = int(v)
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict) -> "IntLaurent":
        # c must already be free of zeros
        obj = object.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def const(cls, n: int) -> "IntLaurent":
        return cls._raw({0: int(n)} if n else {})

    @classmethod
    def q(cls, k: int = 1) -> "IntLaurent":
        return cls._raw({k: 1})

    @classmethod
    def coerce(cls, x) -> "IntLaurent":
        if isinstance(x, IntLaurent):
            return x
        if isinstance(x, int):
            return cls.const(x)
        if isinstance(x, Fraction) and x.denominator == 1:
            return cls.const(x.numerator)
        raise TypeError(f"cannot coerce {x!r} to IntLaurent")

    # -- structure -------------------------------------------------------
    @property
    def coefficients(self) -> dict:
        return dict(self._c)

    def items(self):
        return self._c.items()

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def low(self) -> int:
        return min(self._c)

    def high(self) -> int:
        return max(self._c)

    def is_unit(self) -> bool:
        """Units of Z[q, q^-1] are exactly +-q^k."""
        return len(self._c) == 1 and abs(next(iter(self._c.values()))) == 1

    def is_const(self) -> bool:
        return not self._c or (len(self._c) == 1 and 0 in self._c)

    def const_value(self) -> int:
        return self._c.get(0, 0)

    def leading(self) -> tuple[int, int]:
        e = max(self._c)
        return e, self._c[e]

    def bar(self) -> "IntLaurent":
        return IntLaurent._raw({-e: v for e, v in self._c.items()})

    def shift(self, k: int) -> "IntLaurent":
        return IntLaurent._raw({e + k: v for e, v in self._c.items()})

    def evaluate(self, x):
        """Value at q = x (x an int, Fraction, or modular helper)."""
        return sum(v * x**e for e, v in self._c.items())

    def eval_mod(self, x: int, p: int) -> int:
        s = 0
        for e, v in self._c.items():
            s += v * pow(x, e, p)
        return s % p

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, int):
            other = IntLaurent.const(other)
        elif not isinstance(other, IntLaurent):
            return NotImplemented
        if not other._c:
            return self
        if not self._c:
            return other
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return IntLaurent._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return IntLaurent._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntLaurent.const(other)
        elif not isinstance(other, IntLaurent):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return IntLaurent._raw({})
            return IntLaurent._raw({e: v * other for e, v in self._c.items()})
        if not isinstance(other, IntLaurent):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return IntLaurent._raw({})
        if len(a) == 1:
            (e0, v0), = a.items()
            return IntLaurent._raw({e + e0: v * v0 for e, v in b.items()})
        if len(b) == 1:
            (e0, v0), = b.items()
            return IntLaurent._raw({e + e0: v * v0 for e, v in a.items()})
        c: dict = {}
        for e1, v1 in a.items():
            for e2, v2 in b.items():
                k = e1 + e2
                c[k] = c.get(k, 0) + v1 * v2
        return IntLaurent._raw({e: v for e, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_unit():
                raise ZeroDivisionError("non-unit to a negative power")
            (e, v), = self._c.items()
            return IntLaurent._raw({e * n: v ** abs(n)})
        r = IntLaurent.const(1)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def __truediv__(self, other):
        # Division lands in the fraction field unless exact.
        return RatFunc(self, other)

    def exact_div(self, other: "IntLaurent") -> "IntLaurent":
        """Exact quotient in Z[q, q^-1]; raises ArithmeticError if inexact."""
        other = IntLaurent.coerce(other)
        if not other._c:
            raise ZeroDivisionError("division by zero")
        if other.is_unit():
            (e0, v0), = other._c.items()
            return IntLaurent._raw({e - e0: v * v0 for e, v in self._c.items()})
        if not self._c:
            return self
        a_lo, b_lo = self.low(), other.low()
        fa, fb = _to_dense(self), _to_dense(other)
        try:
            qd = dup_exquo(fa, fb, ZZ)
        except Exception as exc:  # sympy raises ExactQuotientFailed
            raise ArithmeticError("inexact division in Z[q,q^-1]") from exc
        return _from_dense(qd, a_lo - b_lo)

    def divides(self, other: "IntLaurent") -> bool:
        try:
            other.exact_div(self)
            return True
        except ArithmeticError:
            return False

    def content(self) -> int:
        from math import gcd
        g = 0
        for v in self._c.values():
            g = gcd(g, v)
        return g

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, IntLaurent):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        if isinstance(other, RatFunc):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- text ------------------------------------------------------------
    def __str__(self):
        return format_laurent(self)

    def __repr__(self):
        return f"IntLaurent({format_laurent(self)!r})"

    def to_json(self) -> list:
        return [[e, self._c[e]] for e in sorted(self._c, reverse=True)]

    @classmethod
    def from_json(cls, data) -> "IntLaurent":
        return cls({int(e): int(v) for e, v in data})

    @classmethod
    def parse(cls, text: str) -> "IntLaurent":
        return parse_laurent(text)


def _to_dense(f: IntLaurent) -> list:
    lo, hi = f.low(), f.high()
    return [ZZ(f._c.get(e, 0)) for e in range(hi, lo - 1, -1)]


def _from_dense(coeffs: list, low: int) -> IntLaurent:
    n = len(coeffs)
    c = {}
    for i, v in enumerate(coeffs):
        if v:
            c[low + (n - 1 - i)] = int(v)
    return IntLaurent._raw(c)


def format_laurent(f: IntLaurent) -> str:
    if not f._c:
        return "0"
    parts = []
    for e in sorted(f._c, reverse=True):
        v = f._c[e]
        sign = "-" if v < 0 else "+"
        a = abs(v)
        if e == 0:
            body = str(a)
        else:
            mono = "q" if e == 1 else f"q^{e}"
            body = mono if a == 1 else f"{a}{mono}"
        parts.append((sign, body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def parse_laurent(text: str) -> IntLaurent:
    """Inverse of format_laurent; also accepts "3*q^2", "-q^-1", "2"."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty Laurent polynomial")
    tokens, cur = [], ""
    for i, ch in enumerate(s):
        if ch in "+-" and cur and s[i - 1] != "^":
            tokens.append(cur)
            cur = ""
        cur += ch
    tokens.append(cur)
    c: dict = {}
    for tok in tokens:
        sign = -1 if tok[0] == "-" else 1
        body = tok.lstrip("+-")
        if not body:
            raise ValueError(f"bad term in {text!r}")
        if "q" in body:
            coef, _, rest = body.partition("q")
            coef = coef.rstrip("*")
            k = 1
            if rest:
                if not rest.startswith("^"):
                    raise ValueError(f"bad term {tok!r}")
                k = int(rest[1:])
            n = int(coef) if coef else 1
        else:
            n, k = int(body), 0
        c[k] = c.get(k, 0) + sign * n
    return IntLaurent(c)


ZERO = IntLaurent.const(0)
ONE = IntLaurent.const(1)
Q = IntLaurent.q(1)
QINV = IntLaurent.q(-1)


# ---------------------------------------------------------------------------
# fraction field


def _poly_gcd(a: IntLaurent, b: IntLaurent) -> IntLaurent:
    """gcd in Z[q] of the q-shifted polynomial parts (content included)."""
    fa, fb = _to_dense(a), _to_dense(b)
    g = dup_gcd(fa, fb, ZZ)
    return _from_dense(g, 0)


class RatFunc:
    """Element of Q(q), kept as num/den with den normalized.

    Normal form: den has lowest exponent 0 and positive leading coefficient,
    and num/den share no non-unit factor.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=1, _reduced: bool = False):
        num = _coerce_num(num)
        den = _coerce_num(den)
        if isinstance(num, RatFunc) or isinstance(den, RatFunc):
            r = RatFunc._of(num) * RatFunc._of(den).inverse()
            self.num, self.den, self._hash = r.num, r.den, None
            return
        if not den._c:
            raise ZeroDivisionError("zero denominator")
        if not num._c:
            self.num, self.den, self._hash = ZERO, ONE, None
            return
        if not _reduced and not den.is_unit():
            g = _poly_gcd(num.shift(-num.low()), den.shift(-den.low()))
            if not g.is_unit():
                num = num.exact_div(g)
                den = den.exact_div(g)
        # normalize den: lowest exponent 0, positive leading coefficient
        lo = den.low()
        if lo:
            den = den.shift(-lo)
            num = num.shift(-lo)
        if den.leading()[1] < 0:
            den, num = -den, -num
        self.num, self.den, self._hash = num, den, None

    @staticmethod
    def _of(x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        return RatFunc(x)

    @classmethod
    def coerce(cls, x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, Fraction):
            return cls(IntLaurent.const(x.numerator), IntLaurent.const(x.denominator))
        return cls(IntLaurent.coerce(x))

    def is_zero(self) -> bool:
        return not self.num._c

    def __bool__(self):
        return bool(self.num._c)

    def is_laurent(self) -> bool:
        return self.den.is_unit()

    def to_laurent(self) -> IntLaurent:
        if not self.den.is_unit():
            raise ArithmeticError(f"{self} is not a Laurent polynomial")
        return self.num.exact_div(self.den)

    def simplify(self):
        """IntLaurent when possible, else self."""
        if self.den == ONE:
            return self.num
        return self

    # arithmetic
    def __add__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        if self.den.is_unit() and other.den.is_unit():
            return RatFunc(self.num * other.num, self.den * other.den, _reduced=True)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num._c:
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num, _reduced=True)

    def __truediv__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _as_ratfunc(other)
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num**n, self.den**n, _reduced=True)

    def bar(self) -> "RatFunc":
        return RatFunc(self.num.bar(), self.den.bar())

    def eval_mod(self, x: int, p: int) -> int:
        d = self.den.eval_mod(x, p)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return self.num.eval_mod(x, p) * pow(d, -1, p) % p

    def __eq__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.den == ONE:
            return hash(self.num)
        return hash((self.num, self.den))

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        n, d = str(self.num), str(self.den)
        if len(self.num._c) > 1:
            n = f"({n})"
        if len(self.den._c) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"RatFunc({self})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data) -> "RatFunc":
        return cls(IntLaurent.from_json(data["num"]), IntLaurent.from_json(data["den"]))


def _coerce_num(x):
    if isinstance(x, (IntLaurent, RatFunc)):
        return x
    if isinstance(x, Fraction):
        return RatFunc.coerce(x)
    return IntLaurent.coerce(x)


def _as_ratfunc(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, IntLaurent):
        return RatFunc(x, ONE, _reduced=True)
    if isinstance(x, int):
        return RatFunc(IntLaurent.const(x), ONE, _reduced=True)
    if isinstance(x, Fraction):
        return RatFunc.coerce(x)
    return None


def scalar(x):
    """Coerce user input (int, Fraction, str, IntLaurent, RatFunc) to a scalar.

    Laurent values stay IntLaurent so the fast path is used; genuine
    fractions become RatFunc.
    """
    if isinstance(x, (IntLaurent, RatFunc)):
        return x
    if isinstance(x, int):
        return IntLaurent.const(x)
    if isinstance(x, Fraction):
        return IntLaurent.const(x.numerator) if x.denominator == 1 else RatFunc.coerce(x)
    if isinstance(x, str):
        s = x.strip()
        if "/" in s and "q" not in s:
            return scalar(Fraction(s))
        if "/" in s:
            a, b = s.split("/", 1)
            return RatFunc(parse_laurent(a.strip("() ")), parse_laurent(b.strip("() "))).simplify()
        return parse_laurent(s)
    raise TypeError(f"cannot interpret {x!r} as a scalar")


def is_zero(x) -> bool:
    return not x


def scalar_to_json(x):
    if isinstance(x, RatFunc):
        if x.den == ONE:
            return x.num.to_json()
        return x.to_json()
    return IntLaurent.coerce(x).to_json()


def scalar_str(x) -> str:
    return str(x)


# ---------------------------------------------------------------------------
# q-combinatorics


@lru_cache(maxsize=None)
def q_int(n: int) -> IntLaurent:
    """[n] = (q^n - q^-n)/(q - q^-1)."""
    if n < 0:
        return -q_int(-n)
    return IntLaurent._raw({n - 1 - 2 * k: 1 for k in range(n)})


@lru_cache(maxsize=None)
def q_factorial(n: int) -> IntLaurent:
    r = ONE
    for k in range(1, n + 1):
        r = r * q_int(k)
    return r


@lru_cache(maxsize=None)
def q_binom(n: int, a: int) -> IntLaurent:
    """[n]...[n-a+1]/[a]! computed by exact division."""
    if a < 0:
        raise ValueError("q_binom needs a >= 0")
    num = ONE
    for k in range(a):
        num = num * q_int(n - k)
    res = num.exact_div(q_factorial(a))
    assert res * q_factorial(a) == num
    return res


def q_pow(k: int) -> IntLaurent:
    return IntLaurent._raw({k: 1})


# ---------------------------------------------------------------------------
# multivariate Laurent polynomials


class MultiLaurent:
    """Laurent polynomial in X_1..X_m over Z[q, q^-1].

    Internally flat: keys are exponent tuples of length m + 1 whose last
    entry is the q-exponent, values are nonzero ints.  The flat form is what
    the Hecke action works on; ``terms`` gives the structured view.
    """

    __slots__ = ("m", "_t", "_hash")

    def __init__(self, m: int, terms: Mapping | None = None):
        self.m = m
        t: dict = {}
        if terms:
            for e, c in terms.items():
                e = tuple(int(x) for x in e)
                if len(e) != m:
                    raise ValueError(f"exponent vector {e} has length != {m}")
                for k, v in IntLaurent.coerce(c).items():
                    key = e + (k,)
                    s = t.get(key, 0) + v
                    if s:
                        t[key] = s
                    else:
                        t.pop(key, None)
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, m: int, t: dict) -> "MultiLaurent":
        obj = object.__new__(cls)
        obj.m = m
        obj._t = t
        obj._hash = None
        return obj

    @classmethod
    def one(cls, m: int) -> "MultiLaurent":
        return cls._raw(m, {(0,) * (m + 1): 1})

    @classmethod
    def constant(cls, m: int, c) -> "MultiLaurent":
        c = IntLaurent.coerce(c)
        return cls._raw(m, {(0,) * m + (k,): v for k, v in c.items()})

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff=1) -> "MultiLaurent":
        e = tuple(exps)
        return cls(len(e), {e: coeff})

    @classmethod
    def variable(cls, m: int, i: int) -> "MultiLaurent":
        """X_i, 1-based."""
        if not 1 <= i <= m:
            raise ValueError(f"variable index {i} outside 1..{m}")
        e = [0] * m
        e[i - 1] = 1
        return cls._raw(m, {tuple(e) + (0,): 1})

    @property
    def terms(self) -> dict:
        out: dict = {}
        for key, v in self._t.items():
            out.setdefault(key[:-1], {})[key[-1]] = v
        return {e: IntLaurent._raw(c) for e, c in out.items()}

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def __len__(self):
        return len(self._t)

    def monomials(self) -> set:
        return {k[:-1] for k in self._t}

    def coefficient(self, exps) -> IntLaurent:
        e = tuple(exps)
        return IntLaurent._raw({k[-1]: v for k, v in self._t.items() if k[:-1] == e})

    def _check(self, other):
        if other.m != self.m:
            raise ValueError("variable count mismatch")

    def __add__(self, other):
        if not isinstance(other, MultiLaurent):
            other = MultiLaurent.constant(self.m, other)
        self._check(other)
        t = dict(self._t)
        for k, v in other._t.items():
            s = t.get(k, 0) + v
            if s:
                t[k] = s
            else:
                t.pop(k, None)
        return MultiLaurent._raw(self.m, t)

    __radd__ = __add__

    def __neg__(self):
        return MultiLaurent._raw(self.m, {k: -v for k, v in self._t.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiLaurent):
            other = MultiLaurent.constant(self.m, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, IntLaurent)):
            return self.scale(other)
        if not isinstance(other, MultiLaurent):
            return NotImplemented
        self._check(other)
        t: dict = {}
        for k1, v1 in self._t.items():
            for k2, v2 in other._t.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                t[k] = t.get(k, 0) + v1 * v2
        return MultiLaurent._raw(self.m, {k: v for k, v in t.items() if v})

    def __rmul__(self, other):
        if isinstance(other, (int, IntLaurent)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "MultiLaurent":
        c = IntLaurent.coerce(c)
        if not c._c:
            return MultiLaurent._raw(self.m, {})
        t: dict = {}
        for key, v in self._t.items():
            base = key[:-1]
            qk = key[-1]
            for e, w in c._c.items():
                nk = base + (qk + e,)
                s = t.get(nk, 0) + v * w
                if s:
                    t[nk] = s
                else:
                    t.pop(nk, None)
        return MultiLaurent._raw(self.m, t)

    def mul_monomial(self, exps) -> "MultiLaurent":
        d = tuple(exps) + (0,)
        return MultiLaurent._raw(self.m, {tuple(a + b for a, b in zip(k, d)): v for k, v in self._t.items()})

    def __pow__(self, n: int):
        if n < 0:
            if len(self._t) != 1:
                raise ZeroDivisionError("only monomials can be inverted")
            (k, v), = self._t.items()
            if abs(v) != 1:
                raise ZeroDivisionError("non-unit coefficient")
            return MultiLaurent._raw(self.m, {tuple(-x for x in k): v}) ** (-n)
        r = MultiLaurent.one(self.m)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def permute(self, perm) -> "MultiLaurent":
        """Substitute X_i -> X_{perm[i-1]} (perm is a 0-based image tuple)."""
        m = self.m
        t = {}
        for k, v in self._t.items():
            e = [0] * m
            for i in range(m):
                e[perm[i]] = k[i]
            t[tuple(e) + (k[-1],)] = v
        return MultiLaurent._raw(m, t)

    def swap(self, i: int) -> "MultiLaurent":
        """f^{s_i}: exchange X_i and X_{i+1} (1-based i)."""
        if not 1 <= i < self.m:
            raise ValueError(f"swap index {i} outside 1..{self.m - 1}")
        a = i - 1
        t = {}
        for k, v in self._t.items():
            lk = list(k)
            lk[a], lk[a + 1] = lk[a + 1], lk[a]
            t[tuple(lk)] = v
        return MultiLaurent._raw(self.m, t)

    def is_symmetric_in(self, window: range) -> bool:
        """Invariant under all permutations of the 1-based variable window."""
        idx = list(window)
        for i in idx[:-1]:
            if self.swap(i) != self:
                return False
        return True

    def extend(self, m_new: int, offset: int = 0) -> "MultiLaurent":
        """Re-embed into m_new variables, placing X_1.. at offset."""
        pad_l = (0,) * offset
        pad_r = (0,) * (m_new - offset - self.m)
        return MultiLaurent._raw(m_new, {pad_l + k[:-1] + pad_r + k[-1:]: v for k, v in self._t.items()})

    def bar(self) -> "MultiLaurent":
        return MultiLaurent._raw(self.m, {k[:-1] + (-k[-1],): v for k, v in self._t.items()})

    def leading_monomial(self) -> tuple:
        """Lexicographically largest exponent vector."""
        return max(self.monomials())

    def __eq__(self, other):
        if isinstance(other, MultiLaurent):
            return self.m == other.m and self._t == other._t
        if isinstance(other, (int, IntLaurent)):
            return self == MultiLaurent.constant(self.m, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.m, frozenset(self._t.items())))
        return self._hash

    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                (f"X{i + 1}" if x == 1 else f"X{i + 1}^{x}") for i, x in enumerate(e) if x
            )
            cs = str(c)
            if not mono:
                parts.append(cs if len(c._c) == 1 else f"({cs})")
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"({cs})*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"MultiLaurent({self.m}, {self})"

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "terms": [[list(e), c.to_json()] for e, c in sorted(self.terms.items(), reverse=True)],
        }

    @classmethod
    def from_json(cls, data) -> "MultiLaurent":
        return cls(data["m"], {tuple(e): IntLaurent.from_json(c) for e, c in data["terms"]})

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def poly_substitute(f: MultiLaurent, assignment: Mapping[int, object], m_out: int | None = None) -> MultiLaurent:
    """Substitute X_i -> assignment[i] (1-based); unassigned variables stay.

    Values may be MultiLaurent (same number of variables as the result) or
    scalars.  Negative exponents need invertible values.
    """
    m_out = f.m if m_out is None else m_out
    vals = {}
    for i in range(1, f.m + 1):
        v = assignment.get(i)
        if v is None:
            if i > m_out:
                raise ValueError(f"variable X{i} has no image")
            v = MultiLaurent.variable(m_out, i)
        elif not isinstance(v, MultiLaurent):
            v = MultiLaurent.constant(m_out, IntLaurent.coerce(v))
        vals[i] = v
    inv_cache: dict = {}

    def power(i: int, n: int) -> MultiLaurent:
        v = vals[i]
        if n >= 0:
            return v**n
        if i not in inv_cache:
            inv_cache[i] = _invert(v)
        return inv_cache[i] ** (-n)

    out = MultiLaurent(m_out)
    for e, c in f.terms.items():
        term = MultiLaurent.constant(m_out, c)
        for i, n in enumerate(e, start=1):
            if n:
                term = term * power(i, n)
        out = out + term
    return out


def _invert(v: MultiLaurent) -> MultiLaurent:
    if len(v.monomials()) == 1:
        (e,) = v.monomials()
        c = v.coefficient(e)
        if c.is_unit():
            (k, s), = c.items()
            return MultiLaurent._raw(v.m, {tuple(-x for x in e) + (-k,): s})
    raise ValueError("non-unit substitution")
