"""Exact scalar arithmetic for skein computations.

Two scalar domains, selected by a :class:`Mode`:

* generic: rational functions in one variable ``a`` over Q, held as a
  quotient of integer-coefficient Laurent polynomials in canonical form
  (denominator is a true polynomial with nonzero constant term, positive
  leading coefficient, and no common factor with the numerator, integer
  content included).  Equality is structural.
* root of unity: the cyclotomic field Q(zeta_{4r}), elements held as integer
  residues modulo the cyclotomic polynomial Phi_{4r} over a positive integer
  denominator, content-reduced.

Conventions used throughout the package: ``q = a**2``, ``q**(1/2) = a``,
``[n]_q = (q**n - q**-n)/(q - q**-1)`` and the loop value
``delta = -(a**2 + a**-2) = -[2]_q``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Laurent = dict  # exponent (int) -> coefficient (int), zero coefficients absent


class PoleError(ArithmeticError):
    """A denominator vanished under specialization at a root of unity."""


# ---------------------------------------------------------------------------
# integer Laurent polynomial helpers (plain dicts, never mutated after return)

_ZERO: Laurent = {}
_ONE: Laurent = {0: 1}


def _ladd(f: Laurent, g: Laurent) -> Laurent:
    out = dict(f)
    for e, c in g.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out

def _lneg(f: Laurent) -> Laurent:
    return {e: -c for e, c in f.items()}

def _lsub(f: Laurent, g: Laurent) -> Laurent:
    return _ladd(f, _lneg(g))

def _lmul(f: Laurent, g: Laurent) -> Laurent:
    if not f or not g:
        return {}
    if len(g) < len(f):
        f, g = g, f
    out: Laurent = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = e1 + e2
            s = out.get(e, 0) + c1 * c2
            if s:
                out[e] = s
            else:
                del out[e]
    return out

def _lscale(f: Laurent, c: int) -> Laurent:
    if c == 0:
        return {}
    return {e: c * v for e, v in f.items()}

def _lshift(f: Laurent, k: int) -> Laurent:
    if k == 0:
        return f
    return {e + k: c for e, c in f.items()}

def _lminexp(f: Laurent) -> int:
    return min(f)

def _lmaxexp(f: Laurent) -> int:
    return max(f)

def _lcontent(f: Laurent) -> int:
    g = 0
    for c in f.values():
        g = gcd(g, c)
    return g


def _to_list(f: Laurent) -> list:
    # little-endian coefficient list; caller guarantees min exponent 0
    n = _lmaxexp(f) + 1
    out = [0] * n
    for e, c in f.items():
        out[e] = c
    return out

def _from_list(cs: list) -> Laurent:
    return {e: c for e, c in enumerate(cs) if c}


def _list_divexact(f: list, g: list) -> list:
    # long division knowing g | f over Z[x]; asserts exactness
    f = list(f)
    dg = len(g) - 1
    lg = g[-1]
    q = [0] * (len(f) - dg)
    for k in range(len(f) - 1 - dg, -1, -1):
        c = f[k + dg]
        if c == 0:
            continue
        qc, rem = divmod(c, lg)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        q[k] = qc
        for j, gj in enumerate(g):
            f[k + j] -= qc * gj
    if any(f[:dg]):
        raise ArithmeticError("inexact polynomial division")
    return q


def _list_prem(f: list, g: list) -> list:
    # pseudo-remainder of f by g (both little-endian, g nonzero)
    f = list(f)
    dg = len(g) - 1
    lg = g[-1]
    while len(f) - 1 >= dg and any(f):
        while f and f[-1] == 0:
            f.pop()
        if len(f) - 1 < dg:
            break
        lf = f[-1]
        shift = len(f) - 1 - dg
        f = [c * lg for c in f]
        for j, gj in enumerate(g):
            f[shift + j] -= lf * gj
        while f and f[-1] == 0:
            f.pop()
    return f


def _list_primitive(f: list) -> list:
    c = 0
    for v in f:
        c = gcd(c, v)
    if c == 0:
        return []
    if f[-1] < 0:
        c = -c
    return [v // c for v in f]


def _poly_gcd(f: Laurent, g: Laurent) -> Laurent:
    """gcd in Z[a] of two polynomials with min exponent 0 (content included,
    positive leading coefficient)."""
    if not f:
        return _normalize_sign(g)
    if not g:
        return _normalize_sign(f)
    cf, cg = abs(_lcontent(f)), abs(_lcontent(g))
    u = _list_primitive(_to_list(f))
    v = _list_primitive(_to_list(g))
    if len(u) < len(v):
        u, v = v, u
    # primitive PRS
    while v:
        r = _list_prem(u, v)
        u, v = v, _list_primitive(r)
    return _lscale(_from_list(u), gcd(cf, cg))


def _normalize_sign(f: Laurent) -> Laurent:
    if f and f[_lmaxexp(f)] < 0:
        return _lneg(f)
    return f


def _poly_divexact(f: Laurent, g: Laurent) -> Laurent:
    if g == _ONE:
        return f
    return _from_list(_list_divexact(_to_list(f), _to_list(g)))


# ---------------------------------------------------------------------------
# generic scalars: quotients of integer Laurent polynomials

class ScalarGeneric:
    """Rational function in ``a`` over Q, canonical num/den pair.

    Invariants: ``den`` is nonzero with min exponent 0 and positive leading
    coefficient; ``gcd(num * a**-minexp(num), den) = 1`` in Z[a], integer
    content included.  Zero is ``{} / {0: 1}``.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Laurent, den: Laurent, _canonical: bool = False):
        if not _canonical:
            num, den = _canonicalize(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # constructors ----------------------------------------------------------

    @staticmethod
    def from_int(n: int) -> "ScalarGeneric":
        return ScalarGeneric({0: n} if n else {}, dict(_ONE), _canonical=True)

    @staticmethod
    def from_fraction(x: Fraction) -> "ScalarGeneric":
        return ScalarGeneric({0: x.numerator} if x.numerator else {},
                             {0: x.denominator}, _canonical=True)

    @staticmethod
    def a_power(e: int) -> "ScalarGeneric":
        return ScalarGeneric({e: 1}, dict(_ONE), _canonical=True)

    @staticmethod
    def from_laurent(f: Laurent) -> "ScalarGeneric":
        return ScalarGeneric(dict(f), dict(_ONE), _canonical=True)

    # predicates ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == _ONE and self.den == _ONE

    # arithmetic ------------------------------------------------------------

    def __add__(self, other):
        other = _coerce_generic(other)
        if other is NotImplemented:
            return other
        if self.den == _ONE and other.den == _ONE:
            return ScalarGeneric(_ladd(self.num, other.num), dict(_ONE),
                                 _canonical=True)
        num = _ladd(_lmul(self.num, other.den), _lmul(other.num, self.den))
        return ScalarGeneric(num, _lmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return ScalarGeneric(_lneg(self.num), self.den, _canonical=True)

    def __sub__(self, other):
        other = _coerce_generic(other)
        if other is NotImplemented:
            return other
        return self.__add__(other.__neg__())

    def __rsub__(self, other):
        other = _coerce_generic(other)
        if other is NotImplemented:
            return other
        return other.__sub__(self)

    def __mul__(self, other):
        other = _coerce_generic(other)
        if other is NotImplemented:
            return other
        if self.den == _ONE and other.den == _ONE:
            return ScalarGeneric(_lmul(self.num, other.num), dict(_ONE),
                                 _canonical=True)
        return ScalarGeneric(_lmul(self.num, other.num),
                             _lmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_generic(other)
        if other is NotImplemented:
            return other
        if not other.num:
            raise ZeroDivisionError("division by zero scalar")
        return ScalarGeneric(_lmul(self.num, other.den),
                             _lmul(self.den, other.num))

    def __rtruediv__(self, other):
        other = _coerce_generic(other)
        if other is NotImplemented:
            return other
        return other.__truediv__(self)

    def inv(self) -> "ScalarGeneric":
        if not self.num:
            raise ZeroDivisionError("division by zero scalar")
        return ScalarGeneric(self.den, self.num)

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        out = ScalarGeneric.from_int(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    # comparison / hashing --------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = ScalarGeneric.from_int(other)
        if not isinstance(other, ScalarGeneric):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((tuple(sorted(self.num.items())),
                               tuple(sorted(self.den.items()))))
        return self._hash

    def __repr__(self):
        return f"ScalarGeneric({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def _coerce_generic(x):
    if isinstance(x, ScalarGeneric):
        return x
    if isinstance(x, int):
        return ScalarGeneric.from_int(x)
    return NotImplemented


def _canonicalize(num: Laurent, den: Laurent):
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return {}, dict(_ONE)
    dshift = _lminexp(den)
    nshift = _lminexp(num)
    d0 = _lshift(den, -dshift)
    n0 = _lshift(num, -nshift)
    g = _poly_gcd(n0, d0)
    if g != _ONE:
        n0 = _poly_divexact(n0, g)
        d0 = _poly_divexact(d0, g)
    if d0[_lmaxexp(d0)] < 0:
        n0 = _lneg(n0)
        d0 = _lneg(d0)
    return _lshift(n0, nshift - dshift), d0


# ---------------------------------------------------------------------------
# cyclotomic polynomials and root-of-unity scalars

_cyclotomic_cache: dict = {}


def cyclotomic_poly(n: int) -> list:
    """Coefficient list (little-endian) of the n-th cyclotomic polynomial."""
    if n in _cyclotomic_cache:
        return _cyclotomic_cache[n]
    # (x^n - 1) / prod of Phi_d over proper divisors d of n
    f = [0] * (n + 1)
    f[0], f[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            f = _list_divexact(f, cyclotomic_poly(d))
    _cyclotomic_cache[n] = f
    return f


class ScalarCyclotomic:
    """Element of Q(zeta_{4r}): integer residue mod Phi_{4r} over den > 0."""

    __slots__ = ("r", "coeffs", "den", "_hash")

    def __init__(self, r: int, coeffs, den: int = 1, _canonical: bool = False):
        self.r = r
        if _canonical:
            self.coeffs = tuple(coeffs)
            self.den = den
        else:
            cs = _cyclo_reduce(list(coeffs), r)
            if den < 0:
                den = -den
                cs = [-c for c in cs]
            g = den
            for c in cs:
                g = gcd(g, c)
            if g > 1:
                den //= g
                cs = [c // g for c in cs]
            if not any(cs):
                cs, den = [], 1
            self.coeffs = tuple(cs)
            self.den = den
        self._hash = None

    @staticmethod
    def from_int(n: int, r: int) -> "ScalarCyclotomic":
        return ScalarCyclotomic(r, (n,) if n else (), 1, _canonical=True)

    @staticmethod
    def a_power(e: int, r: int) -> "ScalarCyclotomic":
        order = 4 * r
        e %= order
        cs = [0] * (e + 1)
        cs[e] = 1
        return ScalarCyclotomic(r, cs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,) and self.den == 1

    def _check(self, other):
        if isinstance(other, int):
            return ScalarCyclotomic.from_int(other, self.r)
        if isinstance(other, ScalarCyclotomic):
            if other.r != self.r:
                raise ValueError("mixed cyclotomic orders")
            return other
        return None

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(o.coeffs) + [0] * (n - len(o.coeffs))
        if self.den == o.den:
            return ScalarCyclotomic(self.r,
                                    [x + y for x, y in zip(a, b)], self.den)
        return ScalarCyclotomic(
            self.r, [x * o.den + y * self.den for x, y in zip(a, b)],
            self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return ScalarCyclotomic(self.r, tuple(-c for c in self.coeffs),
                                self.den, _canonical=True)

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self.__add__(o.__neg__())

    def __rsub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o.__sub__(self)

    def __mul__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return ScalarCyclotomic(self.r, (), 1, _canonical=True)
        prod = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci:
                for j, cj in enumerate(o.coeffs):
                    prod[i + j] += ci * cj
        return ScalarCyclotomic(self.r, prod, self.den * o.den)

    __rmul__ = __mul__

    def inv(self) -> "ScalarCyclotomic":
        if not self.coeffs:
            raise ZeroDivisionError("division by zero scalar")
        phi = cyclotomic_poly(4 * self.r)
        # extended Euclid over Q[x]; rare call, Fractions are fine here
        u, g = _xgcd_mod(list(self.coeffs), phi)
        # self/den * (den * u / g) = 1
        den_lcm = 1
        for c in u:
            den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
        gnum, gden = g.numerator, g.denominator
        cs = [c.numerator * (den_lcm // c.denominator) * self.den * gden
              for c in u]
        return ScalarCyclotomic(self.r, cs, den_lcm * gnum)

    def __truediv__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self.__mul__(o.inv())

    def __rtruediv__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o.__mul__(self.inv())

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        out = ScalarCyclotomic.from_int(1, self.r)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = ScalarCyclotomic.from_int(other, self.r)
        if not isinstance(other, ScalarCyclotomic):
            return NotImplemented
        return (self.r == other.r and self.coeffs == other.coeffs
                and self.den == other.den)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.r, self.coeffs, self.den))
        return self._hash

    def __repr__(self):
        return f"ScalarCyclotomic(r={self.r}, {format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def _cyclo_reduce(cs: list, r: int) -> list:
    phi = cyclotomic_poly(4 * r)
    deg = len(phi) - 1
    for e in range(len(cs) - 1, deg - 1, -1):
        c = cs[e]
        if c:
            cs[e] = 0
            for j in range(deg):
                cs[e - deg + j] -= c * phi[j]
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _xgcd_mod(f: list, phi: list):
    """Return (u, g) with u*f = g (mod phi), g a nonzero rational."""
    r0 = [Fraction(c) for c in phi]
    r1 = [Fraction(c) for c in f]
    s0: list = [Fraction(0)]
    s1: list = [Fraction(1)]

    def deg(p):
        for i in range(len(p) - 1, -1, -1):
            if p[i]:
                return i
        return -1

    while deg(r1) > 0:
        d0, d1 = deg(r0), deg(r1)
        while d0 >= d1 >= 0:
            c = r0[d0] / r1[d1]
            for j in range(d1 + 1):
                r0[d0 - d1 + j] -= c * r1[j]
            for j in range(len(s1)):
                while len(s0) < d0 - d1 + j + 1:
                    s0.append(Fraction(0))
                s0[d0 - d1 + j] -= c * s1[j]
            d0 = deg(r0)
        r0, r1 = r1, r0
        s0, s1 = s1, s0
    g = r1[deg(r1)]
    if g == 0:
        raise ZeroDivisionError("not invertible modulo the cyclotomic polynomial")
    return s1, g


def specialize(x: ScalarGeneric, r: int) -> ScalarCyclotomic:
    """Evaluate a generic scalar at a primitive 4r-th root of unity.

    Raises PoleError if the denominator vanishes there.
    """
    num = _eval_cyclo(x.num, r)
    den = _eval_cyclo(x.den, r)
    if den.is_zero():
        raise PoleError(
            f"denominator {format_laurent(x.den)} vanishes at a primitive "
            f"{4 * r}-th root of unity")
    return num / den


def _eval_cyclo(f: Laurent, r: int) -> ScalarCyclotomic:
    order = 4 * r
    cs: list = [0] * order
    for e, c in f.items():
        cs[e % order] += c
    return ScalarCyclotomic(r, cs)


def sum_scalars(values, mode) -> object:
    """Sum scalars with a single normalization at the end.

    Generic values accumulate over an incrementally maintained common
    denominator, far cheaper than pairwise canonicalizing additions.
    """
    vals = list(values)
    if mode.is_root:
        total = mode.zero()
        for v in vals:
            total = total + v
        return total
    num: Laurent = {}
    den: Laurent = dict(_ONE)
    for v in vals:
        g = _poly_gcd(den, v.den)
        extra = _poly_divexact(v.den, g)
        if extra != _ONE:
            num = _lmul(num, extra)
            den = _lmul(den, extra)
        num = _ladd(num, _lmul(v.num, _poly_divexact(den, v.den)))
    return ScalarGeneric(num, den)


# ---------------------------------------------------------------------------
# modes

class Mode:
    """Scalar domain: generic (rational functions in a) or root of unity."""

    is_root = False
    r: int | None = None

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError

    def a_power(self, e: int):
        raise NotImplementedError

    def delta(self):
        # loop value -(a^2 + a^-2)
        return -(self.a_power(2) + self.a_power(-2))

    def quantum_int(self, n: int):
        # [n]_q = q^{n-1} + q^{n-3} + ... + q^{1-n} with q = a^2
        if n < 0:
            return -self.quantum_int(-n)
        out = self.zero()
        for i in range(n):
            out = out + self.a_power(2 * (n - 1 - 2 * i))
        return out

    def quantum_factorial(self, n: int):
        out = self.one()
        for k in range(2, n + 1):
            out = out * self.quantum_int(k)
        return out


class GenericMode(Mode):
    is_root = False

    def zero(self):
        return ScalarGeneric.from_int(0)

    def one(self):
        return ScalarGeneric.from_int(1)

    def from_int(self, n: int):
        return ScalarGeneric.from_int(n)

    def a_power(self, e: int):
        return ScalarGeneric.a_power(e)

    def __repr__(self):
        return "generic"

    def __str__(self):
        return "generic"

    def __eq__(self, other):
        return isinstance(other, GenericMode)

    def __hash__(self):
        return hash("generic-mode")


class RootMode(Mode):
    """Scalars live in Q(zeta_{4r}), a specialized to a primitive 4r-th root."""

    is_root = True

    def __init__(self, r: int):
        if r < 3:
            raise ValueError(f"root order r must be >= 3, got {r}")
        self.r = r

    def zero(self):
        return ScalarCyclotomic.from_int(0, self.r)

    def one(self):
        return ScalarCyclotomic.from_int(1, self.r)

    def from_int(self, n: int):
        return ScalarCyclotomic.from_int(n, self.r)

    def a_power(self, e: int):
        return ScalarCyclotomic.a_power(e, self.r)

    def __repr__(self):
        return f"root:{self.r}"

    def __str__(self):
        return f"root:{self.r}"

    def __eq__(self, other):
        return isinstance(other, RootMode) and other.r == self.r

    def __hash__(self):
        return hash(("root-mode", self.r))


GENERIC = GenericMode()


def parse_mode(text: str) -> Mode:
    text = text.strip()
    if text == "generic":
        return GENERIC
    if text.startswith("root:"):
        try:
            r = int(text[5:])
        except ValueError:
            raise ValueError(f"bad mode {text!r}") from None
        return RootMode(r)
    raise ValueError(f"bad mode {text!r}: expected 'generic' or 'root:<r>'")


# ---------------------------------------------------------------------------
# text form: signed sums of c*a^e terms, rational functions as "num / den"

def format_laurent(f: Laurent) -> str:
    if not f:
        return "0"
    parts = []
    for e in sorted(f, reverse=True):
        c = f[e]
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if e == 0:
            body = str(c)
        else:
            var = "a" if e == 1 else f"a^{e}"
            body = var if c == 1 else f"{c}*{var}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def format_scalar(x) -> str:
    if isinstance(x, ScalarGeneric):
        if x.den == _ONE:
            return format_laurent(x.num)
        return f"{format_laurent(x.num)} / {format_laurent(x.den)}"
    if isinstance(x, ScalarCyclotomic):
        f = {e: c for e, c in enumerate(x.coeffs) if c}
        if x.den == 1:
            return format_laurent(f)
        return f"{format_laurent(f)} / {x.den}"
    raise TypeError(f"not a scalar: {x!r}")


def parse_laurent(text: str):
    """Parse a signed sum of ``c*a^e`` terms; rational c allowed.

    Returns (laurent_with_integer_coeffs, common_denominator).
    """
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    # split into signed terms
    terms = []
    i = 0
    sign = 1
    if text[0] in "+-":
        sign = -1 if text[0] == "-" else 1
        i = 1
    cur = ""
    while i < len(text):
        ch = text[i]
        if ch in "+-" and cur.strip() and not cur.rstrip().endswith(("^", "*", "/")):
            terms.append((sign, cur.strip()))
            sign = -1 if ch == "-" else 1
            cur = ""
        else:
            cur += ch
        i += 1
    if not cur.strip():
        raise ValueError(f"dangling sign in {text!r}")
    terms.append((sign, cur.strip()))

    parts = []  # (Fraction coefficient, exponent)
    for sign, t in terms:
        coeff = Fraction(1)
        expo = 0
        if "*" in t:
            cs, vs = t.split("*", 1)
            coeff = Fraction(cs.strip())
            t = vs.strip()
        if t.startswith("a"):
            rest = t[1:]
            if rest == "":
                expo = 1
            elif rest.startswith("^"):
                expo = int(rest[1:])
            else:
                raise ValueError(f"bad term {t!r}")
        elif t:
            coeff = coeff * Fraction(t)
            expo = 0
        parts.append((sign * coeff, expo))

    den = 1
    for c, _ in parts:
        den = den * c.denominator // gcd(den, c.denominator)
    out: Laurent = {}
    for c, e in parts:
        v = out.get(e, 0) + c.numerator * (den // c.denominator)
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out, den


def parse_scalar(text: str) -> ScalarGeneric:
    """Parse ``num`` or ``num / den`` in the Laurent text form."""
    if " / " in text:
        ns, ds = text.split(" / ", 1)
        n, nden = parse_laurent(ns)
        d, dden = parse_laurent(ds)
        return ScalarGeneric(_lscale(n, dden), _lscale(d, nden))
    n, nden = parse_laurent(text)
    return ScalarGeneric(n, {0: nden})
