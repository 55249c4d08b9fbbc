"""Exact field arithmetic: the rationals and finite fields GF(p^k).

Field elements are plain hashable Python values (Fraction, int, or a
coefficient tuple); a field object supplies the operations and never
wraps elements.  Everything is exact, there is no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class FieldError(ArithmeticError):
    pass


class InputError(ValueError):
    """Bad caller input (dimension mismatch, malformed spec, ...)."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Characteristic (0 or a prime) and extension degree (1 for char 0)."""

    characteristic: int = 0
    extension_degree: int = 1

    def __post_init__(self):
        if self.characteristic != 0 and not is_prime(self.characteristic):
            raise InputError(f"characteristic must be 0 or prime: {self.characteristic}")
        if self.extension_degree < 1:
            raise InputError(f"extension degree must be >= 1: {self.extension_degree}")
        if self.characteristic == 0 and self.extension_degree != 1:
            raise InputError("characteristic 0 only supports degree 1 (the rationals)")


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p); polys are little-endian coefficient tuples


def _poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a, m, p):
    a = _poly_trim(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        da = len(a) - 1
        q = a[-1] * inv_lead % p
        for i in range(dm + 1):
            a[da - dm + i] = (a[da - dm + i] - q * m[i]) % p
        a = _poly_trim(a)
    return a


def _poly_mulmod(a, b, m, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_mod(out, m, p)


def _poly_powmod(a, e, m, p):
    result = [1]
    base = _poly_mod(a, m, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, m, p)
        base = _poly_mulmod(base, base, m, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = _poly_trim(a), _poly_trim(b)
    while b:
        inv = pow(b[-1], p - 2, p)
        r = list(a)
        db, da = len(b) - 1, len(r) - 1
        while len(_poly_trim(r)) - 1 >= db and _poly_trim(r):
            r = _poly_trim(r)
            if len(r) - 1 < db:
                break
            q = r[-1] * inv % p
            shift = len(r) - 1 - db
            for i in range(db + 1):
                r[shift + i] = (r[shift + i] - q * b[i]) % p
            r = _poly_trim(r)
        a, b = b, _poly_trim(r)
    return a


def _is_irreducible(m, p):
    """Rabin's criterion for a monic polynomial over GF(p)."""
    k = len(m) - 1
    if k < 1:
        return False
    x = [0, 1]
    xq = _poly_powmod(x, p ** k, m, p)
    diff = _poly_trim([(a - b) % p for a, b in zip_longest(xq, x)])
    if diff:
        return False
    for q in sorted({d for d in range(2, k + 1) if k % d == 0 and is_prime(d)}):
        xe = _poly_powmod(x, p ** (k // q), m, p)
        diff = _poly_trim([(a - b) % p for a, b in zip_longest(xe, x)])
        g = _poly_gcd(diff, m, p)
        if len(g) - 1 != 0:
            return False
    return True


def zip_longest(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]


# Shipped modulus table: for each (p, k) the monic irreducible with the
# smallest integer encoding sum(c_i * p**i) of its non-leading coefficients.
# irreducible_modulus() falls back to the same deterministic search, so
# entries here are a cache, not a convention of their own.
MODULUS_TABLE = {
    (2, 2): (1, 1, 1),            # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),         # x^3 + x + 1
    (2, 4): (1, 1, 0, 0, 1),      # x^4 + x + 1
    (2, 5): (1, 0, 1, 0, 0, 1),   # x^5 + x^2 + 1
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 2): (1, 0, 1),            # x^2 + 1
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 2): (2, 0, 1),
    (5, 3): (2, 1, 0, 1),
    (7, 2): (1, 0, 1),
    (11, 2): (1, 0, 1),
    (13, 2): (2, 0, 1),
}


def irreducible_modulus(p: int, k: int):
    """Deterministic monic irreducible of degree k over GF(p)."""
    if (p, k) in MODULUS_TABLE:
        return MODULUS_TABLE[(p, k)]
    for enc in range(p ** k):
        coeffs = []
        e = enc
        for _ in range(k):
            coeffs.append(e % p)
            e //= p
        m = tuple(coeffs) + (1,)
        if _is_irreducible(list(m), p):
            return m
    raise FieldError(f"no irreducible polynomial found for GF({p}^{k})")


# ---------------------------------------------------------------------------


class Rationals:
    """The field Q; elements are Fractions (ints are accepted and coerced)."""

    characteristic = 0
    degree = 1
    order = None
    zero = Fraction(0)
    one = Fraction(1)
    name = "Q"

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise InputError(f"cannot coerce {x!r} into Q")

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise FieldError("inverse of zero")
        return 1 / a

    def random(self, rng, span=10 ** 6):
        return Fraction(rng.randint(-span, span))

    def random_nonzero(self, rng, span=10 ** 6):
        while True:
            a = self.random(rng, span)
            if a:
                return a

    def render(self, a):
        return str(a)

    def spec(self):
        return FieldSpec(0, 1)

    def __repr__(self):
        return "Q"


class PrimeField:
    """GF(p); elements are ints in range(p)."""

    degree = 1

    def __init__(self, p):
        self.characteristic = p
        self.p = p
        self.order = p
        self.zero = 0
        self.one = 1 % p
        self.name = f"GF({p})"

    def coerce(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator % self.p
        raise InputError(f"cannot coerce {x!r} into {self.name}")

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise FieldError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def elements(self):
        return range(self.p)

    def random(self, rng):
        return rng.randrange(self.p)

    def random_nonzero(self, rng):
        return rng.randrange(1, self.p)

    def frobenius(self, a):
        return pow(a, self.p, self.p)

    def render(self, a):
        return str(a)

    def spec(self):
        return FieldSpec(self.p, 1)

    def __repr__(self):
        return self.name


class ExtensionField:
    """GF(p^k) as GF(p)[x] modulo a fixed irreducible.

    Elements are length-k tuples of ints, little-endian in the class of x.
    The modulus ships with the package so results reproduce bit for bit.
    """

    def __init__(self, p, k, modulus=None):
        if k < 2:
            raise InputError("use PrimeField for degree 1")
        self.characteristic = p
        self.p = p
        self.degree = k
        self.order = p ** k
        self.modulus = tuple(modulus) if modulus else irreducible_modulus(p, k)
        if len(self.modulus) != k + 1 or self.modulus[-1] != 1:
            raise InputError("modulus must be monic of degree k")
        self.zero = (0,) * k
        self.one = (1,) + (0,) * (k - 1)
        self.name = f"GF({p}^{k})"

    def _reduce_full(self, prod):
        # prod has length 2k-1
        k, p = self.degree, self.p
        out = list(prod[:k])
        red_rows = self._reduction_rows()
        for i, c in enumerate(prod[k:]):
            if c:
                row = red_rows[i]
                for j in range(k):
                    out[j] = (out[j] + c * row[j]) % p
        return tuple(out)

    def _reduction_rows(self):
        if not hasattr(self, "_rows_cache"):
            k, p = self.degree, self.p
            rows = []
            cur = [(-c) % p for c in self.modulus[:k]]
            for _ in range(k - 1):
                rows.append(tuple(cur))
                cur = [0] + cur
                carry = cur.pop()
                if carry:
                    cur = [(cur[j] + carry * rows[0][j]) % p for j in range(k)]
            self._rows_cache = rows
        return self._rows_cache

    def coerce(self, x):
        if isinstance(x, tuple) and len(x) == self.degree:
            return tuple(c % self.p for c in x)
        if isinstance(x, int):
            return self.from_int(x)
        if isinstance(x, Fraction) and x.denominator == 1:
            return self.from_int(x.numerator)
        raise InputError(f"cannot coerce {x!r} into {self.name}")

    def from_int(self, n):
        return (n % self.p,) + (0,) * (self.degree - 1)

    def generator(self):
        return (0, 1) + (0,) * (self.degree - 2)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def mul(self, a, b):
        k, p = self.degree, self.p
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] = (prod[i + j] + ai * bj) % p
        return self._reduce_full(prod)

    def inv(self, a):
        if all(c == 0 for c in a):
            raise FieldError("inverse of zero")
        # extended Euclid in GF(p)[x]
        p = self.p
        r0, r1 = list(self.modulus), _poly_trim(a)
        s0, s1 = [], [1]
        while r1:
            # divide r0 by r1
            q = [0] * (len(r0) - len(r1) + 1)
            rem = list(r0)
            inv_lead = pow(r1[-1], p - 2, p)
            for d in range(len(rem) - len(r1), -1, -1):
                c = rem[d + len(r1) - 1] * inv_lead % p
                q[d] = c
                if c:
                    for i, coef in enumerate(r1):
                        rem[d + i] = (rem[d + i] - c * coef) % p
            rem = _poly_trim(rem)
            # s_next = s0 - q*s1
            qs1 = [0] * (len(q) + len(s1) - 1) if q and s1 else []
            for i, qi in enumerate(q):
                if qi:
                    for j, sj in enumerate(s1):
                        qs1[i + j] = (qs1[i + j] + qi * sj) % p
            s_next = [(x - y) % p for x, y in zip_longest(s0, qs1)]
            r0, r1 = _poly_trim(r1), rem
            s0, s1 = s1, _poly_trim(s_next)
        lead_inv = pow(r0[-1], p - 2, p)
        s0 = [c * lead_inv % p for c in s0]
        s0 = (s0 + [0] * self.degree)[: self.degree]
        return tuple(s0)

    def elements(self):
        p, k = self.p, self.degree
        for enc in range(p ** k):
            coeffs = []
            e = enc
            for _ in range(k):
                coeffs.append(e % p)
                e //= p
            yield tuple(coeffs)

    def random(self, rng):
        return tuple(rng.randrange(self.p) for _ in range(self.degree))

    def random_nonzero(self, rng):
        while True:
            a = self.random(rng)
            if any(a):
                return a

    def frobenius(self, a):
        result = self.one
        base = a
        e = self.p
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def render(self, a):
        if not any(a):
            return "0"
        parts = []
        for i, c in enumerate(a):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                xs = "x" if i == 1 else f"x^{i}"
                parts.append(xs if c == 1 else f"{c}*{xs}")
        return "+".join(parts)

    def spec(self):
        return FieldSpec(self.p, self.degree)

    def __repr__(self):
        return self.name


_FIELD_CACHE: dict = {}


def GF(p: int, k: int = 1):
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    key = (p, k)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = PrimeField(p) if k == 1 else ExtensionField(p, k)
    return _FIELD_CACHE[key]


QQ = Rationals()


def field_from_spec(spec: FieldSpec):
    if spec.characteristic == 0:
        return QQ
    return GF(spec.characteristic, spec.extension_degree)


def parse_field_name(text: str):
    """Accepts "Q", "GF(p)" and "GF(p^k)"."""
    t = text.strip()
    if t in ("Q", "QQ"):
        return QQ
    if t.startswith("GF(") and t.endswith(")"):
        inner = t[3:-1]
        if "^" in inner:
            ps, ks = inner.split("^", 1)
            return GF(int(ps), int(ks))
        return GF(int(inner))
    raise InputError(f"unknown field {text!r}")


def embedding(small, big):
    """Field embedding GF(p^k) -> GF(p^K) with k | K, as an element map.

    The image of the small generator is the root of the small modulus that
    comes first in the enumeration order of the big field, so the embedding
    is deterministic.  Q and prime subfields embed canonically.
    """
    if small is big:
        return lambda a: a
    if isinstance(small, Rationals):
        raise InputError("no extensions of Q are supported")
    if small.characteristic != big.characteristic:
        raise InputError("characteristics differ")
    if big.degree % small.degree != 0:
        raise InputError("degree of the big field must be a multiple")
    if isinstance(small, PrimeField):
        return lambda a, big=big: big.from_int(a)
    modulus = small.modulus
    for cand in big.elements():
        acc = big.zero
        power = big.one
        for c in modulus:
            if c:
                acc = big.add(acc, big.mul(big.from_int(c), power))
            power = big.mul(power, cand)
        if acc == big.zero:
            root = cand
            break
    else:
        raise FieldError("no root of the modulus in the big field")

    powers = [big.one]
    for _ in range(small.degree - 1):
        powers.append(big.mul(powers[-1], root))

    def embed(a, big=big, powers=powers):
        acc = big.zero
        for c, pw in zip(a, powers):
            if c:
                acc = big.add(acc, big.mul(big.from_int(c), pw))
        return acc

    return embed


def extended_field(field, factor=2):
    """The extension used when an isomorphism search needs more scalars."""
    if isinstance(field, Rationals):
        raise InputError("Q is not extended")
    return GF(field.characteristic, field.degree * factor)
