"""Exact arithmetic in prime fields, extension fields and quotient-ring
constituent fields.

Every field is a handle object exposing ``zero``/``one`` and the methods
``add``, ``sub``, ``neg``, ``mul``, ``inv``, ``pow``, ``conjugate``.
Elements themselves are plain hashable values: an int for a prime field,
a tuple of subfield elements for an extension.  This keeps vectors and
matrices cheap and makes every element usable as a dict key.
"""

from __future__ import annotations

import itertools

from .errors import (
    BadParameters,
    BoundExceeded,
    DivisionByZero,
    FieldMismatch,
    NotPrime,
)

DEFAULT_CARDINALITY_BOUND = 2 ** 20

# Hard ceiling for internally constructed extensions (splitting fields).
_EXTENSION_BOUND = 2 ** 22


def is_prime(n):
    """Primality by trial division; adequate at desk scale."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorint(n):
    """Prime factorization by trial division, as a {prime: exponent} dict."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def ensure_same_field(fa, fb):
    if fa != fb:
        raise FieldMismatch(f"operands belong to different fields: {fa} vs {fb}")


# ---------------------------------------------------------------------------
# Raw coefficient-vector arithmetic over an arbitrary field handle.
# Vectors are lists/tuples of subfield elements, ascending degree,
# not necessarily normalized.
# ---------------------------------------------------------------------------

def strip_raw(field, coeffs):
    c = list(coeffs)
    zero = field.zero
    while c and c[-1] == zero:
        c.pop()
    return c


def poly_add_raw(field, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    add = field.add
    for i, x in enumerate(b):
        out[i] = add(out[i], x)
    return strip_raw(field, out)


def poly_neg_raw(field, a):
    neg = field.neg
    return [neg(x) for x in a]


def poly_sub_raw(field, a, b):
    return poly_add_raw(field, a, poly_neg_raw(field, b))


def poly_mul_raw(field, a, b):
    a = strip_raw(field, a)
    b = strip_raw(field, b)
    if not a or not b:
        return []
    zero = field.zero
    add = field.add
    mul = field.mul
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == zero:
            continue
        for j, y in enumerate(b):
            out[i + j] = add(out[i + j], mul(x, y))
    return strip_raw(field, out)


def poly_divmod_raw(field, a, b):
    a = strip_raw(field, a)
    b = strip_raw(field, b)
    if not b:
        raise DivisionByZero("polynomial division by zero")
    zero = field.zero
    sub = field.sub
    mul = field.mul
    lead_inv = field.inv(b[-1])
    rem = list(a)
    if len(rem) < len(b):
        return [], rem
    quot = [zero] * (len(rem) - len(b) + 1)
    for shift in range(len(rem) - len(b), -1, -1):
        coef = rem[shift + len(b) - 1]
        if coef == zero:
            continue
        factor = mul(coef, lead_inv)
        quot[shift] = factor
        for i, bx in enumerate(b):
            rem[shift + i] = sub(rem[shift + i], mul(factor, bx))
    return strip_raw(field, quot), strip_raw(field, rem)


def poly_mod_raw(field, a, b):
    return poly_divmod_raw(field, a, b)[1]


def poly_monic_raw(field, a):
    a = strip_raw(field, a)
    if not a:
        return a
    if a[-1] == field.one:
        return list(a)
    inv = field.inv(a[-1])
    return [field.mul(inv, x) for x in a]


def poly_gcd_raw(field, a, b):
    a = strip_raw(field, a)
    b = strip_raw(field, b)
    while b:
        a, b = b, poly_mod_raw(field, a, b)
    return poly_monic_raw(field, a)


def poly_egcd_raw(field, a, b):
    """Extended gcd: returns (d, u, v) with u*a + v*b = d, d monic."""
    r0, r1 = strip_raw(field, a), strip_raw(field, b)
    s0, s1 = [field.one], []
    t0, t1 = [], [field.one]
    while r1:
        q, r = poly_divmod_raw(field, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub_raw(field, s0, poly_mul_raw(field, q, s1))
        t0, t1 = t1, poly_sub_raw(field, t0, poly_mul_raw(field, q, t1))
    if not r0:
        return [], s0, t0
    lead_inv = field.inv(r0[-1])
    scale = lambda c: [field.mul(lead_inv, x) for x in c]
    return scale(r0), scale(s0), scale(t0)


def poly_powmod_raw(field, base, exp, mod):
    """base^exp reduced mod the polynomial ``mod``, by square and multiply."""
    result = [field.one]
    b = poly_mod_raw(field, base, mod)
    while exp:
        if exp & 1:
            result = poly_mod_raw(field, poly_mul_raw(field, result, b), mod)
        exp >>= 1
        if exp:
            b = poly_mod_raw(field, poly_mul_raw(field, b, b), mod)
    return result


def poly_is_irreducible(field, coeffs):
    """Exact irreducibility test for a polynomial over a field handle.

    Uses exhaustive trial division when the candidate-divisor space is
    small, and the Frobenius fixed-point criterion (x^(q^d) = x mod f,
    with proper divisors excluded) otherwise.
    """
    c = strip_raw(field, coeffs)
    deg = len(c) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    half = deg // 2
    if field.q ** half <= 4096:
        one = field.one
        for d in range(1, half + 1):
            for tail in itertools.product(field.element_list(), repeat=d):
                cand = list(tail) + [one]
                if strip_raw(field, cand) != cand:
                    continue
                if not poly_mod_raw(field, c, cand):
                    return False
        return True
    x = [field.zero, field.one]
    t = list(x)
    for _ in range(deg):
        t = poly_powmod_raw(field, t, field.q, c)
    if strip_raw(field, poly_sub_raw(field, t, x)):
        return False
    for r in factorint(deg):
        t = list(x)
        for _ in range(deg // r):
            t = poly_powmod_raw(field, t, field.q, c)
        g = poly_gcd_raw(field, poly_sub_raw(field, t, x), c)
        if len(g) > 1:
            return False
    return True


def _poly_self_reciprocal_raw(field, coeffs):
    """True when the monic polynomial equals its monic reciprocal."""
    c = strip_raw(field, coeffs)
    if not c or c[0] == field.zero:
        return False
    inv0 = field.inv(c[0])
    recip = [field.mul(inv0, x) for x in reversed(c)]
    return recip == c


# ---------------------------------------------------------------------------
# Field handles
# ---------------------------------------------------------------------------

class _Field:
    """Shared behaviour for all field handles."""

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if n < 0:
            a = self.inv(a)
            n = -n
        result = self.one
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            n >>= 1
            if n:
                base = self.mul(base, base)
        return result

    def conjugate(self, a):
        return a

    def element_list(self):
        """All field elements in the canonical counting order (cached)."""
        cached = getattr(self, "_element_list", None)
        if cached is None:
            if self.q > _EXTENSION_BOUND:
                raise BoundExceeded(f"cannot enumerate {self}: too large")
            cached = tuple(self.elements())
            self._element_list = cached
        return cached

    def random_element(self, rng):
        return rng.choice(self.element_list())

    def random_nonzero(self, rng):
        while True:
            a = self.random_element(rng)
            if a != self.zero:
                return a

    def generator(self):
        """Smallest multiplicative generator under the element ordering."""
        cached = getattr(self, "_generator", None)
        if cached is not None:
            return cached
        order = self.q - 1
        primes = list(factorint(order))
        for a in self.element_list():
            if a == self.zero:
                continue
            if all(self.pow(a, order // r) != self.one for r in primes):
                self._generator = a
                return a
        raise RuntimeError(f"no multiplicative generator found in {self}")


class FieldSpec(_Field):
    """A prime-power field F_{p^e}.

    Prime-field elements are ints in [0, p); extension elements are
    tuples of e ints (ascending power basis).  The modulus for e > 1 is
    the lexicographically smallest monic irreducible of degree e over
    F_p, compared from the constant term up, so all derived data is
    deterministic across runs.
    """

    def __init__(self, p, e, modulus):
        self.p = p
        self.e = e
        self.q = p ** e
        self.char = p
        self.modulus = modulus  # tuple of ints, len e+1, monic; None for e == 1
        if e == 1:
            self.zero = 0
            self.one = 1
        else:
            self.zero = (0,) * e
            self.one = (1,) + (0,) * (e - 1)
            self.subfield = make_field(p, 1)

    # -- arithmetic ---------------------------------------------------------

    def add(self, a, b):
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def neg(self, a):
        if self.e == 1:
            return (-a) % self.p
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a, b):
        if self.e == 1:
            return (a * b) % self.p
        p = self.p
        e = self.e
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        mod = self.modulus
        for k in range(2 * e - 2, e - 1, -1):
            c = prod[k] % p
            if c:
                for j in range(e):
                    prod[k - e + j] -= c * mod[j]
            prod[k] = 0
        return tuple(x % p for x in prod[:e])

    def inv(self, a):
        if a == self.zero:
            raise DivisionByZero(f"inverse of zero in {self}")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        sub = self.subfield
        d, u, _ = poly_egcd_raw(sub, strip_raw(sub, a), list(self.modulus))
        if d != [1]:
            raise DivisionByZero(f"non-invertible element {a} in {self}")
        u = u + [0] * (self.e - len(u))
        return tuple(u[: self.e])

    # -- structure ----------------------------------------------------------

    def elements(self):
        if self.e == 1:
            yield from range(self.p)
        else:
            for rev in itertools.product(range(self.p), repeat=self.e):
                yield tuple(reversed(rev))

    def sort_key(self, a):
        if self.e == 1:
            return (a,)
        return tuple(reversed(a))

    def coeffs_of(self, a):
        """Element as a list of F_p residues, ascending power basis."""
        if self.e == 1:
            return [a]
        return list(a)

    def element_from_coeffs(self, coeffs):
        coeffs = list(coeffs)
        if len(coeffs) != self.e:
            raise FieldMismatch(f"{self} expects {self.e} coefficients, got {len(coeffs)}")
        if any(not isinstance(c, int) or not 0 <= c < self.p for c in coeffs):
            raise FieldMismatch(f"coefficients out of range for {self}: {coeffs}")
        if self.e == 1:
            return coeffs[0]
        return tuple(coeffs)

    def from_int(self, n):
        """The image of the integer n under the unit map Z -> F_{p^e}."""
        r = n % self.p
        return r if self.e == 1 else (r,) + (0,) * (self.e - 1)

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.p == other.p
            and self.e == other.e
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash(("FieldSpec", self.p, self.e, self.modulus))

    def __repr__(self):
        return f"GF({self.q})"


_FIELD_CACHE = {}


def make_field(p, e=1, bound=DEFAULT_CARDINALITY_BOUND):
    """Construct (and cache) the field F_{p^e}.

    For e > 1 the modulus is the lexicographically smallest monic
    irreducible of degree e over F_p (constant term compared first).
    """
    key = (p, e)
    cached = _FIELD_CACHE.get(key)
    if cached is not None:
        if cached.q > bound:
            raise BoundExceeded(f"{p}^{e} exceeds the cardinality bound {bound}")
        return cached
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if not isinstance(e, int) or e < 1:
        raise BadParameters(f"extension degree must be >= 1, got {e}")
    if p ** e > bound:
        raise BoundExceeded(f"{p}^{e} exceeds the cardinality bound {bound}")
    modulus = None
    if e > 1:
        prime = make_field(p, 1)
        for low in itertools.product(range(p), repeat=e):
            cand = list(low) + [1]
            if poly_is_irreducible(prime, cand):
                modulus = tuple(cand)
                break
        assert modulus is not None
    field = FieldSpec(p, e, modulus)
    _FIELD_CACHE[key] = field
    return field


def field_from_q(q, bound=DEFAULT_CARDINALITY_BOUND):
    """Resolve a prime power q to the field F_q (unique (p, e))."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    fac = factorint(q)
    if len(fac) != 1:
        raise NotPrime(f"{q} is not a prime power")
    ((p, e),) = fac.items()
    return make_field(p, e, bound=bound)


class ConstituentField(_Field):
    """The quotient field base[Y]/(f) for an irreducible f over ``base``.

    Carries the conjugation nu: a -> a^(q^(d/2)) when f is
    self-reciprocal of even degree d, and the identity otherwise.
    Elements are tuples of d base-field elements.
    """

    def __init__(self, base, modulus):
        modulus = tuple(modulus)
        d = len(modulus) - 1
        if d < 1 or modulus[-1] != base.one:
            raise FieldMismatch("constituent modulus must be monic of degree >= 1")
        if base.q ** d > _EXTENSION_BOUND:
            raise BoundExceeded(
                f"extension of degree {d} over {base} exceeds the bound"
            )
        if not poly_is_irreducible(base, list(modulus)):
            raise FieldMismatch(f"modulus {modulus} is reducible over {base}")
        self.base = base
        self.modulus = modulus
        self.degree = d
        self.q = base.q ** d
        self.char = base.char
        self.zero = (base.zero,) * d
        self.one = (base.one,) + (base.zero,) * (d - 1)
        self.self_reciprocal = _poly_self_reciprocal_raw(base, list(modulus))
        if self.self_reciprocal and d % 2 == 0:
            self.conjugation_exponent = base.q ** (d // 2)
        else:
            self.conjugation_exponent = 1

    # -- arithmetic ---------------------------------------------------------

    def _pad(self, coeffs):
        return tuple(coeffs) + (self.base.zero,) * (self.degree - len(coeffs))

    def add(self, a, b):
        base = self.base
        return tuple(base.add(x, y) for x, y in zip(a, b))

    def neg(self, a):
        base = self.base
        return tuple(base.neg(x) for x in a)

    def mul(self, a, b):
        prod = poly_mul_raw(self.base, a, b)
        if len(prod) >= len(self.modulus):
            prod = poly_mod_raw(self.base, prod, list(self.modulus))
        return self._pad(prod)

    def inv(self, a):
        if a == self.zero:
            raise DivisionByZero(f"inverse of zero in {self}")
        d, u, _ = poly_egcd_raw(self.base, strip_raw(self.base, a), list(self.modulus))
        if d != [self.base.one]:
            raise DivisionByZero(f"non-invertible element {a} in {self}")
        return self._pad(u)

    def conjugate(self, a):
        if self.conjugation_exponent == 1:
            return a
        return self.pow(a, self.conjugation_exponent)

    # -- structure ----------------------------------------------------------

    def elements(self):
        base_sorted = sorted(self.base.element_list(), key=self.base.sort_key)
        for rev in itertools.product(base_sorted, repeat=self.degree):
            yield tuple(reversed(rev))

    def sort_key(self, a):
        base = self.base
        return tuple(base.sort_key(x) for x in reversed(a))

    def embed(self, b):
        """Embed a base-field element."""
        return (b,) + (self.base.zero,) * (self.degree - 1)

    def from_base_coeffs(self, coeffs):
        """Element from a base-coefficient vector, reduced mod the modulus."""
        c = strip_raw(self.base, coeffs)
        if len(c) >= len(self.modulus):
            c = poly_mod_raw(self.base, c, list(self.modulus))
        return self._pad(c)

    @property
    def y_class(self):
        """The class of Y in base[Y]/(f)."""
        if self.degree > 1:
            return self._pad((self.base.zero, self.base.one))
        return (self.base.neg(self.modulus[0]),)

    def y_inverse(self):
        cached = getattr(self, "_y_inverse", None)
        if cached is None:
            cached = self.inv(self.y_class)
            self._y_inverse = cached
        return cached

    def eval_base_poly(self, coeffs, point):
        """Evaluate a base-coefficient polynomial at a field element (Horner)."""
        acc = self.zero
        for c in reversed(list(coeffs)):
            acc = self.add(self.mul(acc, point), self.embed(c))
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, ConstituentField)
            and self.base == other.base
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash(("ConstituentField", self.base, self.modulus))

    def __repr__(self):
        return f"GF({self.q})[{self.base}/deg{self.degree}]"


_CONSTITUENT_CACHE = {}


def constituent_field(base, modulus_coeffs):
    """Construct (and cache) base[Y]/(f) for a monic irreducible f."""
    key = (base, tuple(modulus_coeffs))
    field = _CONSTITUENT_CACHE.get(key)
    if field is None:
        field = ConstituentField(base, tuple(modulus_coeffs))
        _CONSTITUENT_CACHE[key] = field
    return field


def multiplicative_order(q, n):
    """The order of q in (Z/n)*; requires gcd(q, n) = 1."""
    k = 1
    t = q % n
    while t != 1:
        t = (t * q) % n
        k += 1
        if k > n:
            raise ValueError(f"{q} has no order mod {n}")
    return k


_EXTENSION_OF_CACHE = {}


def extension_of(field, k):
    """A degree-k extension of ``field`` with a deterministic modulus.

    Returns ``field`` itself for k = 1; otherwise the constituent field
    with the lexicographically smallest monic irreducible of degree k.
    """
    if k == 1:
        return field
    key = (field, k)
    ext = _EXTENSION_OF_CACHE.get(key)
    if ext is not None:
        return ext
    if field.q ** k > _EXTENSION_BOUND:
        raise BoundExceeded(f"degree-{k} extension of {field} exceeds the bound")
    base_sorted = sorted(field.element_list(), key=field.sort_key)
    for low in itertools.product(base_sorted, repeat=k):
        cand = list(low) + [field.one]
        if poly_is_irreducible(field, cand):
            ext = constituent_field(field, tuple(cand))
            break
    else:
        raise RuntimeError(f"no irreducible of degree {k} over {field}")
    _EXTENSION_OF_CACHE[key] = ext
    return ext


def embedder(base, ext):
    """A function embedding ``base`` elements into ``ext``.

    ``ext`` is either ``base`` itself or a ConstituentField over it.
    """
    if ext is base or ext == base:
        return lambda a: a
    if isinstance(ext, ConstituentField) and ext.base == base:
        return ext.embed
    raise FieldMismatch(f"{ext} is not an extension of {base}")


def find_sqrt_minus_one(field):
    """Some gamma with gamma^2 + 1 = 0, by exhaustive enumeration.

    Returns 1 in characteristic 2; None when no such element exists.
    """
    if field.char == 2:
        return field.one
    minus_one = field.neg(field.one)
    for a in field.element_list():
        if field.mul(a, a) == minus_one:
            return a
    return None
