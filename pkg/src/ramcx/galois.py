"""Exact arithmetic in F_q and its extensions F_{q^n}.

Fields come in two layers, mirroring how the construction uses them:

* ``FieldSpec`` is F_q = F_p[w]/(modulus), a single extension of the prime
  field.  Element coefficients are plain ints in {0, ..., p-1}, lowest
  degree first.
* ``ExtSpec`` is F_{q^n} = F_q[a]/(modulus), an extension whose element
  coefficients are ``FieldElement`` values *over F_q*.  The tower is kept
  (rather than flattened to F_p) because the regular representation and the
  norm form downstream must be read off in F_q-coordinates.

All search loops (irreducible moduli, normal bases, twisting elements)
enumerate candidates by ascending integer encoding sum(enc(c_i) * q^i) with
the constant coefficient least significant, so every "first such element"
is reproducible.

Values are immutable and hashable; every operation is a pure function.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

from .errors import SpecMismatch, ZeroInverse


# ---------------------------------------------------------------------------
# int-coefficient polynomial helpers over F_p (used inside FieldElement)

def _iptrim(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return c[:n]


def _ipmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _iptrim(out)


def _ipdivmod(a, b, p):
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    inv_lead = pow(b[db], p - 2, p)
    q = [0] * max(da - db + 1, 0)
    while da >= db:
        if a[da]:
            f = (a[da] * inv_lead) % p
            q[da - db] = f
            for i in range(db + 1):
                a[da - db + i] = (a[da - db + i] - f * b[i]) % p
        da -= 1
    return _iptrim(q), _iptrim(a)


def _ipinv(a, mod, p):
    """Inverse of a modulo mod over F_p, via the extended Euclid algorithm."""
    r0, r1 = list(mod), _iptrim(list(a))
    t0, t1 = [], [1]
    while r1:
        q, r = _ipdivmod(r0, r1, p)
        r0, r1 = r1, r
        t0, t1 = t1, _iptrim([(x - y) % p for x, y in
                              zip(_ipmul(q, t1, p) + [0] * len(t0),
                                  t0 + [0] * len(_ipmul(q, t1, p)))])
    # r0 = gcd, a unit (constant) when a is invertible mod mod
    if len(r0) != 1:
        raise ZeroInverse("element is not invertible")
    c = pow(r0[0], p - 2, p)
    return _iptrim([(x * c) % p for x in t0])


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for sp in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % sp == 0:
            return n == sp
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (inputs here stay small)."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class FieldSpec:
    """F_q = F_p[w]/(modulus), q = p^m.

    ``modulus`` is a monic irreducible tuple of ints over F_p, length m+1,
    lowest degree first.  For m = 1 the modulus is w itself and elements
    are just residues mod p.
    """

    __slots__ = ("p", "m", "modulus", "order", "_wpows")

    def __init__(self, p: int, m: int = 1, modulus: tuple[int, ...] | None = None):
        if not _is_probable_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        if modulus is None:
            if m == 1:
                modulus = (0, 1)
            else:
                modulus = _first_irreducible_int(p, m)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != m + 1 or modulus[m] != 1:
            raise ValueError("modulus must be monic of degree m")
        if m > 1 and not _int_poly_irreducible(modulus, p):
            raise ValueError("modulus is not irreducible over F_p")
        self.p = p
        self.m = m
        self.modulus = modulus
        self.order = p ** m
        # reduced powers w^m .. w^(2m-2), used to fold products back below degree m
        wpows = []
        cur = [(-modulus[i]) % p for i in range(m)]  # w^m
        for _ in range(max(m - 1, 0)):
            wpows.append(tuple(cur))
            cur = [0] + cur
            top = cur[m]
            cur = [(cur[i] - top * modulus[i]) % p for i in range(m)]
        self._wpows = tuple(wpows)

    def __eq__(self, other):
        return (isinstance(other, FieldSpec) and self.p == other.p
                and self.m == other.m and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"FieldSpec(p={self.p}, m={self.m})"

    # -- element construction ------------------------------------------------

    def element(self, coeffs) -> "FieldElement":
        if isinstance(coeffs, FieldElement):
            if coeffs.spec != self:
                raise SpecMismatch("element belongs to a different field")
            return coeffs
        if isinstance(coeffs, int):
            c = [coeffs % self.p] + [0] * (self.m - 1)
            return FieldElement(self, tuple(c))
        c = [int(x) % self.p for x in coeffs]
        if len(c) > self.m:
            raise ValueError("too many coefficients")
        c += [0] * (self.m - len(c))
        return FieldElement(self, tuple(c))

    def zero(self) -> "FieldElement":
        return self.element(0)

    def one(self) -> "FieldElement":
        return self.element(1)

    def from_index(self, i: int) -> "FieldElement":
        coeffs = []
        for _ in range(self.m):
            coeffs.append(i % self.p)
            i //= self.p
        return FieldElement(self, tuple(coeffs))

    def elements(self):
        """All field elements, ordered by integer encoding."""
        for i in range(self.order):
            yield self.from_index(i)

    def char(self) -> int:
        return self.p


class FieldElement:
    """Element of a ``FieldSpec`` field, stored as an int coefficient tuple."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs: tuple[int, ...]):
        self.spec = spec
        self.coeffs = coeffs

    # -- plumbing --------------------------------------------------------

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise SpecMismatch("mixed field specs")
            return other
        if isinstance(other, int):
            return self.spec.element(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.spec.element(other)
        return (isinstance(other, FieldElement) and self.spec == other.spec
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.coeffs, self.spec.order))

    def __repr__(self):
        return f"FieldElement{self.coeffs}"

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def index(self) -> int:
        enc = 0
        for c in reversed(self.coeffs):
            enc = enc * self.spec.p + c
        return enc

    def to_json(self):
        if self.spec.m == 1:
            return self.coeffs[0]
        return list(self.coeffs)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.spec.p
        return FieldElement(self.spec, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.spec.p
        return FieldElement(self.spec, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.spec.p
        return FieldElement(self.spec, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return self.spec.element(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        spec = self.spec
        p, m = spec.p, spec.m
        if m == 1:
            return FieldElement(spec, ((self.coeffs[0] * other.coeffs[0]) % p,))
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(self.coeffs):
            if ai:
                for j, bj in enumerate(other.coeffs):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        out = list(prod[:m])
        for k in range(m, 2 * m - 1):
            c = prod[k]
            if c:
                w = spec._wpows[k - m]
                for i in range(m):
                    out[i] = (out[i] + c * w[i]) % p
        return FieldElement(spec, tuple(out))

    __rmul__ = __mul__

    def inv(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroInverse("inverse of zero")
        spec = self.spec
        if spec.m == 1:
            return FieldElement(spec, (pow(self.coeffs[0], spec.p - 2, spec.p),))
        c = _ipinv(list(self.coeffs), list(spec.modulus), spec.p)
        c = list(c) + [0] * (spec.m - len(c))
        return FieldElement(spec, tuple(c))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.spec.element(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        result = self.spec.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result


# ---------------------------------------------------------------------------

class ExtSpec:
    """F_{q^n} = F_q[a]/(modulus), with a distinguished Frobenius generator.

    ``modulus`` is a monic irreducible tuple of ``FieldElement`` over the
    base F_q, length n+1.  The Frobenius used throughout is
    phi: a -> a^(q^ell) with gcd(ell, n) = 1 (ell defaults to 1).
    """

    __slots__ = ("base", "n", "modulus", "ell", "order", "_apows")

    def __init__(self, base: FieldSpec, n: int, modulus=None, ell: int = 1):
        if n < 1:
            raise ValueError("extension degree must be >= 1")
        if gcd(ell, n) != 1:
            raise ValueError(f"ell = {ell} is not prime to n = {n}")
        if modulus is None:
            modulus = tuple(find_irreducible(base, n).coeffs)  # type: ignore[attr-defined]
        modulus = tuple(base.element(c) for c in modulus)
        if len(modulus) != n + 1 or modulus[n] != base.one():
            raise ValueError("modulus must be monic of degree n")
        self.base = base
        self.n = n
        self.modulus = modulus
        self.ell = ell % n if n > 1 else 0
        self.order = base.order ** n
        apows = []
        cur = [-modulus[i] for i in range(n)]
        for _ in range(max(n - 1, 0)):
            apows.append(tuple(cur))
            cur = [base.zero()] + cur
            top = cur[n]
            cur = [cur[i] - top * modulus[i] for i in range(n)]
        self._apows = tuple(apows)

    def __eq__(self, other):
        return (isinstance(other, ExtSpec) and self.base == other.base
                and self.n == other.n and self.modulus == other.modulus
                and self.ell == other.ell)

    def __hash__(self):
        return hash((self.base, self.n, self.modulus, self.ell))

    def __repr__(self):
        return f"ExtSpec(q={self.base.order}, n={self.n}, ell={self.ell})"

    # -- element construction ------------------------------------------------

    def element(self, coeffs) -> "ExtFieldElement":
        if isinstance(coeffs, ExtFieldElement):
            if coeffs.spec != self:
                raise SpecMismatch("element belongs to a different extension")
            return coeffs
        if isinstance(coeffs, (int, FieldElement)):
            c = [self.base.element(coeffs)] + [self.base.zero()] * (self.n - 1)
            return ExtFieldElement(self, tuple(c))
        c = [self.base.element(x) for x in coeffs]
        if len(c) > self.n:
            raise ValueError("too many coefficients")
        c += [self.base.zero()] * (self.n - len(c))
        return ExtFieldElement(self, tuple(c))

    def zero(self) -> "ExtFieldElement":
        return self.element(0)

    def one(self) -> "ExtFieldElement":
        return self.element(1)

    def gen(self) -> "ExtFieldElement":
        """The residue class of the adjoined variable."""
        if self.n == 1:
            return self.element(-self.modulus[0])
        return self.element([0, 1])

    def embed(self, c) -> "ExtFieldElement":
        """Embed an F_q element (or int) as a constant."""
        return self.element(self.base.element(c))

    def from_index(self, i: int) -> "ExtFieldElement":
        q = self.base.order
        coeffs = []
        for _ in range(self.n):
            coeffs.append(self.base.from_index(i % q))
            i //= q
        return ExtFieldElement(self, tuple(coeffs))

    def elements(self):
        for i in range(self.order):
            yield self.from_index(i)

    def char(self) -> int:
        return self.base.p


class ExtFieldElement:
    """Element of an ``ExtSpec`` extension; coefficients live in the base field."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: ExtSpec, coeffs):
        self.spec = spec
        self.coeffs = tuple(coeffs)

    def _coerce(self, other) -> "ExtFieldElement":
        if isinstance(other, ExtFieldElement):
            if other.spec != self.spec:
                raise SpecMismatch("mixed extension specs")
            return other
        if isinstance(other, (int, FieldElement)):
            return self.spec.element(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, FieldElement)):
            other = self.spec.element(other)
        return (isinstance(other, ExtFieldElement) and self.spec == other.spec
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.coeffs, self.spec.order, self.spec.n))

    def __repr__(self):
        return f"ExtFieldElement{tuple(c.coeffs for c in self.coeffs)}"

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def index(self) -> int:
        q = self.spec.base.order
        enc = 0
        for c in reversed(self.coeffs):
            enc = enc * q + c.index()
        return enc

    def to_json(self):
        return [c.to_json() for c in self.coeffs]

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ExtFieldElement(self.spec, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return ExtFieldElement(self.spec, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ExtFieldElement(self.spec, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return self.spec.element(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        spec = self.spec
        n = spec.n
        zero = spec.base.zero()
        if n == 1:
            return ExtFieldElement(spec, (self.coeffs[0] * other.coeffs[0],))
        prod = [zero] * (2 * n - 1)
        for i, ai in enumerate(self.coeffs):
            if not ai.is_zero():
                for j, bj in enumerate(other.coeffs):
                    prod[i + j] = prod[i + j] + ai * bj
        out = list(prod[:n])
        for k in range(n, 2 * n - 1):
            c = prod[k]
            if not c.is_zero():
                w = spec._apows[k - n]
                for i in range(n):
                    out[i] = out[i] + c * w[i]
        return ExtFieldElement(spec, tuple(out))

    __rmul__ = __mul__

    def inv(self) -> "ExtFieldElement":
        if self.is_zero():
            raise ZeroInverse("inverse of zero")
        spec = self.spec
        if spec.n == 1:
            return ExtFieldElement(spec, (self.coeffs[0].inv(),))
        # extended Euclid over F_q[a]
        r0 = list(spec.modulus)
        r1 = list(self.coeffs)
        while r1 and r1[-1].is_zero():
            r1.pop()
        zero, one = spec.base.zero(), spec.base.one()
        t0: list[FieldElement] = []
        t1: list[FieldElement] = [one]

        def trim(v):
            while v and v[-1].is_zero():
                v.pop()
            return v

        def sub(a, b):
            la, lb = len(a), len(b)
            return trim([(a[i] if i < la else zero) - (b[i] if i < lb else zero)
                         for i in range(max(la, lb))])

        def mul(a, b):
            if not a or not b:
                return []
            out = [zero] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if not ai.is_zero():
                    for j, bj in enumerate(b):
                        out[i + j] = out[i + j] + ai * bj
            return trim(out)

        def pdivmod(a, b):
            a = list(a)
            db = len(b) - 1
            inv_lead = b[db].inv()
            qout: list[FieldElement] = [zero] * max(len(a) - db, 0)
            da = len(a) - 1
            while da >= db:
                if not a[da].is_zero():
                    f = a[da] * inv_lead
                    qout[da - db] = f
                    for i in range(db + 1):
                        a[da - db + i] = a[da - db + i] - f * b[i]
                da -= 1
            return trim(qout), trim(a)

        while r1:
            qq, rr = pdivmod(r0, r1)
            r0, r1 = r1, rr
            t0, t1 = t1, sub(t0, mul(qq, t1))
        if len(r0) != 1:
            raise ZeroInverse("element is not invertible")
        c = r0[0].inv()
        out = [x * c for x in t0]
        out += [zero] * (spec.n - len(out))
        return ExtFieldElement(spec, tuple(out[:spec.n]))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.spec.element(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        result = self.spec.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- Galois structure -------------------------------------------------

    def frobenius(self, i: int = 1) -> "ExtFieldElement":
        """Apply phi^i, where phi is exponentiation by q^ell."""
        spec = self.spec
        q, n = spec.base.order, spec.n
        if self.is_zero():
            return self
        modulus_order = q ** n - 1
        if modulus_order == 1:
            return self
        e = pow(q, (spec.ell * i) % n if n > 1 else 0, modulus_order)
        return self ** e

    def trace(self) -> FieldElement:
        spec = self.spec
        acc = spec.zero()
        cur = self
        for _ in range(spec.n):
            acc = acc + cur
            cur = cur.frobenius()
        return _as_base(acc)

    def norm(self) -> FieldElement:
        spec = self.spec
        acc = spec.one()
        cur = self
        for _ in range(spec.n):
            acc = acc * cur
            cur = cur.frobenius()
        return _as_base(acc)

    def min_poly(self):
        """Monic minimal polynomial over the base field (lowest degree first).

        Found by Gaussian elimination on the coordinate vectors of the
        successive powers 1, a, a^2, ...
        """
        from .polyring import Poly

        spec = self.spec
        base = spec.base
        rows: list[list[FieldElement]] = []
        power = spec.one()
        for k in range(spec.n + 1):
            rows.append(list(power.coeffs))
            combo = _dependency(rows, base)
            if combo is not None:
                return Poly(base, combo)
            power = power * self
        raise AssertionError("unreachable: degree-n dependency always exists")

    def is_field_generator(self, e: int | None = None) -> bool:
        """True iff F_q(self) is the whole degree-e extension.

        Tested by a^(q^(e/P)) != a for every prime P dividing e.
        """
        spec = self.spec
        if e is None:
            e = spec.n
        if e != spec.n:
            raise ValueError("element does not live in a degree-e extension")
        if e == 1:
            return True
        q = spec.base.order
        for prime in factorize(e):
            ep = e // prime
            if self ** (q ** ep) == self:
                return False
        return True


def _as_base(a: ExtFieldElement) -> FieldElement:
    """Coerce an extension element that lies in F_q down to a ``FieldElement``."""
    if any(not c.is_zero() for c in a.coeffs[1:]):
        raise ValueError("element does not lie in the base field")
    return a.coeffs[0]


def _dependency(rows, base: FieldSpec):
    """If the last row depends on the previous ones, return the monic combo.

    Rows are coordinate vectors over ``base``.  Returns coefficients
    (c_0, ..., c_{k-1}, 1) with sum(c_j * rows[j]) + rows[k] = 0, or None.
    """
    k = len(rows) - 1
    if k == 0:
        return (base.one(),) if all(c.is_zero() for c in rows[0]) else None
    ncols = len(rows[0])
    # solve sum_j x_j rows[j] = -rows[k]
    aug = [[rows[j][col] for j in range(k)] + [-rows[k][col]] for col in range(ncols)]
    sol = solve_linear(aug, base)
    if sol is None:
        return None
    return tuple(sol) + (base.one(),)


def solve_linear(aug, field):
    """Solve the augmented system [A | b] over a field; None if inconsistent.

    ``aug`` is a list of rows, each ``n+1`` entries.  Free variables are set
    to zero.  Works for any coefficient type with field operations.
    """
    rows = [list(r) for r in aug]
    nrows = len(rows)
    ncols = len(rows[0]) - 1 if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if not rows[i][c].is_zero()), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inv()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if not rows[i][ncols].is_zero():
            return None
    sol = [field.zero()] * ncols
    for i, c in enumerate(pivots):
        sol[c] = rows[i][ncols]
    return sol


def matrix_rank(rows) -> int:
    """Rank of a matrix over a field (rows of field elements)."""
    rows = [list(r) for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    rank = 0
    for c in range(ncols):
        pivot = next((i for i in range(rank, nrows) if not rows[i][c].is_zero()), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][c].inv()
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(nrows):
            if i != rank and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


# ---------------------------------------------------------------------------
# irreducibility and searches

def _int_poly_powmod_q(r, f, q_exp_base, p):
    """r^(p^k)-free helper: raise r to the q-th power mod f over F_p by squaring."""
    out = [1]
    base = list(r)
    e = q_exp_base
    while e:
        if e & 1:
            out = _ipdivmod(_ipmul(out, base, p), f, p)[1]
        base = _ipdivmod(_ipmul(base, base, p), f, p)[1]
        e >>= 1
    return out


def _int_poly_gcd(a, b, p):
    a, b = _iptrim(list(a)), _iptrim(list(b))
    while b:
        a, b = b, _ipdivmod(a, b, p)[1]
    return a


def _int_poly_irreducible(f, p) -> bool:
    n = len(f) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    x = [0, 1]
    r = list(x)
    for i in range(1, n // 2 + 1):
        r = _int_poly_powmod_q(r, f, p, p)
        diff = _iptrim([(a - b) % p for a, b in zip(r + [0, 0], x + [0] * len(r))])
        if len(_int_poly_gcd(diff, f, p)) != 1:
            return False
    for i in range(n // 2 + 1, n + 1):
        r = _int_poly_powmod_q(r, f, p, p)
    # f | x^(p^n) - x, i.e. x^(p^n) == x mod f (r is already reduced)
    diff = _iptrim([(a - b) % p for a, b in zip(r + [0, 0], x + [0] * len(r))])
    return not diff


@lru_cache(maxsize=None)
def _first_irreducible_int(p: int, n: int) -> tuple[int, ...]:
    """First monic irreducible of degree n over F_p, by ascending encoding."""
    for enc in range(p ** n):
        coeffs = []
        i = enc
        for _ in range(n):
            coeffs.append(i % p)
            i //= p
        f = coeffs + [1]
        if _int_poly_irreducible(f, p):
            return tuple(f)
    raise AssertionError("unreachable: irreducibles exist in every degree")


def find_irreducible(field, n: int):
    """First monic irreducible of degree n over ``field``, by ascending encoding.

    Irreducibility is decided by gcd(x^(q^i) - x, f) = 1 for i <= n/2
    together with f | x^(q^n) - x.
    """
    from .polyring import Poly

    if n < 1:
        raise ValueError("degree must be >= 1")
    if n == 1:
        return Poly(field, [field.zero(), field.one()])
    q = field.order
    for enc in range(q ** n):
        coeffs = []
        i = enc
        for _ in range(n):
            coeffs.append(field.from_index(i % q))
            i //= q
        f = Poly(field, coeffs + [field.one()])
        if _poly_irreducible(f, q):
            return f
    raise AssertionError("unreachable")


def _poly_irreducible(f, q: int) -> bool:
    from .polyring import Poly

    field = f.field
    n = f.degree()
    x = Poly(field, [field.zero(), field.one()])
    r = x
    ok = True
    for i in range(1, n // 2 + 1):
        r = r.pow_mod(q, f)
        if (r - x).gcd(f).degree() != 0:
            ok = False
            break
    if not ok:
        return False
    for i in range(n // 2 + 1, n + 1):
        r = r.pow_mod(q, f)
    return (r - x) % f == Poly(field, [])


def normal_basis(ext: ExtSpec) -> ExtFieldElement:
    """First element (by encoding) whose Frobenius conjugates form a basis."""
    d = ext.n
    for cand in ext.elements():
        if cand.is_zero():
            continue
        rows = []
        cur = cand
        for _ in range(d):
            rows.append(list(cur.coeffs))
            cur = cur.frobenius()
        if matrix_rank(rows) == d:
            return cand
    raise AssertionError("unreachable: a normal basis always exists")
