"""Exact arithmetic in cyclotomic fields Q(zeta_n) with rational coefficients.

Elements are stored as polynomials in zeta_n reduced mod the n-th cyclotomic
polynomial, so the stored coefficient vector (length phi(n)) is canonical for
a fixed conductor n.  Reduction to the minimal conductor is done lazily, only
for display, hashing and cross-conductor equality.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm


@lru_cache(maxsize=None)
def divisors(n):
    return tuple(d for d in range(1, n + 1) if n % d == 0)


@lru_cache(maxsize=None)
def phi(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """Integer coefficients of Phi_n, ascending, monic."""
    # Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, exact division over Z
    f = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        g = cyclotomic_poly(d)
        q = [0] * (len(f) - len(g) + 1)
        r = list(f)
        for i in range(len(q) - 1, -1, -1):
            c = r[i + len(g) - 1]
            q[i] = c
            if c:
                for j, gj in enumerate(g):
                    r[i + j] -= c * gj
        assert all(c == 0 for c in r[: len(g) - 1])
        f = q
    return tuple(f)


def _reduce_mod_phi(coeffs, n):
    """Remainder of a Fraction coefficient list mod Phi_n, padded to phi(n)."""
    g = cyclotomic_poly(n)
    deg = len(g) - 1
    r = [Fraction(c) for c in coeffs]
    for i in range(len(r) - 1, deg - 1, -1):
        c = r[i]
        if c:
            for j in range(deg + 1):
                r[i - deg + j] -= c * g[j]
    r = r[:deg]
    r += [Fraction(0)] * (deg - len(r))
    return tuple(r)


class Cyclotomic:
    """An element of Q(zeta_n), immutable and exact."""

    __slots__ = ("n", "coeffs", "_reduced")

    def __init__(self, n, coeffs):
        if n < 1:
            raise ValueError("conductor must be positive")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", _reduce_mod_phi(coeffs, n))
        object.__setattr__(self, "_reduced", None)

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic is immutable")

    # -- constructors -----------------------------------------------------

    @staticmethod
    def rational(x):
        return Cyclotomic(1, [Fraction(x)])

    @staticmethod
    def zeta(n, k=1):
        k %= n
        if n == 1:
            return Cyclotomic(1, [Fraction(1)])
        c = [Fraction(0)] * (k + 1)
        c[k] = Fraction(1)
        return Cyclotomic(n, c)

    # -- helpers ----------------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic.rational(x)
        return None

    def _embed_coeffs(self, m):
        """Coefficient list of self viewed in Q(zeta_m); requires n | m."""
        step = m // self.n
        out = [Fraction(0)] * m
        for i, c in enumerate(self.coeffs):
            if c:
                out[i * step] += c
        return out

    def _common(self, other):
        m = lcm(self.n, other.n)
        return self._embed_coeffs(m), other._embed_coeffs(m), m

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b, m = self._common(other)
        return Cyclotomic(m, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.n, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.n == 1:
            k = other.coeffs[0]
            return Cyclotomic(self.n, [c * k for c in self.coeffs])
        if self.n == 1:
            k = self.coeffs[0]
            return Cyclotomic(other.n, [c * k for c in other.coeffs])
        a, b, m = self._common(other)
        prod = [Fraction(0)] * (2 * m)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        # fold exponents >= m back using zeta_m^m = 1 before Phi reduction
        for i in range(m, 2 * m):
            if prod[i]:
                prod[i - m] += prod[i]
        return Cyclotomic(m, prod[:m])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return Cyclotomic(self.n, [c / other for c in self.coeffs])
        if isinstance(other, Cyclotomic) and other.is_rational():
            return self / other.as_fraction()
        return NotImplemented

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers not supported")
        out = Cyclotomic.rational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- Galois action ----------------------------------------------------

    def galois(self, k):
        """Apply zeta_n -> zeta_n^k; k must be coprime to the conductor."""
        if gcd(k, self.n) != 1:
            raise ValueError("galois exponent must be coprime to conductor")
        out = [Fraction(0)] * self.n
        for i, c in enumerate(self.coeffs):
            if c:
                out[(i * k) % self.n] += c
        return Cyclotomic(self.n, out)

    def conjugate(self):
        if self.n == 1:
            return self
        return self.galois(self.n - 1)

    # -- predicates and minimal form --------------------------------------

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_rational(self):
        return self.reduced().n == 1

    def is_integer(self):
        r = self.reduced()
        return r.n == 1 and r.coeffs[0].denominator == 1

    def as_fraction(self):
        r = self.reduced()
        if r.n != 1:
            raise ValueError("not a rational cyclotomic")
        return r.coeffs[0]

    def as_int(self):
        f = self.as_fraction()
        if f.denominator != 1:
            raise ValueError("not an integer cyclotomic")
        return f.numerator

    def reduced(self):
        """Equal element written over its minimal conductor (cached)."""
        if self._reduced is not None:
            return self._reduced
        out = self
        for d in divisors(self.n):
            if d == self.n:
                break
            down = self._try_descend(d)
            if down is not None:
                out = down
                break
        object.__setattr__(out, "_reduced", out)
        object.__setattr__(self, "_reduced", out)
        return out

    def _try_descend(self, d):
        """Rewrite over Q(zeta_d) if self lies in that subfield, else None."""
        n = self.n
        fixers = [k for k in range(1, n) if k % d == 1 % d and gcd(k, n) == 1]
        for k in fixers:
            if self.galois(k).coeffs != self.coeffs:
                return None
        # solve for coordinates in the embedded power basis of Q(zeta_d)
        deg = phi(d)
        basis = [Cyclotomic.zeta(n, (n // d) * j).coeffs for j in range(deg)]
        rows = [[basis[j][i] for j in range(deg)] + [self.coeffs[i]] for i in range(len(self.coeffs))]
        sol = _solve_rational(rows, deg)
        if sol is None:
            raise ArithmeticError("subfield descent failed despite invariance")
        return Cyclotomic(d, sol)

    # -- comparison, hashing, display -------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.n == other.n:
            return self.coeffs == other.coeffs
        a, b, m = self._common(other)
        return _reduce_mod_phi(a, m) == _reduce_mod_phi(b, m)

    def __hash__(self):
        r = self.reduced()
        if r.n == 1:
            return hash(r.coeffs[0])
        return hash((r.n, r.coeffs))

    def sort_key(self):
        r = self.reduced()
        return (r.n, tuple((c.numerator, c.denominator) for c in r.coeffs))

    def __str__(self):
        r = self.reduced()
        if r.n == 1:
            return str(r.coeffs[0])
        terms = []
        for i in range(len(r.coeffs) - 1, -1, -1):
            c = r.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                mono = str(abs(c))
            else:
                z = f"z{r.n}" if i == 1 else f"z{r.n}^{i}"
                mono = z if abs(c) == 1 else f"{abs(c)}*{z}"
            if not terms:
                terms.append(mono if c > 0 else f"-{mono}")
            else:
                terms.append(f"+ {mono}" if c > 0 else f"- {mono}")
        return " ".join(terms) if terms else "0"

    def __repr__(self):
        return f"Cyclotomic({self})"

    # -- serialization -----------------------------------------------------

    def to_json(self):
        r = self.reduced()
        return {"conductor": r.n, "coeffs": [str(c) for c in r.coeffs]}

    @staticmethod
    def from_json(obj):
        return Cyclotomic(obj["conductor"], [Fraction(s) for s in obj["coeffs"]])


def _solve_rational(rows, ncols):
    """Solve the overdetermined augmented system exactly; None if inconsistent."""
    rows = [list(r) for r in rows]
    m = len(rows)
    piv = []
    r0 = 0
    for c in range(ncols):
        pr = next((r for r in range(r0, m) if rows[r][c] != 0), None)
        if pr is None:
            continue
        rows[r0], rows[pr] = rows[pr], rows[r0]
        inv = rows[r0][c]
        rows[r0] = [v / inv for v in rows[r0]]
        for r in range(m):
            if r != r0 and rows[r][c] != 0:
                f = rows[r][c]
                rows[r] = [v - f * w for v, w in zip(rows[r], rows[r0])]
        piv.append(c)
        r0 += 1
    for r in range(r0, m):
        if rows[r][ncols] != 0:
            return None
    sol = [Fraction(0)] * ncols
    for r, c in enumerate(piv):
        sol[c] = rows[r][ncols]
    return sol
