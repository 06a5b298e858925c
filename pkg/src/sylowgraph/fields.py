"""Small finite fields GF(r^t) with table arithmetic.

Elements are the integers ``0 .. q-1``; the base-``r`` digits of an element
are the coefficients of a polynomial in the generator ``x`` (lowest degree
first).  The modulus is chosen primitive, so ``x`` generates the
multiplicative group and log/antilog tables do all the work.
"""

from itertools import product

from .arith import is_prime_power

__all__ = ["FiniteField"]

MAX_FIELD = 1 << 16


def _poly_mulmod(a, b, mod, r):
    # a, b: coefficient lists of length t; mod: monic of degree t (length t+1)
    t = len(mod) - 1
    out = [0] * (2 * t - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % r
    for k in range(len(out) - 1, t - 1, -1):
        c = out[k]
        if c:
            for j in range(t + 1):
                out[k - t + j] = (out[k - t + j] - c * mod[j]) % r
    return out[:t]


class FiniteField:
    """GF(q) for a prime power ``q``."""

    def __init__(self, q):
        pp = is_prime_power(q)
        if pp is None:
            raise ValueError(f"{q} is not a prime power")
        if q > MAX_FIELD:
            raise ValueError(f"field of order {q} is too large (limit {MAX_FIELD})")
        self.q = q
        self.r, self.t = pp
        self.modulus = self._primitive_modulus()
        self._build_tables()

    def _encode(self, coeffs):
        v = 0
        for c in reversed(coeffs):
            v = v * self.r + c
        return v

    def _decode(self, v):
        out = []
        for _ in range(self.t):
            v, c = divmod(v, self.r)
            out.append(c)
        return out

    def _primitive_modulus(self):
        r, t, q = self.r, self.t, self.q
        if t == 1:
            # x - g for a primitive root g
            for g in range(1, r):
                if r == 2 or self._prime_order(g) == r - 1:
                    return [(-g) % r, 1]
        for low in product(range(r), repeat=t):
            if low[0] == 0:
                continue
            mod = list(low) + [1]
            # x is primitive iff its powers run through all q - 1 units
            x = [0] * t
            x[1 % t] = 1
            cur = [1] + [0] * (t - 1)
            seen = 0
            for _ in range(q - 1):
                cur = _poly_mulmod(cur, x, mod, r)
                seen += 1
                if cur == [1] + [0] * (t - 1):
                    break
            if seen == q - 1:
                return mod
        raise AssertionError("no primitive polynomial found")

    def _prime_order(self, g):
        k, x = 1, g
        while x != 1:
            x = x * g % self.r
            k += 1
        return k

    def _build_tables(self):
        q, r, t = self.q, self.r, self.t
        exp = [0] * (2 * (q - 1))
        log = [None] * q
        if t == 1:
            g = (-self.modulus[0]) % r
            v = 1
            for k in range(q - 1):
                exp[k] = v
                log[v] = k
                v = v * g % r
        else:
            x = [0] * t
            x[1] = 1
            cur = [1] + [0] * (t - 1)
            for k in range(q - 1):
                v = self._encode(cur)
                exp[k] = v
                log[v] = k
                cur = _poly_mulmod(cur, x, self.modulus, r)
        for k in range(q - 1, 2 * (q - 1)):
            exp[k] = exp[k - (q - 1)]
        self._exp = exp
        self._log = log
        digits = [self._decode(v) for v in range(q)]
        self._digits = digits

    @property
    def primitive_element(self):
        return self._exp[1]

    def elements(self):
        return range(self.q)

    def add(self, a, b):
        if self.t == 1:
            return (a + b) % self.r
        da, db = self._digits[a], self._digits[b]
        return self._encode([(x + y) % self.r for x, y in zip(da, db)])

    def neg(self, a):
        if self.t == 1:
            return (-a) % self.r
        return self._encode([(-x) % self.r for x in self._digits[a]])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k):
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 1 if k == 0 else 0
        return self._exp[(self._log[a] * k) % (self.q - 1)]

    def log(self, a):
        return self._log[a]

    def is_square(self, a):
        return a == 0 or self.r == 2 or self._log[a] % 2 == 0

    def frobenius(self, a, k=1):
        """``a ** (r ** k)``."""
        return self.pow(a, self.r ** k)

    def __repr__(self):
        return f"GF({self.q})"
