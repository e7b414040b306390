"""Sparse multivariate polynomials with exact rational coefficients."""

import ast
import heapq
from fractions import Fraction
from numbers import Rational

from . import variables as V


class NotDivisible(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _clean(terms):
    """Drop zero coefficients and demote integral Fractions to int."""
    out = {}
    for k, c in terms.items():
        if c:
            out[k] = c.numerator if (type(c) is Fraction and c.denominator == 1) else c
    return out


class MultiPoly:
    """Immutable sparse polynomial over the fixed alphabet of `variables`.

    Terms map packed monomial keys to ``int`` or ``Fraction`` coefficients.
    No zero coefficients are stored and every u-exponent is 0 or 1.
    """

    __slots__ = ("_t", "_hash")

    def __init__(self, terms=None, _trusted=False):
        if terms is None:
            terms = {}
        elif not _trusted:
            raw = {}
            for k, c in terms.items():
                k = V.reduce_u(k)
                raw[k] = raw.get(k, 0) + c
            terms = _clean(raw)
        self._t = terms
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, c):
        c = _norm(Fraction(c)) if not isinstance(c, int) else c
        return cls({0: c} if c else {}, _trusted=True)

    @classmethod
    def var(cls, name, power=1):
        return cls({V.pack({name: power}): 1}, _trusted=True)

    @classmethod
    def monomial(cls, exponents, coeff=1):
        if not coeff:
            return cls()
        return cls({V.pack(exponents): _norm(coeff)}, _trusted=True)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, MultiPoly):
            return x
        if isinstance(x, (int, Fraction, Rational)):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to MultiPoly")

    # -- basic protocol ---------------------------------------------------

    def items(self):
        """Iterate ``(exponent dict, coefficient)`` in descending monomial order."""
        for k in sorted(self._t, reverse=True):
            yield V.unpack(k), self._t[k]

    def keys(self):
        return self._t.keys()

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self._t == other._t
        if isinstance(other, (int, Fraction)):
            return self._t == ({0: _norm(other)} if other else {})
        return NotImplemented

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        if not self._t:
            return "0"
        out = []
        for k in sorted(self._t, reverse=True):
            c = self._t[k]
            neg = c < 0
            a = -c if neg else c
            mono = V.key_str(k)
            if mono == "1":
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, Fraction)):
                other = MultiPoly.const(other)
            else:
                return NotImplemented
        if len(self._t) < len(other._t):
            small, res = self._t, dict(other._t)
        else:
            small, res = other._t, dict(self._t)
        for k, c in small.items():
            v = res.get(k, 0) + c
            if v:
                res[k] = v
            else:
                del res[k]
        return MultiPoly(_normalize_values(res), _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({k: -c for k, c in self._t.items()}, _trusted=True)

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, Fraction)):
                other = MultiPoly.const(other)
            else:
                return NotImplemented
        res = dict(self._t)
        for k, c in other._t.items():
            v = res.get(k, 0) - c
            if v:
                res[k] = v
            else:
                del res[k]
        return MultiPoly(_normalize_values(res), _trusted=True)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        if not c:
            return MultiPoly()
        if c == 1:
            return self
        return MultiPoly(_normalize_values({k: v * c for k, v in self._t.items()}), _trusted=True)

    def shift(self, key, c=1):
        """Multiply by the monomial ``c * key`` (a packed key)."""
        if not c:
            return MultiPoly()
        t = {k + key: v * c for k, v in self._t.items()}
        if self._has_u() and (key >> V.SHIFT["u"]) & V.MASK:
            return MultiPoly(t)
        return MultiPoly(_normalize_values(t) if c != 1 else t, _trusted=True)

    def _has_u(self):
        sh = V.SHIFT["u"]
        return any((k >> sh) & V.MASK for k in self._t)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, Fraction)):
                return self.scale(_norm(other))
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return MultiPoly()
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((kb, cb),) = b.items()
            t = {k + kb: c * cb for k, c in a.items()}
            if (kb >> V.SHIFT["u"]) & V.MASK and self._has_u() and other._has_u():
                return MultiPoly(t)
            return MultiPoly(t if cb == 1 else _normalize_values(t), _trusted=True)
        res = {}
        get = res.get
        bitems = list(b.items())
        for ka, ca in a.items():
            for kb, cb in bitems:
                k = ka + kb
                res[k] = get(k, 0) + ca * cb
        if self._has_u() and other._has_u():
            return MultiPoly(res)
        return MultiPoly(_clean(res), _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("MultiPoly powers must be nonnegative integers")
        result = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division of a polynomial by zero")
            return self.scale(Fraction(1) / other)
        from .ratfunc import RationalFunction
        return RationalFunction(self, other)

    def __rtruediv__(self, other):
        from .ratfunc import RationalFunction
        return RationalFunction(MultiPoly.coerce(other), self)

    # -- structure --------------------------------------------------------

    def is_constant(self):
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_term(self):
        return self._t.get(0, 0)

    def is_monomial(self):
        return len(self._t) == 1

    def leading_key(self):
        return max(self._t) if self._t else None

    def leading_coefficient(self):
        return self._t[max(self._t)] if self._t else 0

    def content_key(self, names=None):
        """Largest monomial dividing every term (restricted to ``names``)."""
        if not self._t:
            return 0
        if names is None:
            names = self.variables()
        out = 0
        for name in names:
            sh = V.SHIFT[name]
            e = min((k >> sh) & V.MASK for k in self._t)
            if e:
                out |= e << sh
        return out

    def variables(self):
        seen = 0
        for k in self._t:
            seen |= k
        return [name for name in V.VARIABLES if (seen >> V.SHIFT[name]) & V.MASK]

    def degree(self, name=None):
        if not self._t:
            return -1
        if name is None:
            return max(sum(V.unpack(k).values()) for k in self._t)
        sh = V.SHIFT[name]
        return max((k >> sh) & V.MASK for k in self._t)

    def min_degree(self, name):
        if not self._t:
            return -1
        sh = V.SHIFT[name]
        return min((k >> sh) & V.MASK for k in self._t)

    def coefficients(self, name):
        """List ``[c_0, c_1, ...]`` with ``self = sum c_d * name^d``."""
        sh = V.SHIFT[name]
        mask = V.MASK << sh
        buckets = {}
        for k, c in self._t.items():
            d = (k & mask) >> sh
            buckets.setdefault(d, {})[k & ~mask] = c
        if not buckets:
            return []
        top = max(buckets)
        return [MultiPoly(buckets.get(d, {}), _trusted=True) for d in range(top + 1)]

    def coefficient(self, name, d):
        sh = V.SHIFT[name]
        mask = V.MASK << sh
        want = d << sh
        return MultiPoly({k & ~mask: c for k, c in self._t.items() if k & mask == want}, _trusted=True)

    @classmethod
    def from_coefficients(cls, name, coeffs):
        sh = V.SHIFT[name]
        res = {}
        for d, c in enumerate(coeffs):
            c = cls.coerce(c)
            for k, v in c._t.items():
                res[k + (d << sh)] = v
        return cls(res, _trusted=True)

    def split(self, names):
        """Group terms by their monomial in ``names``.

        Returns ``{key_in_names: MultiPoly in the remaining variables}``.
        """
        mask = V.field_mask(names)
        groups = {}
        for k, c in self._t.items():
            groups.setdefault(k & mask, {})[k & ~mask] = c
        return {g: MultiPoly(t, _trusted=True) for g, t in groups.items()}

    def map_keys(self, fn):
        """Apply a key transformation (caller keeps it injective and valid)."""
        return MultiPoly({fn(k): c for k, c in self._t.items()})

    def rename(self, mapping):
        """Rename variables, e.g. ``{"x1": "y1"}`` (targets must be absent)."""
        moves = [(V.SHIFT[a], V.SHIFT[b]) for a, b in mapping.items()]

        def fn(k):
            out = k
            for sa, sb in moves:
                e = (k >> sa) & V.MASK
                out -= e << sa
            for sa, sb in moves:
                e = (k >> sa) & V.MASK
                out += e << sb
            return out

        return self.map_keys(fn)

    def subs(self, values):
        """Substitute ``{name: value}``; values may be ints, polys or rational functions."""
        from .ratfunc import RationalFunction
        names = [n for n in values if n in V.INDEX]
        mask = V.field_mask(names)
        groups = self.split(names)
        powers = {n: {0: MultiPoly.const(1)} for n in names}
        vals = {}
        for n in names:
            v = values[n]
            vals[n] = v if isinstance(v, (MultiPoly, RationalFunction)) else MultiPoly.const(v)
        total = MultiPoly()
        for g, rest in groups.items():
            term = rest
            ex = V.unpack(g)
            for n, e in ex.items():
                cache = powers[n]
                if e not in cache:
                    cache[e] = vals[n] ** e
                term = term * cache[e]
            total = total + term
        del mask
        return total

    def evaluate(self, values):
        """Numeric evaluation; every variable present must be in ``values``."""
        total = 0
        for ex, c in self.items():
            term = c
            for n, e in ex.items():
                term = term * values[n] ** e
            total += term
        return total

    # -- serialization ----------------------------------------------------

    def to_json(self):
        """Canonical mapping ``"p^a x0^b ..." -> "num/den"`` in descending monomial order."""
        out = {}
        for k in sorted(self._t, reverse=True):
            c = Fraction(self._t[k])
            out[V.key_json(k)] = f"{c.numerator}/{c.denominator}"
        return out

    @classmethod
    def from_json(cls, data):
        terms = {}
        for key, val in data.items():
            k = V.parse_key_json(key)
            terms[k] = terms.get(k, 0) + Fraction(str(val))
        return cls(terms)


def _normalize_values(t):
    for k, c in t.items():
        if type(c) is Fraction and c.denominator == 1:
            t[k] = c.numerator
    return t


def var(name, power=1):
    return MultiPoly.var(name, power)


def const(c):
    return MultiPoly.const(c)


def exact_divide(num, den):
    """Return ``q`` with ``q * den == num`` exactly, else raise NotDivisible.

    Multivariate division in lex order: the leading term of any multiple of
    ``den`` is divisible by the leading term of ``den``, so a single failed
    leading-term test already proves non-divisibility.
    """
    num = MultiPoly.coerce(num)
    den = MultiPoly.coerce(den)
    if not den:
        raise ZeroDivisionError("exact_divide by zero polynomial")
    if not num:
        return MultiPoly()
    lk = den.leading_key()
    lc = den._t[lk]
    inv = Fraction(1, 1) / lc
    dterms = [(k, c) for k, c in den._t.items() if k != lk]
    if len(den) == 1:
        q = {}
        for k, c in num._t.items():
            if not V.divides(lk, k):
                raise NotDivisible(f"{num} is not divisible by {den}")
            q[V.quotient(k, lk)] = _norm(c * inv)
        out = MultiPoly(q, _trusted=not (lk >> V.SHIFT["u"]) & V.MASK)
        if out * den != num:
            raise NotDivisible(f"{num} is not divisible by {den}")
        return out
    if (lk >> V.SHIFT["u"]) & V.MASK or den._has_u() or num._has_u():
        return _divide_general(num, den)
    rem = dict(num._t)
    heap = [-k for k in rem]
    heapq.heapify(heap)
    q = {}
    while rem:
        k = -heapq.heappop(heap)
        c = rem.get(k)
        if c is None:
            continue
        while heap and heap[0] == -k:
            heapq.heappop(heap)
        if not V.divides(lk, k):
            raise NotDivisible(f"{num} is not divisible by {den}")
        qk = V.quotient(k, lk)
        qc = c * inv if lc != 1 else c
        if type(qc) is Fraction and qc.denominator == 1:
            qc = qc.numerator
        q[qk] = qc
        del rem[k]
        for dk, dc in dterms:
            nk = qk + dk
            v = rem.get(nk, 0) - qc * dc
            if v:
                if nk not in rem:
                    heapq.heappush(heap, -nk)
                rem[nk] = v
            elif nk in rem:
                del rem[nk]
    return MultiPoly(_normalize_values(q), _trusted=True)


def _divide_general(num, den):
    # u-bearing operands: products may rewrite u^2 -> p and reorder keys, so
    # fall back to repeated leading-term subtraction on whole polynomials.
    lk = den.leading_key()
    lc = den._t[lk]
    rem = num
    q = MultiPoly()
    steps = 0
    limit = 10 * (len(num) + 1) * (len(den) + 1) + 1000
    while rem:
        k = rem.leading_key()
        if not V.divides(lk, k):
            raise NotDivisible(f"{num} is not divisible by {den}")
        t = MultiPoly({V.quotient(k, lk): _norm(Fraction(rem._t[k]) / lc)}, _trusted=True)
        q = q + t
        rem = rem - t * den
        steps += 1
        if steps > limit:
            raise NotDivisible(f"{num} is not divisible by {den}")
    return q


_BINOPS = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
    ast.Div: lambda a, b: a / b,
    ast.Pow: lambda a, b: a ** b,
}


def parse(text):
    """Parse an arithmetic expression over the alphabet, e.g. ``"(x0+1)^2 - p/3"``.

    ``[p]`` may be written as ``P``.  Division by a polynomial yields a
    RationalFunction.
    """
    tree = ast.parse(text.replace("^", "**"), mode="eval")

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return MultiPoly.const(node.value)
        if isinstance(node, ast.Name):
            if node.id not in V.INDEX:
                raise ValueError(f"unknown variable {node.id!r}")
            return MultiPoly.var(node.id)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            left = ev(node.left)
            if isinstance(node.op, ast.Pow):
                if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                    raise ValueError("exponents must be integer literals")
                return left ** node.right.value
            right = ev(node.right)
            if isinstance(node.op, ast.Div) and isinstance(right, MultiPoly) and right.is_constant():
                return left / Fraction(right.constant_term())
            return _BINOPS[type(node.op)](left, right)
        raise ValueError(f"unsupported syntax in {text!r}")

    return ev(tree)
