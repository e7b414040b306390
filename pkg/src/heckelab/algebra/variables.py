"""Fixed variable alphabet and packed exponent vectors.

Every monomial is stored as one Python integer: variable ``i`` owns the bit
field ``[i*BITS, (i+1)*BITS)``.  The variables are listed from smallest to
largest, so lexicographic monomial order (largest variable compared first)
coincides with integer order on the packed keys.

The top bit of each field is a guard bit that is never set in a valid key;
it makes divisibility tests a single subtraction.
"""

VARIABLES = (
    "p",      # the prime, kept symbolic
    "u",      # square root of p: u^2 -> p
    "x0", "x1", "x2", "x3",
    "y0", "y1", "y2", "y3",
    "X",      # the L-factor / generating-series variable
    "at",     # alpha-tilde of an Ikeda lift
    "ak",     # alpha(k) of a p-adic family
    "pk",     # p^k for a symbolic weight k
    "Lg",     # uninterpreted local factor L_p(g, St)
    "T", "T1", "T2", "P",          # left Hecke generators; P is [p]
    "Ty", "T1y", "T2y", "Py",      # right Hecke generators
)

BITS = 16
MASK = (1 << BITS) - 1
MAX_EXPONENT = (1 << (BITS - 1)) - 1

INDEX = {name: i for i, name in enumerate(VARIABLES)}
SHIFT = {name: i * BITS for i, name in enumerate(VARIABLES)}
NVARS = len(VARIABLES)

GUARD = 0
for _i in range(NVARS):
    GUARD |= 1 << (_i * BITS + BITS - 1)
del _i

_SHIFT_P = SHIFT["p"]
_SHIFT_U = SHIFT["u"]


def field_mask(names):
    """Bit mask selecting the fields of the given variables."""
    m = 0
    for name in names:
        m |= MASK << SHIFT[name]
    return m


def pack(exponents):
    """Pack a ``{name: exponent}`` mapping into a monomial key."""
    key = 0
    for name, e in exponents.items():
        if e < 0 or e > MAX_EXPONENT:
            raise ValueError(f"exponent {e} of {name} out of range")
        if e:
            key += e << SHIFT[name]
    return reduce_u(key)


def unpack(key):
    """Return the ``{name: exponent}`` mapping of a monomial key (nonzero only)."""
    out = {}
    i = 0
    while key:
        e = key & MASK
        if e:
            out[VARIABLES[i]] = e
        key >>= BITS
        i += 1
    return out


def exponent(key, name):
    return (key >> SHIFT[name]) & MASK


def reduce_u(key):
    """Apply u^2 -> p to a single key."""
    e = (key >> _SHIFT_U) & MASK
    if e > 1:
        h = e >> 1
        key += (h << _SHIFT_P) - ((2 * h) << _SHIFT_U)
    return key


def divides(a, b):
    """True if monomial ``a`` divides monomial ``b``."""
    return ((b | GUARD) - a) & GUARD == GUARD


def quotient(b, a):
    """Monomial ``b / a``; caller guarantees ``divides(a, b)``."""
    return ((b | GUARD) - a) ^ GUARD


def key_gcd(a, b):
    """Fieldwise minimum of two keys."""
    out = 0
    shift = 0
    while a and b:
        ea, eb = a & MASK, b & MASK
        out |= (ea if ea < eb else eb) << shift
        a >>= BITS
        b >>= BITS
        shift += BITS
    return out


def key_lcm(a, b):
    out = 0
    shift = 0
    while a or b:
        ea, eb = a & MASK, b & MASK
        out |= (ea if ea > eb else eb) << shift
        a >>= BITS
        b >>= BITS
        shift += BITS
    return out


def key_str(key):
    """Human readable monomial, ``1`` for the empty monomial."""
    parts = []
    for name, e in sorted(unpack(key).items(), key=lambda kv: INDEX[kv[0]]):
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def key_json(key):
    """Exponent-vector string ``"p^a u^b x0^c ..."`` used by the JSON format."""
    ex = unpack(key)
    if not ex:
        return "1"
    return " ".join(f"{name}^{ex[name]}" for name in VARIABLES if name in ex)


def parse_key_json(text):
    text = text.strip()
    if text == "1":
        return 0
    ex = {}
    for tok in text.split():
        name, _, e = tok.partition("^")
        if name not in INDEX:
            raise ValueError(f"unknown variable {name!r}")
        ex[name] = ex.get(name, 0) + (int(e) if e else 1)
    return pack(ex)
