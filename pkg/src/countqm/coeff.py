"""Exact size-bounded arithmetic for integer and rational coefficient codes.

Integers are stored as a sign plus a binary magnitude; rationals as signed
mixed fractions sK/m/n with 0 <= m < n.  Fractions are never reduced:
addition multiplies denominators, which is what keeps the size of a sum
bounded by the sum of the sizes.  The empty code stands for zero in both
domains and has size 0.
"""

from __future__ import annotations

from fractions import Fraction


class CoefficientError(ValueError):
    """Malformed numeral or grammar violation."""


def _bitlen(v: int) -> int:
    # ceil(log2(v+1)) for v >= 0
    return v.bit_length()


# ---------------------------------------------------------------------------
# binary numerals (naturals)
# ---------------------------------------------------------------------------

def nat_from_bits(bits: str) -> int:
    """Parse a binary numeral: either "0" or a string starting with "1"."""
    if not bits or any(c not in "01" for c in bits):
        raise CoefficientError(f"bad binary numeral {bits!r}")
    if bits != "0" and bits[0] == "0":
        raise CoefficientError(f"leading zero in numeral {bits!r}")
    return int(bits, 2)


def nat_to_bits(v: int) -> str:
    if v < 0:
        raise CoefficientError("numerals are non-negative")
    return format(v, "b")


# ---------------------------------------------------------------------------
# integer codes
# ---------------------------------------------------------------------------

class IntCode:
    """Signed binary integer code; sign 0 marks the empty (zero) code."""

    __slots__ = ("sign", "mag")

    def __init__(self, sign: int, mag: int = 0):
        if sign not in (-1, 0, 1) or mag < 0 or (sign == 0 and mag != 0):
            raise CoefficientError(f"bad integer code ({sign}, {mag})")
        self.sign = sign
        self.mag = mag

    @property
    def value(self) -> int:
        return self.sign * self.mag

    @property
    def is_empty(self) -> bool:
        return self.sign == 0

    @classmethod
    def from_value(cls, v: int) -> "IntCode":
        if v == 0:
            return INT_ZERO
        return cls(1 if v > 0 else -1, abs(v))

    @classmethod
    def from_literal(cls, text: str) -> "IntCode":
        """Parse the binary literal form, e.g. "-111" for -7; "" for zero."""
        if text == "":
            return INT_ZERO
        if text[0] not in "+-":
            raise CoefficientError(f"integer literal needs a sign: {text!r}")
        return cls(1 if text[0] == "+" else -1, nat_from_bits(text[1:]))

    def literal(self) -> str:
        if self.sign == 0:
            return ""
        return ("+" if self.sign > 0 else "-") + nat_to_bits(self.mag)

    def __eq__(self, other):
        if not isinstance(other, IntCode):
            return NotImplemented
        return self.value == other.value

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return f"IntCode({self.literal()!r})"


INT_ZERO = IntCode(0)


def int_size(x: IntCode) -> int:
    """Code size: ceil(log2(|value|+1)) + 1, or 0 for the empty code."""
    if x.sign == 0:
        return 0
    return _bitlen(x.mag) + 1


def int_add(x1: IntCode, x2: IntCode) -> IntCode:
    return IntCode.from_value(x1.value + x2.value)


def int_sub(x1: IntCode, x2: IntCode) -> IntCode:
    return IntCode.from_value(x1.value - x2.value)


def int_equal(x1: IntCode, x2: IntCode) -> bool:
    return x1.value == x2.value


# ---------------------------------------------------------------------------
# rational codes
# ---------------------------------------------------------------------------

class RatCode:
    """Unreduced mixed-fraction code sK/m/n; sign 0 marks the empty code."""

    __slots__ = ("sign", "k", "m", "n")

    def __init__(self, sign: int, k: int = 0, m: int = 0, n: int = 1):
        if sign not in (-1, 0, 1):
            raise CoefficientError(f"bad sign {sign}")
        if sign != 0 and not (k >= 0 and 0 <= m < n):
            raise CoefficientError(f"bad mixed fraction {sign}*{k}/{m}/{n}")
        self.sign = sign
        self.k = k
        self.m = m
        self.n = n

    @property
    def value(self) -> Fraction:
        if self.sign == 0:
            return Fraction(0)
        return self.sign * (self.k + Fraction(self.m, self.n))

    @property
    def is_empty(self) -> bool:
        return self.sign == 0

    @classmethod
    def from_value(cls, v) -> "RatCode":
        v = Fraction(v)
        if v == 0:
            return RAT_ZERO
        k, m = divmod(abs(v.numerator), v.denominator)
        return cls(1 if v > 0 else -1, k, m, v.denominator)

    @classmethod
    def from_literal(cls, text: str) -> "RatCode":
        """Parse the binary literal form, e.g. "-11/10/101" for -3 2/5."""
        if text == "":
            return RAT_ZERO
        if text[0] not in "+-":
            raise CoefficientError(f"rational literal needs a sign: {text!r}")
        parts = text[1:].split("/")
        if len(parts) != 3:
            raise CoefficientError(f"expected sK/m/n, got {text!r}")
        k, m, n = (nat_from_bits(p) for p in parts)
        if not (0 <= m < n):
            raise CoefficientError(f"numerator must be below denominator in {text!r}")
        return cls(1 if text[0] == "+" else -1, k, m, n)

    def literal(self) -> str:
        if self.sign == 0:
            return ""
        s = "+" if self.sign > 0 else "-"
        return f"{s}{nat_to_bits(self.k)}/{nat_to_bits(self.m)}/{nat_to_bits(self.n)}"

    def __eq__(self, other):
        if not isinstance(other, RatCode):
            return NotImplemented
        return rat_equal(self, other)

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return f"RatCode({self.literal()!r})"


RAT_ZERO = RatCode(0)


def rat_size(x: RatCode) -> int:
    """Code size per the mixed-fraction formula; denominator counts twice."""
    if x.sign == 0:
        return 0
    return _bitlen(x.k) + 2 * _bitlen(x.n) + 3


def rat_literal_length(x: RatCode) -> int:
    """Idealized stored word length: bits of K, m and n plus three symbols."""
    if x.sign == 0:
        return 0
    return _bitlen(x.k) + _bitlen(x.m) + _bitlen(x.n) + 3


def _rat_combine(x1: RatCode, x2: RatCode, flip: int) -> RatCode:
    if x1.sign == 0:
        if x2.sign == 0 or (x2.k == 0 and x2.m == 0):
            return RAT_ZERO
        s = flip * x2.sign
        return x2 if s == x2.sign else RatCode(s, x2.k, x2.m, x2.n)
    if x2.sign == 0:
        return RAT_ZERO if x1.k == 0 and x1.m == 0 else x1
    s2 = flip * x2.sign
    q = x1.n * x2.n
    p = x1.sign * x1.m * x2.n + s2 * x2.m * x1.n
    kk = x1.sign * x1.k + s2 * x2.k
    # fold p into [0, q), then align the signs of the two parts
    if p >= q:
        p -= q
        kk += 1
    while p < 0:
        p += q
        kk -= 1
    if kk < 0 and p > 0:
        kk += 1
        p -= q
    if kk == 0 and p == 0:
        return RAT_ZERO
    if kk >= 0 and p >= 0:
        return RatCode(1, kk, p, q)
    # now kk <= 0 and p <= 0, not both zero
    return RatCode(-1, -kk, -p, q)


def rat_add(x1: RatCode, x2: RatCode) -> RatCode:
    """Exact sum; the denominator of a nonzero result is always n1*n2."""
    return _rat_combine(x1, x2, 1)


def rat_sub(x1: RatCode, x2: RatCode) -> RatCode:
    return _rat_combine(x1, x2, -1)


def rat_equal(x1: RatCode, x2: RatCode) -> bool:
    """Interpretation equality via signed cross-multiplication."""
    a = x1.sign * (x1.k * x1.n + x1.m)
    b = x2.sign * (x2.k * x2.n + x2.m)
    return a * x2.n == b * x1.n


# ---------------------------------------------------------------------------
# decimal grammar (I/O boundary)
# ---------------------------------------------------------------------------

def _decimal_nat(text: str) -> int:
    if not text.isdigit() or (len(text) > 1 and text[0] == "0"):
        raise CoefficientError(f"bad decimal natural {text!r}")
    return int(text)


def parse_coeff(text: str, domain: str):
    """Parse a decimal coefficient: "0" | [+-]?d+ (int) or [+-]K/m/n (rat)."""
    text = text.replace("−", "-")
    if domain == "int":
        if text == "0":
            return INT_ZERO
        sign = 1
        body = text
        if body[:1] in ("+", "-"):
            sign = 1 if body[0] == "+" else -1
            body = body[1:]
        if not body or body[0] == "0":
            raise CoefficientError(f"bad integer {text!r}")
        return IntCode(sign, _decimal_nat(body))
    if domain == "rat":
        if text == "0":
            return RAT_ZERO
        if text[:1] not in ("+", "-"):
            raise CoefficientError(f"rational {text!r} needs a sign")
        parts = text[1:].split("/")
        if len(parts) != 3:
            raise CoefficientError(f"expected sK/m/n, got {text!r}")
        k, m, n = (_decimal_nat(p) for p in parts)
        if n < 1:
            raise CoefficientError(f"zero denominator in {text!r}")
        if m >= n:
            raise CoefficientError(f"numerator >= denominator in {text!r}")
        return RatCode(1 if text[0] == "+" else -1, k, m, n)
    raise CoefficientError(f"unknown domain {domain!r}")


def format_coeff(x) -> str:
    """Decimal rendering; parse_coeff(format_coeff(x)) interprets equally."""
    if isinstance(x, IntCode):
        return str(x.value)
    if isinstance(x, RatCode):
        if x.sign == 0 or x.value == 0:
            return "0"
        return f"{'+' if x.sign > 0 else '-'}{x.k}/{x.m}/{x.n}"
    raise CoefficientError(f"not a coefficient code: {x!r}")


# ---------------------------------------------------------------------------
# the coefficient-domain contract
# ---------------------------------------------------------------------------

class CoefficientDomain:
    """Operations shared by every consumer of coefficient codes."""

    __slots__ = ("name", "zero", "add", "sub", "equal", "size", "code_type")

    def __init__(self, name, zero, add, sub, equal, size, code_type):
        self.name = name
        self.zero = zero
        self.add = add
        self.sub = sub
        self.equal = equal
        self.size = size
        self.code_type = code_type

    def is_zero(self, x) -> bool:
        return self.equal(x, self.zero)

    def neg(self, x):
        return self.sub(self.zero, x)

    def value(self, x):
        return x.value

    def from_value(self, v):
        return self.code_type.from_value(v)

    def parse(self, text: str):
        return parse_coeff(text, self.name)

    def format(self, x) -> str:
        return format_coeff(x)

    def __repr__(self):
        return f"CoefficientDomain({self.name!r})"


INT_DOMAIN = CoefficientDomain("int", INT_ZERO, int_add, int_sub,
                               int_equal, int_size, IntCode)
RAT_DOMAIN = CoefficientDomain("rat", RAT_ZERO, rat_add, rat_sub,
                               rat_equal, rat_size, RatCode)

_DOMAINS = {"int": INT_DOMAIN, "rat": RAT_DOMAIN}


def get_domain(name: str) -> CoefficientDomain:
    try:
        return _DOMAINS[name]
    except KeyError:
        raise CoefficientError(f"unknown coefficient domain {name!r}") from None
