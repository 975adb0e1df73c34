"""Arithmetic in the prime field F_p.

Field elements are plain Python ints kept as canonical residues in
[0, p); `PrimeField` carries the modulus and the operations.  Values are
immutable, so they can be shared freely between threads.
"""

from .errors import HfStrataError, StructureError

DEFAULT_PRIME = 32003


def is_prime(n: int) -> bool:
    """Deterministic primality test (trial division; moduli are < 2**31)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


class NotPrimeError(HfStrataError):
    def __init__(self, n):
        self.n = n
        super().__init__(f"modulus {n} is not prime")


class PrimeField:
    """The field F_p for a prime 2 <= p < 2**31."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or not 2 <= p < 2**31:
            raise NotPrimeError(p)
        if not is_prime(p):
            raise NotPrimeError(p)
        self.p = p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"

    def reduce(self, a: int) -> int:
        return a % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in F_p")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        if b % self.p == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return (a * pow(b, self.p - 2, self.p)) % self.p


_OPS = {"add": PrimeField.add, "sub": PrimeField.sub, "mul": PrimeField.mul, "div": PrimeField.div}


def field_arithmetic(field: PrimeField, a: int, b: int, op: str) -> int:
    """Apply one of {add, sub, mul, div} to canonical residues a, b."""
    if not isinstance(field, PrimeField):
        raise StructureError("first argument must be a PrimeField")
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown field operation {op!r}") from None
    return fn(field, a, b)
