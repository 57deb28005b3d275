"""Ground ring arithmetic.

Coefficients live in Z[a, b, c, c^-1]: integer Laurent polynomials in
three variables where only c is invertible.  A coefficient is stored as
a dict mapping (ea, eb, ec) to a nonzero int, with ea, eb >= 0 and ec of
either sign.  The zero polynomial is the empty dict.

SpecPoint evaluates coefficients at a concrete (a, b, c), either over
the rationals (p == 0) or over the prime field F_p (p > 0); c must be
invertible at the point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from cubichecke import kernels


class CoeffError(ValueError):
    pass


class LaurentCoeff:
    """Element of Z[a, b, c, c^-1].  Immutable by convention."""

    __slots__ = ("d",)

    def __init__(self, d: dict | None = None, *, _validated: bool = False):
        if d is None:
            d = {}
        if not _validated:
            for k, v in d.items():
                if len(k) != 3:
                    raise CoeffError(f"bad exponent key {k!r}")
                ea, eb, ec = k
                if ea < 0 or eb < 0:
                    raise CoeffError(f"negative exponent on a or b in {k!r}")
                if not isinstance(v, int) or v == 0:
                    raise CoeffError(f"coefficient values must be nonzero ints, got {v!r}")
            d = dict(d)
        self.d = d

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero() -> "LaurentCoeff":
        return LaurentCoeff({}, _validated=True)

    @staticmethod
    def from_int(k: int) -> "LaurentCoeff":
        if k == 0:
            return LaurentCoeff.zero()
        return LaurentCoeff({(0, 0, 0): k}, _validated=True)

    @staticmethod
    def one() -> "LaurentCoeff":
        return LaurentCoeff.from_int(1)

    @staticmethod
    def mono(k: int, ea: int, eb: int, ec: int) -> "LaurentCoeff":
        """k * a^ea * b^eb * c^ec."""
        if k == 0:
            return LaurentCoeff.zero()
        if ea < 0 or eb < 0:
            raise CoeffError("a and b are not invertible")
        return LaurentCoeff({(ea, eb, ec): k}, _validated=True)

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other: "LaurentCoeff") -> "LaurentCoeff":
        return LaurentCoeff(kernels.poly_add(self.d, other.d), _validated=True)

    def __sub__(self, other: "LaurentCoeff") -> "LaurentCoeff":
        return self + (-other)

    def __neg__(self) -> "LaurentCoeff":
        return LaurentCoeff(kernels.poly_neg(self.d), _validated=True)

    def __mul__(self, other: "LaurentCoeff") -> "LaurentCoeff":
        return LaurentCoeff(kernels.poly_mul(self.d, other.d), _validated=True)

    def mul_cpow(self, k: int) -> "LaurentCoeff":
        """Multiply by c^k (always invertible)."""
        if k == 0 or not self.d:
            return self
        return LaurentCoeff(
            {(ea, eb, ec + k): v for (ea, eb, ec), v in self.d.items()},
            _validated=True,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentCoeff):
            return NotImplemented
        return self.d == other.d

    def __hash__(self) -> int:
        return hash(frozenset(self.d.items()))

    def __bool__(self) -> bool:
        return bool(self.d)

    def is_zero(self) -> bool:
        return not self.d

    def is_unit(self) -> bool:
        """Units of Z[a,b,c,c^-1] are exactly +-c^k."""
        if len(self.d) != 1:
            return False
        ((ea, eb, _), v), = self.d.items()
        return ea == 0 and eb == 0 and v in (1, -1)

    def terms(self) -> Iterator[tuple[tuple[int, int, int], int]]:
        return iter(sorted(self.d.items()))

    # -- structure maps -------------------------------------------------

    def phi(self) -> "LaurentCoeff":
        """Coefficient twist of the sign-flip automorphism.

        a -> -b/c, b -> -a/c, c -> 1/c.  An involution on the ring.
        """
        out: dict = {}
        for (ea, eb, ec), v in self.d.items():
            k = (eb, ea, -ea - eb - ec)
            s = out.get(k, 0) + (v if (ea + eb) % 2 == 0 else -v)
            if s:
                out[k] = s
            else:
                del out[k]
        return LaurentCoeff(out, _validated=True)

    def eval(self, point: "SpecPoint"):
        """Value at a SpecPoint: a Fraction if point.p == 0, else an int in [0, p)."""
        if point.p == 0:
            total = Fraction(0)
            for (ea, eb, ec), v in self.d.items():
                total += v * Fraction(point.a) ** ea * Fraction(point.b) ** eb * Fraction(point.c) ** ec
            return total
        p = point.p
        total = 0
        for (ea, eb, ec), v in self.d.items():
            t = v * pow(point.a, ea, p) * pow(point.b, eb, p)
            t *= pow(point.c, ec, p)
            total += t
        return total % p

    # -- serialization --------------------------------------------------

    def to_json(self) -> dict:
        return {
            "terms": [
                {"ea": ea, "eb": eb, "ec": ec, "k": str(v)}
                for (ea, eb, ec), v in sorted(self.d.items())
            ]
        }

    @staticmethod
    def from_json(obj: dict) -> "LaurentCoeff":
        d: dict = {}
        for t in obj["terms"]:
            k = (int(t["ea"]), int(t["eb"]), int(t["ec"]))
            v = int(t["k"])
            if v == 0 or k in d:
                raise CoeffError("malformed coefficient JSON")
            d[k] = v
        return LaurentCoeff(d)

    def __repr__(self) -> str:
        if not self.d:
            return "0"
        parts = []
        for (ea, eb, ec), v in sorted(self.d.items()):
            factors = []
            if abs(v) != 1 or (ea, eb, ec) == (0, 0, 0):
                factors.append(str(abs(v)))
            for sym, e in (("a", ea), ("b", eb), ("c", ec)):
                if e == 1:
                    factors.append(sym)
                elif e != 0:
                    factors.append(f"{sym}^{e}")
            term = "*".join(factors)
            parts.append(("- " if v < 0 else "+ ") + term)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


ZERO = LaurentCoeff.zero()
ONE = LaurentCoeff.one()
A = LaurentCoeff.mono(1, 1, 0, 0)
B = LaurentCoeff.mono(1, 0, 1, 0)
C = LaurentCoeff.mono(1, 0, 0, 1)
CINV = LaurentCoeff.mono(1, 0, 0, -1)


@dataclass(frozen=True)
class SpecPoint:
    """Concrete evaluation point for the ring parameters.

    p == 0 means rational arithmetic; p > 0 means arithmetic in F_p.
    c must be invertible (nonzero at the point).
    """

    p: int
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.p < 0:
            raise CoeffError("p must be 0 or a positive prime")
        if self.p == 0:
            if self.c == 0:
                raise CoeffError("c must be invertible at the point")
        else:
            if self.p < 2:
                raise CoeffError("p must be 0 or a positive prime")
            if self.c % self.p == 0:
                raise CoeffError("c must be invertible at the point")

    def reduce(self, x: int):
        """Normalize a scalar into the point's coefficient domain."""
        if self.p == 0:
            return Fraction(x)
        return x % self.p
