"""Truncated multivariate Taylor jets with exact or high-precision coefficients."""

import itertools

from ..errors import InvalidInput

Index = tuple[int, ...]


class TaylorJet:
    """
    Truncated power series sum_k c_k t^k around a base point, k <= orders
    componentwise.

    Coefficients are stored sparsely. Box truncation commutes with
    multiplication (coefficient k of a product only needs coefficients <= k),
    so arithmetic is exact up to the stored orders. The coefficient field is
    whatever the inputs are: Fractions stay exact, mpf values stay mpf.
    """

    __slots__ = ("orders", "coeffs")

    def __init__(self, orders: Index, coeffs: dict[Index, object] | None = None):
        self.orders = tuple(int(o) for o in orders)
        if any(o < 0 for o in self.orders):
            raise InvalidInput(f"jet orders must be non-negative, got {orders}", module="residues")
        self.coeffs: dict[Index, object] = {}
        for k, v in (coeffs or {}).items():
            if v != 0 and self._in_box(k):
                self.coeffs[tuple(k)] = v

    # ── Constructors ───────────────────────────────────────────────────

    @classmethod
    def constant(cls, orders: Index, value) -> "TaylorJet":
        return cls(orders, {(0,) * len(orders): value})

    @classmethod
    def variable(cls, orders: Index, index: int, base=0) -> "TaylorJet":
        """The jet of z_index = base + t_index."""
        zero = (0,) * len(orders)
        unit = tuple(1 if i == index else 0 for i in range(len(orders)))
        return cls(orders, {zero: base, unit: 1})

    # ── Access ─────────────────────────────────────────────────────────

    def _in_box(self, k: Index) -> bool:
        return all(0 <= ki <= oi for ki, oi in zip(k, self.orders))

    @property
    def nvars(self) -> int:
        return len(self.orders)

    def coefficient(self, k: Index):
        return self.coeffs.get(tuple(k), 0)

    @property
    def constant_term(self):
        return self.coefficient((0,) * self.nvars)

    def items(self):
        return sorted(self.coeffs.items())

    def _coerce(self, other) -> "TaylorJet":
        if isinstance(other, TaylorJet):
            if other.orders != self.orders:
                raise InvalidInput(
                    f"jet orders differ: {self.orders} vs {other.orders}", module="residues"
                )
            return other
        return TaylorJet.constant(self.orders, other)

    # ── Arithmetic ─────────────────────────────────────────────────────

    def __add__(self, other) -> "TaylorJet":
        other = self._coerce(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return TaylorJet(self.orders, out)

    __radd__ = __add__

    def __neg__(self) -> "TaylorJet":
        return TaylorJet(self.orders, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other) -> "TaylorJet":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "TaylorJet":
        return self._coerce(other) - self

    def __mul__(self, other) -> "TaylorJet":
        if not isinstance(other, TaylorJet):
            return TaylorJet(self.orders, {k: v * other for k, v in self.coeffs.items()})
        other = self._coerce(other)
        out: dict[Index, object] = {}
        for ka, va in self.coeffs.items():
            for kb, vb in other.coeffs.items():
                k = tuple(a + b for a, b in zip(ka, kb))
                if self._in_box(k):
                    out[k] = out.get(k, 0) + va * vb
        return TaylorJet(self.orders, out)

    __rmul__ = __mul__

    def reciprocal(self) -> "TaylorJet":
        """1 / self, by the recurrence r_k = -(1/c_0) sum_{0 < j <= k} c_j r_{k-j}."""
        c0 = self.constant_term
        if c0 == 0:
            raise InvalidInput("cannot divide by a jet with zero constant term", module="residues")
        inv0 = 1 / c0
        box = sorted(
            itertools.product(*(range(o + 1) for o in self.orders)),
            key=lambda k: (sum(k), k),
        )
        tail = [(k, v) for k, v in self.coeffs.items() if any(k)]
        out: dict[Index, object] = {}
        for k in box:
            if not any(k):
                out[k] = inv0
                continue
            acc = 0
            for j, cj in tail:
                rest = tuple(a - b for a, b in zip(k, j))
                if min(rest) < 0:
                    continue
                r = out.get(rest)
                if r is not None and r != 0:
                    acc += cj * r
            if acc != 0:
                out[k] = -acc * inv0
        return TaylorJet(self.orders, out)

    def __truediv__(self, other) -> "TaylorJet":
        if not isinstance(other, TaylorJet):
            return TaylorJet(self.orders, {k: v / other for k, v in self.coeffs.items()})
        return self * self._coerce(other).reciprocal()

    def __rtruediv__(self, other) -> "TaylorJet":
        return self._coerce(other) * self.reciprocal()

    def __pow__(self, exponent: int) -> "TaylorJet":
        """Integer powers by repeated squaring; negative powers go through the reciprocal."""
        if int(exponent) != exponent:
            raise InvalidInput("only integer jet powers are supported", module="residues")
        exponent = int(exponent)
        base = self.reciprocal() if exponent < 0 else self
        exponent = abs(exponent)
        result = TaylorJet.constant(self.orders, 1)
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __repr__(self) -> str:
        return f"TaylorJet(orders={self.orders}, terms={len(self.coeffs)})"
