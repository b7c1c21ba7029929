"""Rational linear combinations of Schubert classes of one Grassmannian."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

from .partitions import BoxContext, Partition, fits_box, format_partition, partition


class CohClass:
    """An element of the quantum cohomology ring of G(k, n) at q = 1.

    ``terms`` maps box partitions to nonzero :class:`~fractions.Fraction`
    coefficients. Instances are immutable; ``a * b`` is the quantum product.
    """

    __slots__ = ("ctx", "_terms", "_hash")

    def __init__(self, ctx: BoxContext, terms: Mapping[Partition, object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Partition, Fraction] = {}
        for lam, c in items:
            lam = partition(lam)
            if not fits_box(lam, ctx):
                raise ValueError(f"{format_partition(lam)} does not fit the box of {ctx}")
            acc[lam] = acc.get(lam, Fraction(0)) + Fraction(c)
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(
            self, "_terms", {p: c for p, c in sorted(acc.items(), key=lambda t: ctx.index[t[0]]) if c}
        )
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("CohClass is immutable")

    @classmethod
    def schubert(cls, ctx: BoxContext, lam: Iterable[int]) -> "CohClass":
        return cls(ctx, {partition(lam): 1})

    @classmethod
    def one(cls, ctx: BoxContext) -> "CohClass":
        return cls(ctx, {(): 1})

    @classmethod
    def zero(cls, ctx: BoxContext) -> "CohClass":
        return cls(ctx, {})

    @classmethod
    def sigma(cls, ctx: BoxContext, i: int) -> "CohClass":
        """The special class with ``i`` boxes in the first row (sigma_0 = 1)."""
        if not 0 <= i <= ctx.k:
            raise ValueError(f"sigma_{i} undefined for {ctx}")
        return cls(ctx, {(i,) if i else (): 1})

    @classmethod
    def point_class(cls, ctx: BoxContext) -> "CohClass":
        return cls(ctx, {ctx.full_box: 1})

    @classmethod
    def from_vector(cls, ctx: BoxContext, vec) -> "CohClass":
        return cls(ctx, zip(ctx.basis, vec))

    @property
    def terms(self) -> dict[Partition, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def support(self) -> list[Partition]:
        return list(self._terms)

    def coefficient(self, lam: Iterable[int]) -> Fraction:
        return self._terms.get(partition(lam), Fraction(0))

    def vector(self) -> list[Fraction]:
        """Coefficients in the canonical basis order of ``ctx``."""
        return [self._terms.get(lam, Fraction(0)) for lam in self.ctx.basis]

    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: "CohClass") -> None:
        if not isinstance(other, CohClass):
            raise TypeError(f"expected CohClass, got {type(other).__name__}")
        if other.ctx != self.ctx:
            raise ValueError(f"context mismatch: {self.ctx} vs {other.ctx}")

    def __add__(self, other):
        if isinstance(other, Rational):
            other = CohClass(self.ctx, {(): other})
        self._check(other)
        return CohClass(self.ctx, list(self.items()) + list(other.items()))

    __radd__ = __add__

    def __neg__(self):
        return CohClass(self.ctx, {p: -c for p, c in self.items()})

    def __sub__(self, other):
        if isinstance(other, Rational):
            other = CohClass(self.ctx, {(): other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            return CohClass(self.ctx, {p: c * other for p, c in self.items()})
        if isinstance(other, CohClass):
            from .quantum import qprod

            return qprod(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self * other
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out = CohClass.one(self.ctx)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Rational):
            other = CohClass(self.ctx, {(): other})
        if not isinstance(other, CohClass):
            return NotImplemented
        return self.ctx == other.ctx and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.ctx, tuple(self._terms.items()))))
        return self._hash

    def __repr__(self):
        return f"CohClass({self.ctx}, {format_class(self)})"

    def __str__(self):
        return format_class(self)


def format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_class(a: CohClass) -> str:
    """Text form such as ``S[2] + S[1,1] - 2*S[]``."""
    if a.is_zero():
        return "0"
    out = []
    for lam, c in a.items():
        mag = abs(c)
        body = f"S{format_partition(lam)}"
        if mag != 1:
            body = f"{format_coeff(mag)}*{body}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)


def class_to_json(a: CohClass) -> dict:
    return {
        "ctx": {"k": a.ctx.k, "n": a.ctx.n},
        "terms": [
            {"coeff": f"{c.numerator}/{c.denominator}", "partition": list(lam)}
            for lam, c in a.items()
        ],
    }


def class_from_json(data: Mapping) -> CohClass:
    ctx = BoxContext(int(data["ctx"]["k"]), int(data["ctx"]["n"]))
    return CohClass(ctx, [(tuple(t["partition"]), Fraction(t["coeff"])) for t in data["terms"]])
