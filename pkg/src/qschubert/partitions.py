"""Young diagrams inside the l x k box of G(k, n).

Partitions are plain tuples of positive integers in weakly decreasing order
(trailing zeros stripped), so ``()`` is the empty diagram and the class 1.
Rows are bounded by ``l = n - k`` and columns by ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Iterable, Iterator, Sequence

Partition = tuple  # tuple[int, ...], weakly decreasing, no zeros


def partition(parts: Iterable[int]) -> Partition:
    """Normalize ``parts`` to a partition tuple, validating the order."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"parts not weakly decreasing: {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def degree(lam: Partition) -> int:
    return sum(lam)


def padded(lam: Partition, length: int) -> list[int]:
    """``lam`` extended by zeros to exactly ``length`` parts."""
    if len(lam) > length:
        raise ValueError(f"{lam} has more than {length} parts")
    return list(lam) + [0] * (length - len(lam))


def transpose(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def contains(outer: Partition, inner: Partition) -> bool:
    """True iff the diagram ``inner`` sits inside ``outer``."""
    if len(inner) > len(outer):
        return False
    return all(a >= b for a, b in zip(outer, inner))


def partitions_of(size: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``size`` in lexicographically decreasing order."""
    if max_part is None:
        max_part = size
    if size == 0:
        yield ()
        return
    for first in range(min(size, max_part), 0, -1):
        for rest in partitions_of(size - first, first):
            yield (first,) + rest


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """Partitions with at most ``rows`` parts each at most ``cols``.

    Ordered by degree, then lexicographically descending on parts.
    """
    out: list[Partition] = []
    for size in range(rows * cols + 1):
        out.extend(p for p in partitions_of(size, cols) if len(p) <= rows)
    return out


def subpartitions(lam: Partition) -> Iterator[Partition]:
    """Every partition contained in ``lam`` (including ``()`` and ``lam``)."""
    if not lam:
        yield ()
        return

    def rec(i: int, bound: int) -> Iterator[list[int]]:
        if i == len(lam):
            yield []
            return
        for v in range(min(bound, lam[i]), -1, -1):
            for rest in rec(i + 1, v):
                yield [v] + rest

    for parts in rec(0, lam[0]):
        yield partition(parts)


def durfee(lam: Partition) -> int:
    """Side length of the largest square inside ``lam``."""
    d = 0
    while d < len(lam) and lam[d] >= d + 1:
        d += 1
    return d


@dataclass(frozen=True)
class BoxContext:
    """The Grassmannian G(k, n): diagrams with at most ``l = n - k`` rows and
    at most ``k`` columns."""

    k: int
    n: int

    def __post_init__(self):
        if not (isinstance(self.k, int) and isinstance(self.n, int)):
            raise TypeError("k and n must be integers")
        if not 0 < self.k < self.n:
            raise ValueError(f"need 0 < k < n, got k={self.k}, n={self.n}")

    @property
    def l(self) -> int:  # noqa: E743
        return self.n - self.k

    @property
    def gs_rows(self) -> int:
        return self.l // 2

    @property
    def gs_cols(self) -> int:
        return self.k // 2

    @property
    def full_box(self) -> Partition:
        """The point class C_P."""
        return (self.k,) * self.l

    @cached_property
    def basis(self) -> tuple[Partition, ...]:
        return tuple(partitions_in_box(self.l, self.k))

    @cached_property
    def index(self) -> dict[Partition, int]:
        return {lam: i for i, lam in enumerate(self.basis)}

    @cached_property
    def gs_basis(self) -> tuple[Partition, ...]:
        return tuple(partitions_in_box(self.gs_rows, self.gs_cols))

    @property
    def dim(self) -> int:
        return comb(self.n, self.k)

    @property
    def gs_dim(self) -> int:
        return comb(self.gs_rows + self.gs_cols, self.gs_cols)

    def __str__(self) -> str:
        return f"G({self.k},{self.n})"


def fits_box(lam: Partition, ctx: BoxContext) -> bool:
    return len(lam) <= ctx.l and (not lam or lam[0] <= ctx.k)


def enumerate_box(ctx: BoxContext) -> list[Partition]:
    return list(ctx.basis)


def in_gs(lam: Partition, ctx: BoxContext) -> bool:
    return len(lam) <= ctx.gs_rows and (not lam or lam[0] <= ctx.gs_cols)


def _require_box(lam: Partition, ctx: BoxContext) -> None:
    if not fits_box(lam, ctx):
        raise ValueError(f"{list(lam)} does not fit the {ctx.l}x{ctx.k} box of {ctx}")


def poincare_dual(lam: Partition, ctx: BoxContext) -> Partition:
    """Complement of ``lam`` in the box, rotated by 180 degrees."""
    _require_box(lam, ctx)
    p = padded(lam, ctx.l)
    return partition(ctx.k - p[ctx.l - 1 - i] for i in range(ctx.l))


def conjugate_diagram(lam: Partition, ctx: BoxContext) -> Partition:
    """Dualize the pieces right of and below the Durfee square.

    This is the Schubert-class action of complex conjugation.
    """
    _require_box(lam, ctx)
    return _embed_raw(lam, (), ctx)


def _embed_raw(alpha: Partition, beta: Partition, ctx: BoxContext) -> Partition:
    k, l = ctx.k, ctx.l
    d = durfee(alpha)
    a = padded(alpha, l)
    b = padded(beta, l)
    # a is 1-indexed in the formulas; a[j - 1] is alpha_j
    nu = [d + k - a[d - i] for i in range(1, d + 1)]
    nu += [b[i - d - 1] + d - a[l - i + d] for i in range(d + 1, l + 1)]
    return partition(nu)


def embed(alpha: Partition, beta: Partition, ctx: BoxContext) -> Partition:
    """Insert ``beta`` into the empty corner of the conjugate of ``alpha``.

    Both arguments must lie in the small rectangle G_S.
    """
    for name, p in (("alpha", alpha), ("beta", beta)):
        if not in_gs(p, ctx):
            raise ValueError(f"{name}={list(p)} is outside G_S of {ctx}")
    nu = _embed_raw(alpha, beta, ctx)
    assert fits_box(nu, ctx), (alpha, beta, nu)
    return nu


def gs_from_invariant(lam: Partition, ctx: BoxContext) -> Partition:
    """Recover ``alpha`` from ``embed(alpha, alpha)``."""
    _require_box(lam, ctx)
    if degree(lam) % ctx.n:
        raise ValueError(f"degree of {list(lam)} is not 0 mod {ctx.n}")
    if conjugate_diagram(lam, ctx) != lam:
        raise ValueError(f"{list(lam)} is not conjugation invariant")
    d = durfee(lam)
    if d % 2:
        raise ValueError(f"Durfee square of {list(lam)} has odd side {d}")
    h = d // 2
    p = padded(lam, ctx.l)
    mu = partition(p[h + i - 1] - h for i in range(1, ctx.gs_rows + 1))
    assert in_gs(mu, ctx), (lam, mu)
    return mu


def parse_partition(text: str) -> Partition:
    """Parse ``"[3,2,1]"`` (brackets optional, ``"[]"`` is empty)."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    elif "[" in body or "]" in body:
        raise ValueError(f"unbalanced brackets in {text!r}")
    body = body.strip()
    if not body:
        return ()
    try:
        return partition(int(tok) for tok in body.split(","))
    except ValueError as exc:
        raise ValueError(f"bad partition {text!r}: {exc}") from None


def format_partition(lam: Sequence[int]) -> str:
    return "[" + ",".join(str(p) for p in lam) + "]"
