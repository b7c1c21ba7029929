"""Classical Schur-function products via Littlewood-Richardson tableaux.

The main routine grows the skew shape nu/lam one content value at a time:
the boxes labelled ``i`` form a horizontal strip, and the reverse reading
word (right to left, top to bottom) must stay a lattice word. Partial
tableaux with equal shape and equal row-counts of the last label have the
same completions, so they are merged with a multiplicity.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from itertools import permutations
from typing import Iterator

from .cohclass import CohClass
from .partitions import BoxContext, Partition, contains, fits_box, partition, partitions_of

SymFunc = dict  # Partition -> positive int


def _strips(shape, prev, count, cap):
    """Ways to add ``count`` boxes as a horizontal strip to ``shape``.

    ``prev`` holds the per-row counts of the previous label (None for the
    first label, which has no lattice constraint). ``cap`` bounds each row.
    Yields the per-row counts of the new boxes.
    """
    rows = len(shape)
    out: list[int] = [0] * rows

    def rec(r, left, placed, prev_before):
        # prev_before: occurrences of the previous label in rows < r
        if left == 0:
            yield tuple(out)
            return
        if r == rows:
            return
        room = cap[r] - shape[r]
        if r > 0:
            room = min(room, shape[r - 1] - shape[r])
        if prev is not None:
            room = min(room, prev_before - placed)
        for a in range(min(room, left), -1, -1):
            out[r] = a
            yield from rec(r + 1, left - a, placed + a,
                           prev_before + (prev[r] if prev is not None else 0))
        out[r] = 0

    yield from rec(0, count, 0, 0)


def _lr_expand(lam: Partition, mu: Partition, max_rows: int | None = None,
               target: Partition | None = None) -> dict[Partition, int]:
    rows = len(lam) + len(mu)
    if max_rows is not None:
        rows = min(rows, max_rows)
    if len(lam) > rows:
        return {}
    if target is not None:
        if len(target) > rows:
            return {}
        cap = list(target) + [0] * (rows - len(target))
    else:
        width = (lam[0] if lam else 0) + (mu[0] if mu else 0)
        cap = [width] * rows
    shape0 = tuple(list(lam) + [0] * (rows - len(lam)))
    if any(s > c for s, c in zip(shape0, cap)):
        return {}
    states = {(shape0, None): 1}
    for count in mu:
        nxt: dict = defaultdict(int)
        for (shape, prev), mult in states.items():
            for strip in _strips(shape, prev, count, cap):
                new = tuple(s + a for s, a in zip(shape, strip))
                nxt[(new, strip)] += mult
        states = nxt
        if not states:
            return {}
    result: dict[Partition, int] = defaultdict(int)
    for (shape, _), mult in states.items():
        result[partition(shape)] += mult
    return dict(result)


@lru_cache(maxsize=None)
def _product_cached(lam: Partition, mu: Partition, max_rows: int | None) -> tuple:
    # fewer content values means fewer DP layers
    if len(mu) > len(lam):
        lam, mu = mu, lam
    return tuple(sorted(_lr_expand(lam, mu, max_rows).items()))


def lr_coefficient(lam, mu, nu) -> int:
    """c^nu_{lam, mu}: LR tableaux of shape nu/lam and content mu."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if sum(lam) + sum(mu) != sum(nu) or not contains(nu, lam):
        return 0
    return _lr_expand(lam, mu, target=nu).get(nu, 0)


def schur_product(lam, mu, max_rows: int | None = None) -> SymFunc:
    """Expansion of s_lam * s_mu, optionally dropping terms with more than
    ``max_rows`` rows (i.e. working in that many variables)."""
    return dict(_product_cached(partition(lam), partition(mu), max_rows))


def cup_product(a: CohClass, b: CohClass, ctx: BoxContext | None = None) -> CohClass:
    """Classical cup product: Schur expansion truncated to the box."""
    ctx = ctx or a.ctx
    for x in (a, b):
        if x.ctx != ctx:
            raise ValueError(f"context mismatch: {x.ctx} vs {ctx}")
    acc: dict = defaultdict(int)
    for lam, c in a.items():
        for mu, d in b.items():
            for nu, m in schur_product(lam, mu, ctx.l).items():
                if fits_box(nu, ctx):
                    acc[nu] += c * d * m
    return CohClass(ctx, acc)


# --- Pieri-rule oracle ------------------------------------------------------


def pieri(lam: Partition, r: int, max_rows: int | None = None) -> list[Partition]:
    """Shapes obtained from ``lam`` by adding a horizontal strip of size r."""
    rows = len(lam) + (1 if r else 0)
    if max_rows is not None:
        rows = min(rows, max_rows)
    shape = list(lam) + [0] * (rows - len(lam))
    if len(lam) > rows:
        return []
    out = []

    def rec(i, left, acc):
        if i == rows:
            if left == 0:
                out.append(partition(acc))
            return
        room = left if i == 0 else min(left, shape[i - 1] - shape[i])
        for a in range(room, -1, -1):
            rec(i + 1, left - a, acc + [shape[i] + a])

    rec(0, r, [])
    return out


def schur_product_pieri(lam, mu, max_rows: int | None = None) -> SymFunc:
    """s_lam * s_mu via Jacobi-Trudi for s_mu and repeated Pieri steps.

    Independent of the tableau enumerator; used as a cross-check.
    """
    lam, mu = partition(lam), partition(mu)
    if max_rows is not None and (len(lam) > max_rows or len(mu) > max_rows):
        return {}
    m = len(mu)
    total: dict = defaultdict(int)
    for perm in permutations(range(m)):
        sign = _perm_sign(perm)
        degrees = [mu[i] - i + perm[i] for i in range(m)]
        if any(d < 0 for d in degrees):
            continue
        current = {lam: 1}
        for d in degrees:
            step: dict = defaultdict(int)
            for shape, c in current.items():
                for new in pieri(shape, d, max_rows):
                    step[new] += c
            current = step
        for shape, c in current.items():
            total[shape] += sign * c
    return {p: c for p, c in total.items() if c}


def _perm_sign(perm) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


# --- coefficient sums -------------------------------------------------------


def lr_sum_lhs(lam, mu) -> int:
    """Sum over nu of c^nu_{lam, mu}."""
    return sum(schur_product(lam, mu).values())


def skew_lr_count(lam, nu) -> int:
    """Number of LR tableaux of shape lam/nu with any content."""
    lam, nu = partition(lam), partition(nu)
    if not contains(lam, nu):
        return 0
    size = sum(lam) - sum(nu)
    return sum(lr_coefficient(nu, alpha, lam) for alpha in partitions_of(size))


def _subdiagrams(lam: Partition) -> Iterator[Partition]:
    from .partitions import subpartitions

    return subpartitions(lam)


def lr_sum_rhs(lam, mu) -> int:
    """Sum over alpha, beta, nu of c^lam_{alpha, nu} * c^mu_{beta, nu}."""
    lam, mu = partition(lam), partition(mu)
    total = 0
    for nu in _subdiagrams(lam):
        if not contains(mu, nu):
            continue
        total += skew_lr_count(lam, nu) * skew_lr_count(mu, nu)
    return total
