"""Brute-force exact solver: branch and bound over footpoint orders.

Left-compaction is span-minimal for a fixed order, so searching the order
space is complete.  The partial span of a compacted prefix never shrinks
when more disks are appended, which makes it an admissible bound for
pruning.  Permutations that only swap equal-size disks are explored once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import DomainError, PreconditionError
from .geometry import Disk, Placement, SpanReport, compact, span
from .greedy import greedy_solve
from .scalars import unified_backend


@dataclass(frozen=True)
class OracleConfig:
    max_n: int = 10
    prune: bool = True

    def __post_init__(self) -> None:
        if self.max_n < 1:
            raise DomainError("max_n must be at least 1")


def exact_solve(
    disks: Iterable[Disk], config: Optional[OracleConfig] = None
) -> tuple[Placement, SpanReport]:
    """Minimum span over all footpoint orders, with a realizing placement.

    With pruning enabled the search starts from the greedy span as the
    incumbent, so it only ever explores orders that could still beat it;
    if none does, the greedy placement itself is returned (its span is
    then optimal).
    """
    cfg = config or OracleConfig()
    items = sorted(disks, key=lambda d: (-d.size, d.id))
    if not items:
        raise DomainError("exact_solve requires at least one disk")
    if len(items) > cfg.max_n:
        raise PreconditionError(
            f"instance has {len(items)} disks, above the oracle cap of "
            f"{cfg.max_n}; raise OracleConfig.max_n to search anyway"
        )
    unified_backend([d.size for d in items])

    n = len(items)
    sizes = [d.size for d in items]
    radii = [s * s for s in sizes]
    pair = [[2 * a * b for b in sizes] for a in sizes]

    fallback: Optional[Placement] = None
    if cfg.prune:
        greedy = greedy_solve(items)
        incumbent = greedy.certificate.span
        fallback = greedy.placement
    else:
        incumbent = None

    best_order: Optional[list[int]] = None
    used = [False] * n
    feet: list = []
    chosen: list[int] = []

    def search(partial_span) -> None:
        nonlocal incumbent, best_order
        depth = len(chosen)
        if depth == n:
            if incumbent is None or partial_span < incumbent:
                incumbent = partial_span
                best_order = chosen.copy()
            return
        previous_size = None
        for i in range(n):
            if used[i]:
                continue
            if sizes[i] == previous_size:
                continue  # equal-size disks enter in id order only
            previous_size = sizes[i]
            x = radii[i]
            row = pair[i]
            for j, xj in zip(chosen, feet):
                c = xj + row[j]
                if c > x:
                    x = c
            extent = x + radii[i]
            new_span = partial_span if partial_span > extent else extent
            if cfg.prune and incumbent is not None and new_span >= incumbent:
                continue
            used[i] = True
            chosen.append(i)
            feet.append(x)
            search(new_span)
            feet.pop()
            chosen.pop()
            used[i] = False

    search(sizes[0] * 0)

    if best_order is None:
        # Nothing beat the greedy incumbent, so the greedy span is optimal.
        placement = fallback
    else:
        placement = compact([items[i] for i in best_order])
    report = span(placement)
    return placement, report
