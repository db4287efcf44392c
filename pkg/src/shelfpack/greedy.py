"""Greedy span-minimizing placement with a 4/3 approximation certificate.

Disks are placed in decreasing size order.  Each disk goes into the widest
gap that can hold it; if no gap fits, it extends an end, preferring an end
placement that does not grow the span.  A priority queue keyed by gap fit
size keeps the whole run in O(n log n).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import DomainError, PreconditionError
from .geometry import (
    Disk,
    Placement,
    PlacedDisk,
    best_support_lower_bound,
    gap_fit_size,
    span,
    verify,
)
from .scalars import Backend, Scalar


@dataclass(frozen=True)
class Certificate:
    """Span, a support-interval lower bound, and their ratio.

    The bound is the strongest support bound over size-decreasing
    prefixes (see :func:`best_support_lower_bound`); with it the greedy
    ratio is guaranteed to stay at or below 4/3.
    """

    span: Scalar
    lower_bound: Scalar
    ratio: Scalar


@dataclass(frozen=True)
class GreedyResult:
    placement: Placement
    certificate: Certificate
    queue_ops: int  # heap pushes plus non-stale pops; bounded by 3n


def greedy_solve(disks: Iterable[Disk]) -> GreedyResult:
    """Place ``disks`` greedily and certify the result.

    Placement rules, applied to disks sorted by decreasing size (ties by
    id), with the first disk pinned at footpoint 0:

    1. If the widest gap fits the disk (non-strictly), place it there
       touching the smaller neighbour (size tie: touch the left one).
    2. Otherwise consider touching the leftmost-footpoint disk from the
       left and the rightmost-footpoint disk from the right.
    3. If either candidate keeps the current walls, take it (left first).
    4. Otherwise extend at the left if its end disk is strictly larger
       than the right one, else at the right.
    """
    order = sorted(disks, key=lambda d: (-d.size, d.id))
    if not order:
        raise DomainError("greedy_solve requires at least one disk")

    ids = [d.id for d in order]
    sizes = [d.size for d in order]
    foot: list[Scalar] = [sizes[0] * 0]
    right_nb: list[int] = [-1]
    left_nb: list[int] = [-1]
    head = tail = 0
    left_wall = foot[0] - sizes[0] * sizes[0]
    right_wall = foot[0] + sizes[0] * sizes[0]
    # heap entries: (-fit, left disk id, left index, right index)
    heap: list[tuple[Scalar, str, int, int]] = []
    ops = 0

    def push_gap(li: int, ri: int) -> None:
        nonlocal ops
        fit = gap_fit_size(sizes[li], sizes[ri], foot[ri] - foot[li])
        heapq.heappush(heap, (-fit, ids[li], li, ri))
        ops += 1

    for k in range(1, len(order)):
        d = sizes[k]
        placed_in_gap = False
        while heap:
            neg_fit, _, li, ri = heap[0]
            if right_nb[li] != ri:  # stale: the pair is no longer adjacent
                heapq.heappop(heap)
                continue
            if -neg_fit < d:
                break
            heapq.heappop(heap)
            ops += 1
            if sizes[li] <= sizes[ri]:
                x = foot[li] + 2 * sizes[li] * d
            else:
                x = foot[ri] - 2 * sizes[ri] * d
            foot.append(x)
            left_nb.append(li)
            right_nb.append(ri)
            right_nb[li] = k
            left_nb[ri] = k
            push_gap(li, k)
            push_gap(k, ri)
            placed_in_gap = True
            break
        if not placed_in_gap:
            x_left = foot[head] - 2 * sizes[head] * d
            x_right = foot[tail] + 2 * sizes[tail] * d
            fits_left = x_left - d * d >= left_wall
            fits_right = x_right + d * d <= right_wall
            if fits_left or (not fits_right and sizes[head] > sizes[tail]):
                foot.append(x_left)
                left_nb.append(-1)
                right_nb.append(head)
                left_nb[head] = k
                push_gap(k, head)
                head = k
            else:
                foot.append(x_right)
                left_nb.append(tail)
                right_nb.append(-1)
                right_nb[tail] = k
                push_gap(tail, k)
                tail = k
        le = foot[k] - d * d
        re = foot[k] + d * d
        if le < left_wall:
            left_wall = le
        if re > right_wall:
            right_wall = re

    placement = Placement(
        tuple(PlacedDisk(disk, x) for disk, x in zip(order, foot))
    )
    report = span(placement)
    lb = best_support_lower_bound(order)
    certificate = Certificate(report.span, lb, report.span / lb)
    return GreedyResult(placement, certificate, ops)


def approximation_certificate(
    placement: Placement,
    disks: Iterable[Disk],
    tolerance: Optional[Scalar] = None,
) -> Certificate:
    """Certify an already verified placement of ``disks``.

    ``tolerance`` defaults to 0 on the exact backend and to a 1e-9
    relative slack on the float backend.
    """
    report = span(placement)
    if tolerance is None:
        if placement.backend is Backend.EXACT:
            tolerance = 0
        else:
            tolerance = 1e-9 * max(1.0, abs(float(report.span)))
    result = verify(placement, tolerance)
    if not result.ok:
        v = result.violation
        raise PreconditionError(
            f"placement is not valid: disks {v.left_disk_id!r} and "
            f"{v.right_disk_id!r} overlap by {v.deficit}"
        )
    lb = best_support_lower_bound(disks)
    return Certificate(report.span, lb, report.span / lb)
