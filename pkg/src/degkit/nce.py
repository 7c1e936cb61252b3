"""The number-problem behind degree completion.

Given current degrees d_1..d_n, per-index allowed final degrees phi(i)
within {0..r}, and a target total increase k, decide whether final degrees
d_i' >= d_i with d_i' in phi(i) and sum(d_i' - d_i) = k exist. Solved by a
boolean table over (prefix, spent budget); one table answers every target
up to a maximum at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Sequence

from .errors import InternalInvariantError, InvalidInputError


@dataclass(frozen=True)
class NceInstance:
    degrees: tuple[int, ...]
    k: int
    r: int
    phi: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.k < 0 or self.r < 0:
            raise InvalidInputError("k and r must be nonnegative")
        if len(self.phi) != len(self.degrees):
            raise InvalidInputError("phi must assign a set to every index")
        if any(d < 0 for d in self.degrees):
            raise InvalidInputError("degrees must be nonnegative")
        for s in self.phi:
            if any(x < 0 or x > self.r for x in s):
                raise InvalidInputError(f"allowed degree outside 0..{self.r}")


def make_nce(degrees: Sequence[int], k: int, r: int, phi: Sequence[set[int]]) -> NceInstance:
    return NceInstance(tuple(degrees), k, r, tuple(frozenset(s) for s in phi))


def _rows(degrees: Sequence[int], k_max: int, phi: Sequence[frozenset[int]]) -> list[list[bool]]:
    first = degrees[0]
    rows = [[first + j in phi[0] for j in range(k_max + 1)]]
    for i in range(1, len(degrees)):
        d = degrees[i]
        increments = sorted(x - d for x in phi[i] if x >= d)
        prev = rows[-1]
        row = [False] * (k_max + 1)
        for j in range(k_max + 1):
            for inc in increments:
                if inc > j:
                    break
                if prev[j - inc]:
                    row[j] = True
                    break
        rows.append(row)
    return rows


def nce_decide_all_targets(
    degrees: Sequence[int], k_max: int, r: int, phi: Sequence[set[int]]
) -> list[bool]:
    """Entry j says whether total increase exactly j is attainable, 0 <= j <= k_max."""
    inst = make_nce(degrees, 0, r, phi)
    if k_max < 0:
        raise InvalidInputError("k_max must be nonnegative")
    if not degrees:
        return [j == 0 for j in range(k_max + 1)]
    return _rows(inst.degrees, k_max, inst.phi)[-1]


def nce_decide(inst: NceInstance) -> bool:
    return nce_decide_all_targets(inst.degrees, inst.k, inst.r, inst.phi)[inst.k]


def nce_traceback(inst: NceInstance) -> tuple[int, ...] | None:
    """One witness vector of final degrees, or None.

    Ties are broken toward the smallest feasible final degree at every
    index, which makes witnesses deterministic.
    """
    degrees, k = inst.degrees, inst.k
    if not degrees:
        return () if k == 0 else None
    rows = _rows(degrees, k, inst.phi)
    if not rows[-1][k]:
        return None
    final = [0] * len(degrees)
    j = k
    for i in range(len(degrees) - 1, 0, -1):
        d = degrees[i]
        for x in sorted(inst.phi[i]):
            if x >= d and x - d <= j and rows[i - 1][j - (x - d)]:
                final[i] = x
                j -= x - d
                break
        else:
            raise InternalInvariantError("positive table entry has no predecessor")
    final[0] = degrees[0] + j

    if final[0] not in inst.phi[0]:
        raise InternalInvariantError("traceback produced an illegal first entry")
    _validate_witness(inst, final)
    return tuple(final)


def _validate_witness(inst: NceInstance, final: Sequence[int]) -> None:
    if any(x < d for x, d in zip(final, inst.degrees)):
        raise InternalInvariantError("witness decreases a degree")
    if any(x not in s for x, s in zip(final, inst.phi)):
        raise InternalInvariantError("witness leaves an allowed-degree set")
    if sum(x - d for x, d in zip(final, inst.degrees)) != inst.k:
        raise InternalInvariantError("witness has the wrong total increase")
