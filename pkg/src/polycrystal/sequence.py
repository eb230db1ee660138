"""Eventually periodic index sequences ``iota = (i_1, i_2, ...)``."""
from __future__ import annotations

from dataclasses import dataclass, field

from .rootdata import CartanMatrix, WeylWord


class SequenceError(ValueError):
    pass


@dataclass(frozen=True)
class IotaSequence:
    """``i_k`` reads from ``prefix`` for ``k <= len(prefix)``, then cycles.

    Positions are 1-based. Construction does not validate against a Cartan
    matrix; call :meth:`validate` (or :meth:`require_valid`) for that.
    """

    prefix: tuple[int, ...]
    cycle: tuple[int, ...]
    _kplus: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)
    _kminus: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(int(i) for i in self.prefix))
        object.__setattr__(self, "cycle", tuple(int(i) for i in self.cycle))
        if not self.cycle:
            raise SequenceError("cycle must be nonempty")

    @classmethod
    def periodic(cls, *cycle: int) -> "IotaSequence":
        return cls((), tuple(cycle))

    @classmethod
    def extending(cls, word: WeylWord | tuple[int, ...], cycle: tuple[int, ...]) -> "IotaSequence":
        """Sequence whose first ``len(word)`` entries are the word's letters.

        The cycle is rotated until the seam after the word has distinct
        neighbours; fails if no rotation works.
        """
        letters = tuple(word.letters if isinstance(word, WeylWord) else word)
        cycle = tuple(cycle)
        for r in range(len(cycle)):
            rot = cycle[r:] + cycle[:r]
            if not letters or letters[-1] != rot[0]:
                return cls(letters, rot)
        raise SequenceError(f"no rotation of cycle {cycle} fits after word {letters}")

    def at(self, k: int) -> int:
        if k < 1:
            raise SequenceError(f"position must be >= 1, got {k}")
        p = len(self.prefix)
        if k <= p:
            return self.prefix[k - 1]
        return self.cycle[(k - p - 1) % len(self.cycle)]

    def head(self, count: int) -> tuple[int, ...]:
        return tuple(self.at(k) for k in range(1, count + 1))

    def k_plus(self, k: int) -> int:
        """Smallest ``l > k`` with ``i_l = i_k``."""
        hit = self._kplus.get(k)
        if hit is not None:
            return hit
        i = self.at(k)
        bound = k + len(self.prefix) + len(self.cycle) + 1
        for l in range(k + 1, bound + 1):
            if self.at(l) == i:
                self._kplus[k] = l
                return l
        raise SequenceError(f"index {i} does not recur after position {k}")

    def k_minus(self, k: int) -> int:
        """Largest ``l < k`` with ``i_l = i_k``, or 0."""
        hit = self._kminus.get(k)
        if hit is not None:
            return hit
        i = self.at(k)
        out = 0
        for l in range(k - 1, 0, -1):
            if self.at(l) == i:
                out = l
                break
        self._kminus[k] = out
        return out

    def positions(self, i: int, upto: int) -> list[int]:
        """All ``k <= upto`` with ``i_k = i``."""
        return [k for k in range(1, upto + 1) if self.at(k) == i]

    def first(self, i: int) -> int:
        """``iota^(i)``: the first position carrying index ``i``."""
        for k in range(1, len(self.prefix) + len(self.cycle) + 1):
            if self.at(k) == i:
                return k
        raise SequenceError(f"index {i} never occurs")

    def next_at_or_after(self, i: int, k: int) -> int:
        """Smallest ``l >= k`` with ``i_l = i``."""
        for l in range(max(k, 1), k + len(self.prefix) + len(self.cycle) + 1):
            if self.at(l) == i:
                return l
        raise SequenceError(f"index {i} never occurs at or after {k}")

    def validate(self, A: CartanMatrix) -> list[str]:
        """Violations of adjacency and recurrence; empty list means valid."""
        out = []
        for k, i in enumerate(self.prefix + self.cycle, start=1):
            if not 1 <= i <= A.n:
                out.append(f"i_{k} = {i} is outside 1..{A.n}")
        # covers the prefix, the seam and one wrap of the cycle
        span = len(self.prefix) + len(self.cycle)
        for k in range(1, span + 1):
            if self.at(k) == self.at(k + 1):
                out.append(f"adjacent equal indices at k={k},{k + 1} (both {self.at(k)})")
        present = set(self.cycle)
        for i in range(1, A.n + 1):
            if i not in present:
                out.append(f"index {i} never occurs in the cycle")
        return out

    def require_valid(self, A: CartanMatrix) -> None:
        problems = self.validate(A)
        if problems:
            raise SequenceError("; ".join(problems))

    def extends(self, word: WeylWord) -> bool:
        return all(self.at(k) == i for k, i in enumerate(word.letters, start=1))


def k_plus(iota: IotaSequence, k: int) -> int:
    return iota.k_plus(k)


def k_minus(iota: IotaSequence, k: int) -> int:
    return iota.k_minus(k)


def iota_first(iota: IotaSequence, i: int) -> int:
    return iota.first(i)
