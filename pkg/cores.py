import logging
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from errors import InvalidInputError, NotACoreError

logger = logging.getLogger(__name__)


class Partition:
    """An integer partition; rows and columns are 1-based, content(row, col) = col - row."""

    __slots__ = ('parts',)

    def __init__(self, parts: Iterable[int] = ()):
        values = tuple(int(p) for p in parts)
        if any(p <= 0 for p in values):
            raise InvalidInputError(f"partition {list(values)} has non-positive parts")
        if any(values[r] < values[r + 1] for r in range(len(values) - 1)):
            raise InvalidInputError(f"partition {list(values)} is not weakly decreasing")
        self.parts = values

    def __len__(self) -> int:
        return len(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __lt__(self, other: 'Partition') -> bool:
        return (self.size, self.parts) < (other.size, other.parts)

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def __str__(self) -> str:
        return '()' if not self.parts else '(' + ','.join(str(p) for p in self.parts) + ')'

    @property
    def size(self) -> int:
        return sum(self.parts)

    def part(self, row: int) -> int:
        return self.parts[row - 1] if 1 <= row <= len(self.parts) else 0

    def conjugate(self) -> 'Partition':
        if not self.parts:
            return Partition()
        return Partition(sum(1 for p in self.parts if p >= col) for col in range(1, self.parts[0] + 1))

    def contains_box(self, row: int, col: int) -> bool:
        return row >= 1 and col >= 1 and col <= self.part(row)

    def boxes(self) -> Iterator[Tuple[int, int]]:
        for row, p in enumerate(self.parts, start=1):
            for col in range(1, p + 1):
                yield row, col

    def addable_boxes(self) -> List[Tuple[int, int]]:
        ell = len(self.parts)
        return [(row, self.part(row) + 1) for row in range(1, ell + 2)
                if row == 1 or self.part(row - 1) > self.part(row)]

    def removable_boxes(self) -> List[Tuple[int, int]]:
        ell = len(self.parts)
        return [(row, self.part(row)) for row in range(1, ell + 1)
                if row == ell or self.part(row) > self.part(row + 1)]

    def first_column_hooks(self) -> List[int]:
        ell = len(self.parts)
        return [p + ell - row for row, p in enumerate(self.parts, start=1)]

    def to_list(self) -> List[int]:
        return list(self.parts)


def content(row: int, col: int) -> int:
    return col - row


def hook_length(lam: Partition, row: int, col: int) -> int:
    if not lam.contains_box(row, col):
        raise InvalidInputError(f"box ({row}, {col}) is outside the diagram of {lam}")
    arm = lam.part(row) - col
    leg = sum(1 for r in range(row + 1, len(lam) + 1) if lam.part(r) >= col)
    return arm + leg + 1


def hook_lengths(lam: Partition) -> List[List[int]]:
    conj = lam.conjugate()
    return [[p - col + conj.part(col) - row + 1 for col in range(1, p + 1)]
            for row, p in enumerate(lam.parts, start=1)]


def is_n_core(lam: Partition, n: int) -> bool:
    if n < 2:
        raise InvalidInputError(f"n must be at least 2, got {n}")
    return all(h % n != 0 for row in hook_lengths(lam) for h in row)


def partition_from_beta(beta: Iterable[int]) -> Partition:
    """Partition whose first-column hooks (beta numbers) are the given distinct non-negatives."""
    ordered = sorted(beta, reverse=True)
    ell = len(ordered)
    return Partition(p for p in (b - (ell - r) for r, b in enumerate(ordered, start=1)) if p > 0)


def rim_hook_removals(lam: Partition, n: int) -> List[Partition]:
    """Every partition obtained from lam by removing a single rim hook of length n."""
    beta = set(lam.first_column_hooks())
    results = []
    for b in sorted(beta, reverse=True):
        if b - n >= 0 and b - n not in beta:
            results.append(partition_from_beta((beta - {b}) | {b - n}))
    return results


def n_core_of(lam: Partition, n: int) -> Partition:
    if n < 2:
        raise InvalidInputError(f"n must be at least 2, got {n}")
    beta = set(lam.first_column_hooks())
    moved = True
    while moved:
        moved = False
        for b in sorted(beta):
            if b - n >= 0 and b - n not in beta:
                beta.remove(b)
                beta.add(b - n)
                moved = True
                break
    return partition_from_beta(beta)


class Abacus:
    """A set of integers whose complement is bounded below, drawn on n runners.

    Stored as a floor (every integer below it is a bead) and the finite set of
    beads above it.  Runner levels, balance numbers and n-sets are only defined
    for flush abaci, i.e. abaci of n-cores.
    """

    __slots__ = ('n', 'floor', 'beads')

    def __init__(self, n: int, floor: int, beads: Iterable[int] = ()):
        if n < 2:
            raise InvalidInputError(f"an abacus needs at least 2 runners, got {n}")
        above = {int(b) for b in beads if b >= floor}
        while floor in above:
            above.remove(floor)
            floor += 1
        self.n = n
        self.floor = floor
        self.beads: FrozenSet[int] = frozenset(above)

    @classmethod
    def from_nset(cls, nset: 'NSet') -> 'Abacus':
        low = min(nset.entries)
        return cls(nset.n, low, (x for x in range(low, max(nset.entries)) if x < nset[x]))

    @classmethod
    def from_levels(cls, levels: Sequence[int]) -> 'Abacus':
        """Flush abacus whose runner r has its first gap in row levels[r]."""
        n = len(levels)
        gaps = [n * a + r for r, a in enumerate(levels)]
        low = min(gaps)
        return cls(n, low, (x for x in range(low, max(gaps)) if x < gaps[x % n]))

    def __contains__(self, x: int) -> bool:
        return x < self.floor or x in self.beads

    def __eq__(self, other) -> bool:
        return (isinstance(other, Abacus) and self.n == other.n
                and self.floor == other.floor and self.beads == other.beads)

    def __hash__(self) -> int:
        return hash((self.n, self.floor, self.beads))

    def __repr__(self) -> str:
        return f"Abacus(n={self.n}, floor={self.floor}, beads={sorted(self.beads)})"

    def shifted(self, d: int) -> 'Abacus':
        return Abacus(self.n, self.floor + d, (b + d for b in self.beads))

    def is_flush(self) -> bool:
        return all((b - self.n) in self for b in self.beads)

    def _require_flush(self) -> None:
        if not self.is_flush():
            raise NotACoreError(f"abacus {sorted(self.beads)} is not flush on {self.n} runners")

    def first_gap(self, runner: int) -> int:
        x = self.floor + (runner - self.floor) % self.n
        while x in self.beads:
            x += self.n
        return x

    def runner_levels(self) -> Tuple[int, ...]:
        self._require_flush()
        return tuple((self.first_gap(r) - r) // self.n for r in range(self.n))

    def balance_number(self) -> int:
        return sum(self.runner_levels())

    def balanced(self) -> 'Abacus':
        return self.shifted(-self.balance_number())

    def positive_beads_per_runner(self) -> List[int]:
        counts = [0] * self.n
        for b in self.beads:
            if b >= 0:
                counts[b % self.n] += 1
        if self.floor > 0:
            for b in range(0, self.floor):
                counts[b % self.n] += 1
        return counts

    def partition(self) -> Partition:
        """Part for each bead above the first gap = number of gaps below it."""
        parts = []
        gaps_below = 0
        for x in range(self.floor, max(self.beads, default=self.floor) + 1):
            if x in self.beads:
                parts.append(gaps_below)
            else:
                gaps_below += 1
        return Partition(sorted((p for p in parts if p > 0), reverse=True))

    def render(self, rows: Optional[Tuple[int, int]] = None) -> str:
        """One line per row: row label, then O for a bead and . for a gap on each runner."""
        if rows is None:
            top = (self.floor // self.n) - 1
            bottom = (max(self.beads, default=self.floor) // self.n) + 1
            rows = (top, bottom)
        lines = []
        for row in range(rows[0], rows[1] + 1):
            cells = ' '.join('O' if (row * self.n + r) in self else '.' for r in range(self.n))
            lines.append(f"{row:>4} | {cells}")
        return '\n'.join(lines)


class NVector:
    """Balanced-abacus runner levels of an n-core; entries sum to 0."""

    __slots__ = ('entries',)

    def __init__(self, entries: Iterable[int]):
        values = tuple(int(a) for a in entries)
        if len(values) < 2:
            raise InvalidInputError(f"n-vector needs at least 2 entries, got {list(values)}")
        if sum(values) != 0:
            raise InvalidInputError(f"n-vector {list(values)} does not sum to 0")
        self.entries = values

    @property
    def n(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, NVector) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"NVector({list(self.entries)})"

    def to_list(self) -> List[int]:
        return list(self.entries)


class NSet:
    """A transversal of Z mod n with sum n(n-1)/2, keyed by residue: self[r] is congruent to r."""

    __slots__ = ('n', 'entries')

    def __init__(self, values: Iterable[int]):
        values = [int(v) for v in values]
        n = len(values)
        if n < 2:
            raise InvalidInputError(f"n-set needs at least 2 entries, got {values}")
        keyed: List[Optional[int]] = [None] * n
        for v in values:
            if keyed[v % n] is not None:
                raise InvalidInputError(f"{values} is not a transversal of Z mod {n}")
            keyed[v % n] = v
        if sum(values) != n * (n - 1) // 2:
            raise InvalidInputError(f"n-set {values} sums to {sum(values)}, expected {n * (n - 1) // 2}")
        self.n = n
        self.entries: Tuple[int, ...] = tuple(keyed)

    def __getitem__(self, index: int) -> int:
        return self.entries[index % self.n]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, NSet) and self.entries == other.entries

    def __lt__(self, other: 'NSet') -> bool:
        return self.window() < other.window()

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"NSet({list(self.entries)})"

    def window(self) -> Tuple[int, ...]:
        return tuple(sorted(self.entries))

    def spread(self) -> int:
        return max(self.entries) - min(self.entries)

    def to_list(self) -> List[int]:
        return list(self.entries)


def _require_core(lam: Partition, n: int) -> None:
    if not is_n_core(lam, n):
        raise NotACoreError(f"{lam} is not a {n}-core")


def positive_abacus(lam: Partition, n: int) -> Abacus:
    return Abacus(n, 0, lam.first_column_hooks())


def balance_number(abacus: Abacus) -> int:
    return abacus.balance_number()


def balanced_abacus(lam: Partition, n: int) -> Abacus:
    _require_core(lam, n)
    return positive_abacus(lam, n).balanced()


def n_vector(lam: Partition, n: int) -> NVector:
    return NVector(balanced_abacus(lam, n).runner_levels())


def n_set(lam: Partition, n: int) -> NSet:
    return nset_from_nvector(n_vector(lam, n))


def n_window(lam: Partition, n: int) -> Tuple[int, ...]:
    return n_set(lam, n).window()


def nset_from_nvector(vector: NVector) -> NSet:
    n = vector.n
    return NSet(n * a + r for r, a in enumerate(vector.entries))


def nvector_from_nset(nset: NSet) -> NVector:
    return NVector((x - r) // nset.n for r, x in enumerate(nset.entries))


def partition_from_abacus(abacus: Abacus) -> Partition:
    return abacus.partition()


def partition_from_nvector(vector: NVector) -> Partition:
    return Abacus.from_levels(vector.entries).partition()


def partition_from_nset(nset: NSet) -> Partition:
    return Abacus.from_nset(nset).partition()


def residue_of(box: Tuple[int, int], n: int) -> int:
    return content(*box) % n


def addable_removable_residues(lam: Partition, n: int) -> Tuple[Set[int], Set[int]]:
    return ({residue_of(b, n) for b in lam.addable_boxes()},
            {residue_of(b, n) for b in lam.removable_boxes()})


def level1_act(i: int, lam: Partition, n: int) -> Partition:
    """s_i adds every addable box of residue i, or else removes every removable one."""
    if not (0 <= i <= n - 1):
        raise InvalidInputError(f"generator index must be in 0..{n - 1}, got {i}")
    parts = list(lam.parts)
    addable = [b for b in lam.addable_boxes() if residue_of(b, n) == i]
    if addable:
        for row, _ in addable:
            if row > len(parts):
                parts.append(1)
            else:
                parts[row - 1] += 1
        return Partition(parts)
    removable = [b for b in lam.removable_boxes() if residue_of(b, n) == i]
    for row, _ in removable:
        parts[row - 1] -= 1
    return Partition(p for p in parts if p > 0)


def level1_act_word(word: Iterable[int], lam: Partition, n: int) -> Partition:
    """(s_{i_1} ... s_{i_k}) . lam, the rightmost letter acting first."""
    for i in reversed(list(word)):
        lam = level1_act(i, lam, n)
    return lam


def abacus_act(i: int, vector: NVector) -> NVector:
    """w_i swaps runners i-1 and i; w_0 swaps runners 0 and n-1 and moves one bead across."""
    n = vector.n
    if not (0 <= i <= n - 1):
        raise InvalidInputError(f"generator index must be in 0..{n - 1}, got {i}")
    levels = list(vector.entries)
    if i == 0:
        levels[0], levels[n - 1] = levels[n - 1] + 1, levels[0] - 1
    else:
        levels[i - 1], levels[i] = levels[i], levels[i - 1]
    return NVector(levels)


def bead_counts(lam: Partition, n: int) -> List[int]:
    """Number of non-negative beads on each runner of the positive abacus."""
    _require_core(lam, n)
    return positive_abacus(lam, n).positive_beads_per_runner()


def partition_from_bead_counts(counts: Sequence[int]) -> Partition:
    n = len(counts)
    beads = [r + n * k for r, c in enumerate(counts) for k in range(c)]
    return Abacus(n, 0, beads).partition()


def nset_is_t_core(nset: NSet, t: int) -> bool:
    """Whether the partition of this n-set is a t-core, read off the bead set directly."""
    for x in nset.entries:
        below = x - nset.n - t
        if below >= nset[below]:
            return False
    return True


def render_diagram(lam: Partition) -> str:
    if not lam.parts:
        return '(empty)'
    return '\n'.join('#' * p for p in lam.parts)
