"""Partitions, compositions, skew shapes, strip relations, and tableaux.

Compositions and partitions are plain tuples of nonnegative ints, indexed
from 0 and implicitly extended by zeros.  All functions return trimmed
tuples (no trailing zeros), and accept untrimmed input.
"""

from dataclasses import dataclass
from itertools import zip_longest

Composition = tuple[int, ...]
Partition = tuple[int, ...]

SST = "sst"
TRANSPOSE = "transpose"
REVERSE = "reverse"
REVERSE_TRANSPOSE = "reverse_transpose"
FLAVORS = (SST, TRANSPOSE, REVERSE, REVERSE_TRANSPOSE)

HORIZONTAL = "horizontal"
VERTICAL = "vertical"


def trim(parts) -> Composition:
    """Canonical form: drop trailing zeros."""
    parts = tuple(int(x) for x in parts)
    n = len(parts)
    while n > 0 and parts[n - 1] == 0:
        n -= 1
    return parts[:n]


def part(alpha, i: int) -> int:
    """Component i of a composition, with implicit zero extension."""
    return alpha[i] if 0 <= i < len(alpha) else 0


def is_composition(alpha) -> bool:
    return all(isinstance(x, int) and x >= 0 for x in alpha)


def is_partition(alpha) -> bool:
    alpha = trim(alpha)
    return is_composition(alpha) and all(
        alpha[i] >= alpha[i + 1] for i in range(len(alpha) - 1)
    )


def size(alpha) -> int:
    return sum(alpha)


def add(alpha, beta) -> Composition:
    return trim(a + b for a, b in zip_longest(alpha, beta, fillvalue=0))


def sub(alpha, beta) -> Composition:
    """Componentwise difference; raises if any component would be negative."""
    out = []
    for a, b in zip_longest(alpha, beta, fillvalue=0):
        if a < b:
            raise ValueError(f"negative component in {tuple(alpha)} - {tuple(beta)}")
        out.append(a - b)
    return trim(out)


def contains(inner, outer) -> bool:
    """Diagram containment: inner[i] <= outer[i] for all i."""
    return all(a <= b for a, b in zip_longest(inner, outer, fillvalue=0))


def conjugate(lam) -> Partition:
    """Transpose of the Young diagram: result[j] = #{i : lam[i] > j}."""
    lam = trim(lam)
    if not is_partition(lam):
        raise ValueError(f"not a partition: {lam}")
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def strip_le(alpha, beta, kind: str) -> bool:
    """Horizontal (<=h) or vertical (<=v) strip relation between compositions.

    alpha <=h beta holds when beta[i+1] <= alpha[i] <= beta[i] for all i;
    the vertical version is the same test on conjugates, equivalently
    beta - alpha is a 0/1 composition with containment.
    """
    if kind == HORIZONTAL:
        n = max(len(alpha), len(beta)) + 1
        return all(
            part(beta, i + 1) <= part(alpha, i) <= part(beta, i) for i in range(n)
        )
    if kind == VERTICAL:
        if not (is_partition(alpha) and is_partition(beta)):
            return False
        return all(
            0 <= part(beta, i) - part(alpha, i) <= 1
            for i in range(max(len(alpha), len(beta)))
        )
    raise ValueError(f"unknown strip kind: {kind}")


def revert(lam, k: int) -> Composition:
    """Reverse the k initial parts: (lam[k-1], ..., lam[0]).  Needs lam[k] = 0."""
    lam = trim(lam)
    if part(lam, k) != 0 or len(lam) > k:
        raise ValueError(f"revert needs lam[{k}] = 0, got {lam}")
    return trim(part(lam, k - 1 - i) for i in range(k))


def partitions_of(n: int):
    """All partitions of n, largest part first."""
    if n == 0:
        yield ()
        return
    for head in range(n, 0, -1):
        for tail in partitions_of(n - head):
            if not tail or head >= tail[0]:
                yield (head,) + tail


def partitions_up_to(n: int):
    """All partitions of size 0..n."""
    for m in range(n + 1):
        yield from partitions_of(m)


def subpartitions(lam):
    """All partitions contained in the diagram of lam."""
    lam = trim(lam)
    if not lam:
        yield ()
        return

    def rec(i, cap):
        if i == len(lam):
            yield ()
            return
        for first in range(min(lam[i], cap), -1, -1):
            if first == 0:
                yield ()
                continue
            for rest in rec(i + 1, first):
                yield (first,) + rest

    yield from rec(0, lam[0])


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated text form; "0" is the empty partition."""
    text = text.strip()
    if text in ("", "0"):
        return ()
    parts = tuple(int(tok) for tok in text.split(","))
    if not is_partition(parts):
        raise ValueError(f"not a partition: {text!r}")
    return trim(parts)


def format_partition(lam) -> str:
    lam = trim(lam)
    return ",".join(str(p) for p in lam) if lam else "0"


@dataclass(frozen=True)
class SkewShape:
    """A pair of partitions outer/inner with inner contained in outer."""

    outer: Partition
    inner: Partition = ()

    def __post_init__(self):
        object.__setattr__(self, "outer", trim(self.outer))
        object.__setattr__(self, "inner", trim(self.inner))
        if not (is_partition(self.outer) and is_partition(self.inner)):
            raise ValueError(f"not partitions: {self.outer}/{self.inner}")
        if not contains(self.inner, self.outer):
            raise ValueError(f"inner not contained in outer: {self.outer}/{self.inner}")

    def __str__(self):
        return f"{format_partition(self.outer)}/{format_partition(self.inner)}"

    @classmethod
    def parse(cls, text: str) -> "SkewShape":
        outer, _, inner = text.partition("/")
        return cls(parse_partition(outer), parse_partition(inner) if inner else ())

    @property
    def weight(self) -> int:
        return size(self.outer) - size(self.inner)

    def cells(self):
        """Squares of the skew diagram in row-major order."""
        for i, o in enumerate(self.outer):
            for j in range(part(self.inner, i), o):
                yield (i, j)

    def conjugate(self) -> "SkewShape":
        return SkewShape(conjugate(self.outer), conjugate(self.inner))


def _step_ok(flavor: str, a, b) -> bool:
    if flavor == SST:
        return strip_le(a, b, HORIZONTAL)
    if flavor == TRANSPOSE:
        return strip_le(a, b, VERTICAL)
    if flavor == REVERSE:
        return strip_le(b, a, HORIZONTAL)
    if flavor == REVERSE_TRANSPOSE:
        return strip_le(b, a, VERTICAL)
    raise ValueError(f"unknown flavor: {flavor}")


@dataclass(frozen=True)
class Tableau:
    """A tableau as a stabilized chain of partitions with one of four flavors.

    chain[i] is the shape occupied by entries < i (forward flavors) or
    >= i (reverse flavors); the last member is the stable value.
    """

    flavor: str
    chain: tuple[Partition, ...]

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor: {self.flavor}")
        chain = [trim(c) for c in self.chain]
        if not chain:
            chain = [()]
        while len(chain) >= 2 and chain[-1] == chain[-2]:
            chain.pop()
        object.__setattr__(self, "chain", tuple(chain))
        for c in chain:
            if not is_partition(c):
                raise ValueError(f"chain member not a partition: {c}")
        for a, b in zip(chain, chain[1:]):
            if not _step_ok(self.flavor, a, b):
                raise ValueError(
                    f"chain step {a} -> {b} violates {self.flavor} strip relation"
                )

    @property
    def reverse(self) -> bool:
        return self.flavor in (REVERSE, REVERSE_TRANSPOSE)

    @property
    def outer(self) -> Partition:
        return self.chain[0] if self.reverse else self.chain[-1]

    @property
    def inner(self) -> Partition:
        return self.chain[-1] if self.reverse else self.chain[0]

    @property
    def shape(self) -> SkewShape:
        return SkewShape(self.outer, self.inner)

    def is_straight(self) -> bool:
        return self.inner == ()

    def weight(self) -> Composition:
        if self.reverse:
            diffs = [size(a) - size(b) for a, b in zip(self.chain, self.chain[1:])]
        else:
            diffs = [size(b) - size(a) for a, b in zip(self.chain, self.chain[1:])]
        return tuple(diffs)

    def padded_chain(self, length: int) -> tuple[Partition, ...]:
        """The chain extended with its stable value up to the given length."""
        if length < len(self.chain):
            raise ValueError("cannot shorten a chain")
        return self.chain + (self.chain[-1],) * (length - len(self.chain))

    def entry_rows(self):
        """Row fillings of the display: list of rows, each a list of entries.

        Forward flavors only (entries increase along the chain); used for
        rendering and by the insertion code.
        """
        if self.reverse:
            raise ValueError("display rows are defined for forward flavors")
        rows = [[] for _ in range(len(self.outer))]
        for e, (a, b) in enumerate(zip(self.chain, self.chain[1:])):
            for i in range(len(self.outer)):
                rows[i].extend([e] * (part(b, i) - part(a, i)))
        return rows

    def conjugate(self) -> "Tableau":
        flavor = {
            SST: TRANSPOSE,
            TRANSPOSE: SST,
            REVERSE: REVERSE_TRANSPOSE,
            REVERSE_TRANSPOSE: REVERSE,
        }[self.flavor]
        return Tableau(flavor, tuple(conjugate(c) for c in self.chain))


def tableau_weight(t: Tableau) -> Composition:
    return t.weight()
