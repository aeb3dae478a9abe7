"""Exact arithmetic on permutations of {1..n}.

Conventions used throughout the package:

* Letters are 1-based.
* Permutations act on the RIGHT of letters: ``(i)(p * q) = ((i)p)q``.
  This is fixed once here and relied on by product-one checks, braid
  moves and conjugation everywhere else.
* The identity prints as ``()``.  The canonical cycle print sorts cycles
  by least element and rotates each cycle to start at its least element.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import lcm

__all__ = [
    "Permutation",
    "CycleType",
    "parse_cycles",
    "identity",
    "dominates",
]

# A cycle type is the multiset of cycle lengths (fixed points included),
# stored as a tuple sorted in decreasing order; the lengths sum to n.
CycleType = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Permutation:
    """An element of S_n given by its image sequence.

    ``images[i - 1]`` is the image of the letter ``i``.  Instances are
    immutable and hashable; ordering compares image sequences, which
    gives the deterministic tie-breaks used by canonical forms.
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if n < 1:
            raise ValueError("degree must be >= 1")
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"images {self.images} are not a bijection of 1..{n}")

    # -- basic structure ------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.images)

    def apply(self, letter: int) -> int:
        """Image of ``letter`` under the right action."""
        return self.images[letter - 1]

    def __call__(self, letter: int) -> int:
        return self.apply(letter)

    @property
    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, start=1))

    # -- group arithmetic ----------------------------------------------

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Right-action composition: apply ``self`` first, then ``other``."""
        if self.degree != other.degree:
            raise ValueError(
                f"degree mismatch: {self.degree} vs {other.degree}"
            )
        return Permutation(tuple(other.images[i - 1] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(tuple(inv))

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self, h: "Permutation") -> "Permutation":
        """``h^-1 * self * h`` — moves the support of ``self`` by ``h``."""
        return h.inverse() * self * h

    # -- cycle structure ------------------------------------------------

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each rotated to start at its least element,
        sorted by least element.  Fixed points are omitted unless asked for.
        """
        seen = [False] * self.degree
        out: list[tuple[int, ...]] = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            j = self.apply(start)
            while j != start:
                cyc.append(j)
                seen[j - 1] = True
                j = self.apply(j)
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> CycleType:
        lengths = [len(c) for c in self.cycles(include_fixed=True)]
        return tuple(sorted(lengths, reverse=True))

    def order(self) -> int:
        result = 1
        for c in self.cycles():
            result = lcm(result, len(c))
        return result

    def index(self) -> int:
        """n minus the number of disjoint cycles (fixed points counted)."""
        return self.degree - len(self.cycles(include_fixed=True))

    def fixed_points(self) -> list[int]:
        return [i for i in range(1, self.degree + 1) if self.apply(i) == i]

    def num_fixed(self) -> int:
        return len(self.fixed_points())

    # -- printing -------------------------------------------------------

    def __str__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(i) for i in c) + ")" for c in cycs)

    def __repr__(self) -> str:
        return f"Permutation[{self.degree}] {self}"


def identity(degree: int) -> Permutation:
    return Permutation(tuple(range(1, degree + 1)))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse whitespace-separated disjoint cycles like ``(1 3)(4 5)``.

    Unmentioned letters are fixed; the empty string and ``()`` are the
    identity (matching how the identity prints).
    """
    stripped = text.strip()
    if stripped == "()":
        return identity(degree)
    remainder = _CYCLE_RE.sub("", stripped)
    if remainder.strip():
        raise ValueError(f"malformed cycle notation: {text!r}")
    images = list(range(1, degree + 1))
    seen: set[int] = set()
    for match in _CYCLE_RE.finditer(stripped):
        body = match.group(1).strip()
        if not body:
            raise ValueError(f"empty cycle in {text!r}")
        try:
            entries = [int(tok) for tok in body.split()]
        except ValueError as exc:
            raise ValueError(f"non-integer entry in {text!r}") from exc
        for e in entries:
            if not 1 <= e <= degree:
                raise ValueError(f"entry {e} out of range 1..{degree}")
            if e in seen:
                raise ValueError(f"repeated entry {e} in {text!r}")
            seen.add(e)
        for a, b in zip(entries, entries[1:] + entries[:1]):
            images[a - 1] = b
    return Permutation(tuple(images))


def dominates(s: Permutation, t: Permutation) -> bool:
    """True iff every cycle length of ``s`` (fixed points counted) is a
    multiple of the order of ``t``.  Degrees may differ.
    """
    ord_t = t.order()
    return all(
        len(c) % ord_t == 0 for c in s.cycles(include_fixed=True)
    )
