"""Groups generated by permutations.

Membership and order come from a deterministic stabilizer chain with
base (1, 2, 3, ...).  Everything is sized for desk-scale groups (the
largest shipped instances are symmetric groups on nine letters); caps
guard the operations that would not scale past that.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .permcore import Permutation, identity

__all__ = [
    "GeneratedGroup",
    "BlockSystem",
    "CapExceededError",
    "DEFAULT_ORDER_CAP",
    "DEFAULT_NORMALIZER_DEGREE_CAP",
]

DEFAULT_ORDER_CAP = 10**7
DEFAULT_NORMALIZER_DEGREE_CAP = 9
_CLOSURE_FALLBACK_CAP = 2 * 10**6


class CapExceededError(RuntimeError):
    """A configured size cap was exceeded."""


class _Level:
    """One level of the stabilizer chain: a base point, the generators
    fixing all earlier base points, and a BFS transversal of the orbit."""

    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point: int) -> None:
        self.point = point
        self.gens: list[Permutation] = []
        self.transversal: dict[int, Permutation] = {}

    def rebuild_orbit(self, degree: int) -> None:
        self.transversal = {self.point: identity(degree)}
        queue = [self.point]
        while queue:
            p = queue.pop(0)
            u = self.transversal[p]
            for g in self.gens:
                q = g.apply(p)
                if q not in self.transversal:
                    self.transversal[q] = u * g
                    queue.append(q)


class _StabilizerChain:
    """Deterministic Schreier–Sims with base (1, 2, ..., n)."""

    def __init__(self, degree: int, generators: list[Permutation]) -> None:
        self.degree = degree
        self.levels = [_Level(i) for i in range(1, degree + 1)]
        for lvl in self.levels:
            lvl.rebuild_orbit(degree)
        for g in generators:
            self._add_strong_generator(g, 0)
        self._verify()

    def _sift(self, g: Permutation, start: int = 0) -> tuple[int, Permutation] | None:
        """Reduce ``g`` through the chain.  Returns ``None`` if ``g``
        sifts to the identity (membership), else ``(level, residue)``."""
        for idx in range(start, self.degree):
            if g.is_identity:
                return None
            lvl = self.levels[idx]
            p = g.apply(lvl.point)
            if p == lvl.point:
                continue
            u = lvl.transversal.get(p)
            if u is None:
                return (idx, g)
            g = g * u.inverse()
        return None if g.is_identity else (self.degree - 1, g)

    def _add_strong_generator(self, g: Permutation, level: int) -> None:
        if g.is_identity:
            return
        # The generator belongs to every level from the top down to the
        # first base point it moves, inclusive; keeping the level sets
        # nested is what makes the Schreier-generator check sufficient.
        for idx in range(self.degree):
            self.levels[idx].gens.append(g)
            self.levels[idx].rebuild_orbit(self.degree)
            if g.apply(self.levels[idx].point) != self.levels[idx].point:
                break

    def _verify(self) -> None:
        """Close under Schreier generators until every one sifts through."""
        changed = True
        while changed:
            changed = False
            for idx in range(self.degree):
                lvl = self.levels[idx]
                for p, u in list(lvl.transversal.items()):
                    for g in lvl.gens:
                        q = g.apply(p)
                        schreier = u * g * lvl.transversal[q].inverse()
                        res = self._sift(schreier, idx)
                        if res is not None:
                            res_level, residue = res
                            self._add_strong_generator(residue, res_level)
                            changed = True
                if changed:
                    break

    def order(self) -> int:
        result = 1
        for lvl in self.levels:
            result *= len(lvl.transversal)
        return result

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            return False
        return self._sift(g) is None


@dataclass(frozen=True)
class BlockSystem:
    """A group-invariant partition of {1..n} into blocks of equal size.

    Blocks are stored sorted internally and by least element, so equal
    systems compare equal.
    """

    blocks: tuple[tuple[int, ...], ...]

    @property
    def block_size(self) -> int:
        return len(self.blocks[0])

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    def block_of(self, letter: int) -> int:
        """1-based label of the block containing ``letter``."""
        for idx, blk in enumerate(self.blocks, start=1):
            if letter in blk:
                return idx
        raise ValueError(f"letter {letter} not in any block")

    @staticmethod
    def from_partition(parts: list[list[int]]) -> "BlockSystem":
        blocks = tuple(sorted(tuple(sorted(p)) for p in parts))
        return BlockSystem(blocks)


class GeneratedGroup:
    """A permutation group given by generators; immutable after build."""

    def __init__(
        self,
        degree: int,
        generators: list[Permutation],
        order_cap: int = DEFAULT_ORDER_CAP,
    ) -> None:
        for g in generators:
            if g.degree != degree:
                raise ValueError("generator degree mismatch")
        self.degree = degree
        self.generators = [g for g in generators if not g.is_identity]
        self._chain = _StabilizerChain(degree, self.generators)
        self._order = self._chain.order()
        if self._order > order_cap:
            raise CapExceededError(
                f"group order {self._order} exceeds cap {order_cap}"
            )
        self._elements: list[Permutation] | None = None

    # -- basic queries --------------------------------------------------

    def order(self) -> int:
        return self._order

    def contains(self, g: Permutation) -> bool:
        return self._chain.contains(g)

    def elements(self) -> list[Permutation]:
        """Full element list (closure enumeration), sorted; cached."""
        if self._elements is None:
            if self._order > _CLOSURE_FALLBACK_CAP:
                raise CapExceededError(
                    f"element enumeration capped at {_CLOSURE_FALLBACK_CAP}; "
                    f"group has order {self._order}"
                )
            found = {identity(self.degree)}
            queue = [identity(self.degree)]
            while queue:
                x = queue.pop()
                for g in self.generators:
                    y = x * g
                    if y not in found:
                        found.add(y)
                        queue.append(y)
            self._elements = sorted(found)
        return self._elements

    def is_subgroup(self, other: "GeneratedGroup") -> bool:
        """True iff ``self`` is contained in ``other``."""
        return all(other.contains(g) for g in self.generators)

    # -- orbits ---------------------------------------------------------

    def orbit(self, letter: int) -> list[int]:
        seen = {letter}
        queue = [letter]
        while queue:
            p = queue.pop(0)
            for g in self.generators:
                q = g.apply(p)
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        return sorted(seen)

    def orbits(self, seed_set: list[int] | None = None) -> list[list[int]]:
        """Orbits meeting ``seed_set`` (default: all letters), sorted by
        least element."""
        if seed_set is None:
            seed_set = list(range(1, self.degree + 1))
        remaining = sorted(set(seed_set))
        out: list[list[int]] = []
        covered: set[int] = set()
        for s in remaining:
            if s in covered:
                continue
            orb = self.orbit(s)
            covered.update(orb)
            out.append(orb)
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(1)) == self.degree

    # -- stabilizers ----------------------------------------------------

    def point_stabilizer(self, letter: int) -> "GeneratedGroup":
        """Stabilizer of one letter, generated by Schreier generators."""
        if not 1 <= letter <= self.degree:
            raise ValueError(f"letter {letter} out of range")
        transversal: dict[int, Permutation] = {letter: identity(self.degree)}
        queue = [letter]
        while queue:
            p = queue.pop(0)
            for g in self.generators:
                q = g.apply(p)
                if q not in transversal:
                    transversal[q] = transversal[p] * g
                    queue.append(q)
        gens: list[Permutation] = []
        seen: set[Permutation] = set()
        for p, u in transversal.items():
            for g in self.generators:
                q = g.apply(p)
                schreier = u * g * transversal[q].inverse()
                if not schreier.is_identity and schreier not in seen:
                    seen.add(schreier)
                    gens.append(schreier)
        return GeneratedGroup(self.degree, gens)

    def setwise_stabilizer_of_tuple_point(
        self, tensor_apply, start, points
    ):  # pragma: no cover - reserved hook
        raise NotImplementedError

    # -- block systems --------------------------------------------------

    def _minimal_block_through(self, other: int) -> BlockSystem | None:
        """Atkinson's algorithm: the finest block system whose block
        through 1 contains ``other``.  Returns None for the trivial
        one-block system."""
        n = self.degree
        parent = list(range(n + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x: int, y: int) -> int:
            rx, ry = find(x), find(y)
            if rx == ry:
                return rx
            if rx > ry:
                rx, ry = ry, rx
            parent[ry] = rx
            return rx

        queue = [(1, other)]
        union(1, other)
        while queue:
            a, b = queue.pop(0)
            for g in self.generators:
                ga, gb = g.apply(a), g.apply(b)
                if find(ga) != find(gb):
                    union(ga, gb)
                    queue.append((ga, gb))
        classes: dict[int, list[int]] = {}
        for i in range(1, n + 1):
            classes.setdefault(find(i), []).append(i)
        parts = list(classes.values())
        if len(parts) == 1:
            return None
        return BlockSystem.from_partition(parts)

    def block_systems(self) -> list[BlockSystem]:
        """All nontrivial block systems (block size > 1, more than one
        block).  Requires transitivity."""
        if not self.is_transitive():
            raise ValueError("block systems require a transitive group")
        if self.degree == 1:
            return []
        found: dict[BlockSystem, None] = {}
        minimal: list[BlockSystem] = []
        for other in range(2, self.degree + 1):
            bs = self._minimal_block_through(other)
            if bs is not None and bs.block_size < self.degree:
                if bs not in found:
                    found[bs] = None
                    minimal.append(bs)
        # Coarser systems: recurse on the quotient action on blocks.
        for bs in minimal:
            quotient_gens = [
                Permutation(
                    tuple(
                        bs.block_of(g.apply(bs.blocks[b - 1][0]))
                        for b in range(1, bs.num_blocks + 1)
                    )
                )
                for g in self.generators
            ]
            quotient = GeneratedGroup(bs.num_blocks, quotient_gens)
            for sub in quotient.block_systems():
                lifted = BlockSystem.from_partition(
                    [
                        [x for b in blk for x in bs.blocks[b - 1]]
                        for blk in sub.blocks
                    ]
                )
                if lifted.block_size < self.degree and lifted not in found:
                    found[lifted] = None
        return sorted(found.keys(), key=lambda b: (b.block_size, b.blocks))

    def is_primitive(self) -> bool:
        return not self.block_systems()

    # -- coset actions --------------------------------------------------

    def coset_action(
        self, h: "GeneratedGroup"
    ) -> tuple[list[Permutation], int]:
        """Right action of the generators on the right cosets of ``h``.

        Cosets are labeled 1..[g:h] with the coset of ``h`` itself
        labeled 1 and the rest by breadth-first discovery over the
        generators in input order — byte-reproducible output.
        """
        if not h.is_subgroup(self):
            raise ValueError("h is not a subgroup of g")
        index = self._order // h.order()
        reps: list[Permutation] = [identity(self.degree)]
        labels: dict[Permutation, int] = {}

        def label_of(x: Permutation) -> int | None:
            for i, r in enumerate(reps, start=1):
                if h.contains(x * r.inverse()):
                    return i
            return None

        # BFS discovery of coset representatives.
        frontier = [identity(self.degree)]
        while frontier:
            rep = frontier.pop(0)
            for g in self.generators:
                x = rep * g
                if label_of(x) is None:
                    reps.append(x)
                    frontier.append(x)
        if len(reps) != index:
            raise RuntimeError("coset enumeration mismatch")
        images: list[list[int]] = [[0] * index for _ in self.generators]
        for ci, rep in enumerate(reps, start=1):
            for gi, g in enumerate(self.generators):
                target = label_of(rep * g)
                assert target is not None
                images[gi][ci - 1] = target
        perms = [Permutation(tuple(img)) for img in images]
        return perms, index

    # -- conjugacy ------------------------------------------------------

    def conjugacy_class(self, x: Permutation) -> list[Permutation]:
        """The G-class of ``x`` by conjugation orbit, sorted."""
        if not self.contains(x):
            raise ValueError("element not in group")
        seen = {x}
        queue = [x]
        while queue:
            y = queue.pop(0)
            for g in self.generators:
                z = y.conjugate(g)
                if z not in seen:
                    seen.add(z)
                    queue.append(z)
        return sorted(seen)

    def class_representative(self, x: Permutation) -> Permutation:
        return min(self.conjugacy_class(x))

    def are_conjugate(self, x: Permutation, y: Permutation) -> bool:
        cls = self.conjugacy_class(x)
        return y in cls

    # -- normalizer in the symmetric group -------------------------------

    def normalizer_in_symmetric(
        self, degree_cap: int = DEFAULT_NORMALIZER_DEGREE_CAP
    ) -> "GeneratedGroup":
        """Brute-force N_{S_n}(G); capped by degree."""
        if self.degree > degree_cap:
            raise CapExceededError(
                f"normalizer brute force capped at degree {degree_cap}"
            )
        gens: list[Permutation] = []
        for images in itertools.permutations(range(1, self.degree + 1)):
            h = Permutation(images)
            if all(self.contains(g.conjugate(h)) for g in self.generators):
                gens.append(h)
        return GeneratedGroup(self.degree, gens)

    def class_stabilizer(
        self,
        classes: list[list[Permutation]],
        ambient: "GeneratedGroup | None" = None,
    ) -> "GeneratedGroup":
        """Subgroup of ``ambient`` (default: N_{S_n}(G)) whose conjugation
        preserves the given conjugacy-class multiset."""
        if ambient is None:
            ambient = self.normalizer_in_symmetric()
        class_sets = [frozenset(c) for c in classes]
        multiset = sorted(class_sets, key=lambda s: min(s))

        def preserves(h: Permutation) -> bool:
            mapped = sorted(
                (frozenset(x.conjugate(h) for x in cs) for cs in class_sets),
                key=lambda s: min(s),
            )
            return mapped == multiset

        gens = [h for h in ambient.elements() if preserves(h)]
        return GeneratedGroup(self.degree, gens)


def closure_order(g: GeneratedGroup) -> int:
    """Exact order of the generated group (cap enforced at build)."""
    return g.order()
