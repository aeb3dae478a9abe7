"""Fiber products of two covers of the line.

The curve {f(x) = g(y)} is handled entirely combinatorially: its
components are the orbits of the joint monodromy group on the m*n
tensor letters, and each component's genus is computed by two
independent routes that must agree —

* method 1 restricts the joint branch cycles to the orbit and applies
  Riemann–Hurwitz at degree |orbit|;
* method 2 derives branch cycles for the component's projection to the
  y-line (a cover of degree |orbit|/n) and applies Riemann–Hurwitz there.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm

from .permcore import Permutation, dominates, identity
from .permgroup import CapExceededError, GeneratedGroup
from .cover import Cover, InvalidCoverError, equivalent_tuples, genus_from_tuple

__all__ = [
    "CoverPair",
    "PairedCover",
    "Component",
    "RamPoint",
    "ScreenReport",
    "pair_covers_over_common_points",
    "double_transitive_complement",
    "detect_clc",
    "screen_g1",
]


def _tensor_letter(x: int, y: int, n: int) -> int:
    """x-major encoding of the tensor letter (x, y) into 1..m*n."""
    return (x - 1) * n + y


def _tensor_pair(letter: int, n: int) -> tuple[int, int]:
    x, y = divmod(letter - 1, n)
    return x + 1, y + 1


@dataclass(frozen=True)
class RamPoint:
    """Points of the fiber product over one branch point, coming from a
    disjoint-cycle pair (x-cycle of length s, y-cycle of length t):
    gcd(s, t) points, each of index lcm(s, t)/t over y and lcm(s, t)/s
    over x."""

    branch_index: int
    x_cycle: tuple[int, ...]
    y_cycle: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.x_cycle)

    @property
    def t(self) -> int:
        return len(self.y_cycle)

    @property
    def count(self) -> int:
        return gcd(self.s, self.t)

    @property
    def ram_index_over_y(self) -> int:
        return lcm(self.s, self.t) // self.t

    @property
    def ram_index_over_x(self) -> int:
        return lcm(self.s, self.t) // self.s


class CoverPair:
    """Two covers over a shared ordered branch-point list.

    This is the weak pairing: the two tuples are individually valid and
    are aligned point-by-point (identity entries allowed in the aligned
    tuples when one side is unbranched at a label).  The strong,
    common-monodromy pairing is :class:`PairedCover`.
    """

    def __init__(
        self,
        branch_points: tuple[str, ...],
        sigma: tuple[Permutation, ...],
        tau: tuple[Permutation, ...],
        degree_x: int,
        degree_y: int,
    ) -> None:
        if not (len(branch_points) == len(sigma) == len(tau)):
            raise ValueError("branch point / tuple length mismatch")
        if len(set(branch_points)) != len(branch_points):
            raise ValueError("branch point labels must be distinct")
        self.branch_points = branch_points
        self.sigma = sigma
        self.tau = tau
        self.degree_x = degree_x
        self.degree_y = degree_y
        for p in sigma:
            if p.degree != degree_x:
                raise ValueError("sigma degree mismatch")
        for p in tau:
            if p.degree != degree_y:
                raise ValueError("tau degree mismatch")
        self._validate_sides()

    def _validate_sides(self) -> None:
        for tup, deg, name in (
            (self.sigma, self.degree_x, "sigma"),
            (self.tau, self.degree_y, "tau"),
        ):
            prod = identity(deg)
            for p in tup:
                prod = prod * p
            if not prod.is_identity:
                raise InvalidCoverError(f"{name} tuple fails product-one")
            grp = GeneratedGroup(deg, list(tup))
            if not grp.is_transitive():
                raise InvalidCoverError(f"{name} tuple is not transitive")

    # -- covers and groups ------------------------------------------------

    def sigma_cover(self) -> Cover:
        labels = [
            b for b, p in zip(self.branch_points, self.sigma) if not p.is_identity
        ]
        cycles = [p for p in self.sigma if not p.is_identity]
        return Cover(self.degree_x, tuple(labels), tuple(cycles))

    def tau_cover(self) -> Cover:
        labels = [
            b for b, p in zip(self.branch_points, self.tau) if not p.is_identity
        ]
        cycles = [p for p in self.tau if not p.is_identity]
        return Cover(self.degree_y, tuple(labels), tuple(cycles))

    @cached_property
    def joint_group(self) -> GeneratedGroup:
        """The pair group acting on the disjoint union of the x-letters
        (1..m) and the y-letters (m+1..m+n)."""
        m, n = self.degree_x, self.degree_y
        gens = []
        for a, b in zip(self.sigma, self.tau):
            images = list(a.images) + [m + i for i in b.images]
            gens.append(Permutation(tuple(images)))
        return GeneratedGroup(m + n, gens)

    def joint_element_parts(self, x: Permutation) -> tuple[Permutation, Permutation]:
        m, n = self.degree_x, self.degree_y
        part1 = Permutation(tuple(x.images[:m]))
        part2 = Permutation(tuple(i - m for i in x.images[m:]))
        return part1, part2

    @cached_property
    def tensor_cycles(self) -> tuple[Permutation, ...]:
        """The branch cycles acting on the m*n tensor letters."""
        m, n = self.degree_x, self.degree_y
        out = []
        for a, b in zip(self.sigma, self.tau):
            images = [0] * (m * n)
            for x in range(1, m + 1):
                for y in range(1, n + 1):
                    images[_tensor_letter(x, y, n) - 1] = _tensor_letter(
                        a.apply(x), b.apply(y), n
                    )
            out.append(Permutation(tuple(images)))
        return tuple(out)

    @cached_property
    def tensor_group(self) -> GeneratedGroup:
        return GeneratedGroup(
            self.degree_x * self.degree_y, list(self.tensor_cycles)
        )

    # -- components -------------------------------------------------------

    @cached_property
    def components(self) -> list["Component"]:
        """Orbits of the joint group on tensor letters, by least letter."""
        orbits = self.tensor_group.orbits()
        return [Component(self, tuple(o)) for o in orbits]

    def component_containing(self, x: int, y: int) -> "Component":
        letter = _tensor_letter(x, y, self.degree_y)
        for comp in self.components:
            if letter in comp.letter_set:
                return comp
        raise RuntimeError("tensor letter not covered by any orbit")

    # -- ramification ------------------------------------------------------

    def ramification_profile(self) -> list[RamPoint]:
        out = []
        for i, (a, b) in enumerate(zip(self.sigma, self.tau)):
            for yc in b.cycles(include_fixed=True):
                for xc in a.cycles(include_fixed=True):
                    out.append(RamPoint(i, xc, yc))
        return out

    # -- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "branch_points": list(self.branch_points),
            "sigma": {
                "degree": self.degree_x,
                "cycles": [str(p) for p in self.sigma],
            },
            "tau": {
                "degree": self.degree_y,
                "cycles": [str(p) for p in self.tau],
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)


class PairedCover(CoverPair):
    """A pair of covers carrying simultaneous branch cycles of a common
    abstract element at every branch point.

    On top of the weak pairing this checks: no identity entries,
    matching entry orders, and that the joint diagonal group projects
    isomorphically onto both factors (equal orders) — certifying that
    the two covers have equivalent Galois closures.
    """

    def __init__(
        self,
        branch_points: tuple[str, ...],
        sigma: tuple[Permutation, ...],
        tau: tuple[Permutation, ...],
        degree_x: int,
        degree_y: int,
    ) -> None:
        super().__init__(branch_points, sigma, tau, degree_x, degree_y)
        for a, b in zip(sigma, tau):
            if a.is_identity or b.is_identity:
                raise InvalidCoverError("paired covers allow no identity entries")
            if a.order() != b.order():
                raise InvalidCoverError(
                    f"entry orders differ: {a.order()} vs {b.order()}"
                )
        g1 = GeneratedGroup(degree_x, list(sigma))
        g2 = GeneratedGroup(degree_y, list(tau))
        if not (self.joint_group.order() == g1.order() == g2.order()):
            raise InvalidCoverError(
                "joint group does not project isomorphically to both sides "
                f"(orders {g1.order()}, {g2.order()}, "
                f"joint {self.joint_group.order()})"
            )

    @staticmethod
    def from_covers(sigma_cover: Cover, tau_cover: Cover) -> "PairedCover":
        if sigma_cover.branch_points != tau_cover.branch_points:
            raise ValueError("branch point labels must agree")
        return PairedCover(
            sigma_cover.branch_points,
            sigma_cover.cycles,
            tau_cover.cycles,
            sigma_cover.degree,
            tau_cover.degree,
        )

    @staticmethod
    def from_json_dict(data: dict) -> "PairedCover":
        labels = tuple(str(b) for b in data["branch_points"])
        m = int(data["sigma"]["degree"])
        n = int(data["tau"]["degree"])
        from .permcore import parse_cycles

        sigma = tuple(parse_cycles(s, m) for s in data["sigma"]["cycles"])
        tau = tuple(parse_cycles(s, n) for s in data["tau"]["cycles"])
        return PairedCover(labels, sigma, tau, m, n)

    @staticmethod
    def from_json(text: str) -> "PairedCover":
        return PairedCover.from_json_dict(json.loads(text))

    def swapped(self) -> "PairedCover":
        return PairedCover(
            self.branch_points,
            self.tau,
            self.sigma,
            self.degree_y,
            self.degree_x,
        )


class Component:
    """One component of the fiber product: an orbit on tensor letters."""

    def __init__(self, pair: CoverPair, orbit: tuple[int, ...]) -> None:
        self.pair = pair
        self.orbit = tuple(sorted(orbit))
        self.letter_set = frozenset(self.orbit)
        m, n = pair.degree_x, pair.degree_y
        size = len(self.orbit)
        if size % m != 0 or size % n != 0:
            raise RuntimeError(
                f"orbit size {size} not divisible by both degrees {m}, {n}"
            )
        self.deg_over_z = size
        self.deg_over_x = size // m  # k
        self.deg_over_y = size // n  # l

    # -- orbit correspondences ---------------------------------------------

    @cached_property
    def x_orbit_over_y1(self) -> tuple[int, ...]:
        """J: the x-letters x with (x, 1) in this orbit — an orbit of the
        stabilizer of y-letter 1 acting on x-letters; |J| = deg_over_y."""
        n = self.pair.degree_y
        out = tuple(
            x
            for x in range(1, self.pair.degree_x + 1)
            if _tensor_letter(x, 1, n) in self.letter_set
        )
        assert len(out) == self.deg_over_y
        return out

    @cached_property
    def y_orbit_over_x1(self) -> tuple[int, ...]:
        """I: the y-letters y with (1, y) in this orbit; |I| = deg_over_x."""
        n = self.pair.degree_y
        out = tuple(
            y
            for y in range(1, n + 1)
            if _tensor_letter(1, y, n) in self.letter_set
        )
        assert len(out) == self.deg_over_x
        return out

    @cached_property
    def subgroup_witness(self) -> tuple[GeneratedGroup, int]:
        """The joint-group stabilizer H of the least tensor letter of the
        orbit (the intersection of the two point stabilizers), with its
        index; the index equals the component degree over z."""
        tensor_group = self.pair.tensor_group
        least = self.orbit[0]
        stab = tensor_group.point_stabilizer(least)
        index = tensor_group.order() // stab.order()
        if index != self.deg_over_z:
            raise RuntimeError("stabilizer index does not match orbit size")
        return stab, index

    # -- genus, method 1 ----------------------------------------------------

    @cached_property
    def restricted_cycles(self) -> tuple[Permutation, ...]:
        """The joint branch cycles restricted to the orbit, relabeled to
        1..|orbit| by sorted order."""
        position = {letter: i + 1 for i, letter in enumerate(self.orbit)}
        out = []
        for perm in self.pair.tensor_cycles:
            images = [0] * len(self.orbit)
            for letter in self.orbit:
                images[position[letter] - 1] = position[perm.apply(letter)]
            out.append(Permutation(tuple(images)))
        return tuple(out)

    @cached_property
    def genus_method1(self) -> int:
        index_sum = sum(p.index() for p in self.restricted_cycles)
        return genus_from_tuple(self.deg_over_z, index_sum)

    # -- genus, method 2: branch cycles of the projection to the y-line ----

    @cached_property
    def _pry_entry_data(self) -> list[tuple[str, Permutation]]:
        """Raw branch-cycle representatives of the projection to the
        y-line, one per (branch point, disjoint y-cycle), before the
        product-one adjustment.  Labels identify the y-point.

        For the y-cycle c of the branch cycle pair (sigma_i, tau_i),
        with t = len(c) and base point y_b = min(c): conjugate the t-th
        power of the joint cycle by a transversal element carrying y_b
        to the y-letter 1; its tau-part then fixes 1, so its sigma-part
        preserves J, and the restriction of that sigma-part to J is the
        local branch cycle at the y-point.
        """
        pair = self.pair
        m, n = pair.degree_x, pair.degree_y
        joint = pair.joint_group
        # BFS transversal in the joint group for the tau-action:
        # carrier[y] maps the y-letter 1 to y (in joint coordinates).
        y1 = m + 1
        carrier: dict[int, Permutation] = {y1: identity(m + n)}
        queue = [y1]
        while queue:
            p = queue.pop(0)
            for g in joint.generators:
                q = g.apply(p)
                if q >= m + 1 and q not in carrier:
                    carrier[q] = carrier[p] * g
                    queue.append(q)
        J = self.x_orbit_over_y1
        position = {x: i + 1 for i, x in enumerate(J)}
        ell = len(J)
        out: list[tuple[str, Permutation]] = []
        for i, (label, b) in enumerate(zip(pair.branch_points, pair.tau)):
            for cyc in b.cycles(include_fixed=True):
                t = len(cyc)
                y_b = m + min(cyc)
                u = carrier[y_b]
                gamma = joint.generators[i]
                delta = u * (gamma**t) * u.inverse()
                if delta.apply(m + 1) != m + 1:
                    raise RuntimeError("conjugated cycle fails to fix y-letter 1")
                images = [0] * ell
                for x in J:
                    img = delta.apply(x)
                    if img not in position:
                        raise RuntimeError("restriction does not preserve J")
                    images[position[x] - 1] = position[img]
                restricted = Permutation(tuple(images))
                out.append((f"{label}/y{min(cyc)}", restricted))
        return out

    @cached_property
    def _pry_image_group(self) -> GeneratedGroup:
        """The stabilizer of the y-letter 1 in the joint group, restricted
        to J — the monodromy group of the projection to the y-line."""
        pair = self.pair
        m = pair.degree_x
        stab = pair.joint_group.point_stabilizer(m + 1)
        J = self.x_orbit_over_y1
        position = {x: i + 1 for i, x in enumerate(J)}
        gens = []
        for g in stab.generators:
            images = [0] * len(J)
            for x in J:
                img = g.apply(x)
                if img not in position:
                    raise RuntimeError("stabilizer does not preserve J")
                images[position[x] - 1] = position[img]
            gens.append(Permutation(tuple(images)))
        return GeneratedGroup(len(J), gens)

    @cached_property
    def genus_method2(self) -> int:
        """Riemann–Hurwitz on the projection-to-y branch data: the
        component covers the y-curve with degree ``deg_over_y``, so
        2g - 2 = deg_over_y * (2g_y - 2) + sum of local indices, where
        g_y is the y-cover's genus.  The indices are conjugation
        invariants, so no product-one adjustment is needed."""
        index_sum = sum(p.index() for _, p in self._pry_entry_data)
        g_y = self.pair.tau_cover().genus()
        doubled = self.deg_over_y * (2 * g_y - 2) + index_sum + 2
        if doubled % 2 != 0 or doubled < 0:
            raise InvalidCoverError(
                f"inconsistent projection data: index sum {index_sum}, "
                f"base genus {g_y}"
            )
        return doubled // 2

    def pry_branch_cycles(self, search_cap: int = 10**6) -> Cover:
        """A validated branch-cycle description of the projection of this
        component to the y-line: degree deg_over_y, entries in the
        conjugacy classes produced by the local data, product one, and
        generating the projection's monodromy group.

        The raw local representatives are each conjugated by an element
        of the monodromy group (found by a deterministic reachability
        search) to restore product-one; identity entries are dropped.
        """
        ell = self.deg_over_y
        entries = [(lab, p) for lab, p in self._pry_entry_data if not p.is_identity]
        image_group = self._pry_image_group
        if ell == 1 or not entries:
            return Cover(ell, (), ())
        labels = [lab for lab, _ in entries]
        perms = [p for _, p in entries]
        adjusted = _product_one_adjust(perms, image_group, search_cap)
        cover = Cover(ell, tuple(labels), tuple(adjusted))
        report = cover.validate()
        if not (report.product_one and report.transitive):
            raise RuntimeError("projection branch cycles failed validation")
        return cover


def _product_one_adjust(
    perms: list[Permutation],
    image_group: GeneratedGroup,
    search_cap: int,
) -> list[Permutation]:
    """Conjugate each entry within its image-group class so the ordered
    product is the identity and the entries generate the image group.

    Uses forward reachability over partial products (state space bounded
    by |image group|), then a deterministic backtrack that prefers the
    untouched representatives; tries successive solutions until one
    generates the whole image group.
    """
    elements = image_group.elements()
    if len(elements) * len(perms) > search_cap:
        raise CapExceededError(
            "product-one adjustment search space exceeds cap"
        )
    target_order = image_group.order()
    # Distinct conjugates of each entry, original representative first.
    conjugate_sets: list[list[Permutation]] = []
    for p in perms:
        seen = {p}
        ordered = [p]
        for h in elements:
            q = p.conjugate(h)
            if q not in seen:
                seen.add(q)
                ordered.append(q)
        conjugate_sets.append(ordered)
    # Backward feasibility: feasible[j] = products completable to identity
    # using entries j..end.
    s = len(perms)
    feasible: list[set[Permutation]] = [set() for _ in range(s + 1)]
    feasible[s] = {identity(image_group.degree)}
    for j in range(s - 1, -1, -1):
        for q in conjugate_sets[j]:
            q_inv = q.inverse()
            for target in feasible[j + 1]:
                feasible[j].add(target * q_inv)
    start = identity(image_group.degree)
    if start not in feasible[0]:
        raise RuntimeError("no product-one realization exists in these classes")

    chosen: list[Permutation] = []

    def backtrack(j: int, prefix: Permutation) -> bool:
        if j == s:
            group = GeneratedGroup(image_group.degree, list(chosen))
            return group.order() == target_order
        for q in conjugate_sets[j]:
            nxt = prefix * q
            if nxt not in feasible[j + 1]:
                continue
            chosen.append(q)
            if backtrack(j + 1, nxt):
                return True
            chosen.pop()
        return False

    if not backtrack(0, start):
        raise RuntimeError(
            "no generating product-one realization found in these classes"
        )
    return chosen


# -- whole-pair operations ---------------------------------------------------


def pair_covers_over_common_points(
    cover_x: Cover, cover_y: Cover
) -> CoverPair:
    """Weakly pair two covers by aligning their branch-point labels over
    the union of the two label lists (identity entries fill the gaps).
    Shared labels must appear in compatible order."""
    labels: list[str] = []
    for b in cover_x.branch_points:
        labels.append(b)
    for b in cover_y.branch_points:
        if b not in labels:
            labels.append(b)
    sx = {b: p for b, p in zip(cover_x.branch_points, cover_x.cycles)}
    sy = {b: p for b, p in zip(cover_y.branch_points, cover_y.cycles)}
    sigma = tuple(sx.get(b, identity(cover_x.degree)) for b in labels)
    tau = tuple(sy.get(b, identity(cover_y.degree)) for b in labels)
    return CoverPair(tuple(labels), sigma, tau, cover_x.degree, cover_y.degree)


def double_transitive_complement(c: Cover) -> int:
    """Genus of the non-diagonal component of the self fiber product of a
    doubly transitive cover, computed from the cycle-pair ramification
    arithmetic; cross-checked against the orbit-restriction genus."""
    c.require_valid()
    if not c.is_doubly_transitive():
        raise ValueError("cover is not doubly transitive")
    m = c.degree
    if m == 2:
        return 0
    # Ramification route: the index of a branch cycle on the full tensor
    # square is the sum over ordered cycle pairs (s, t) of s*t - gcd(s, t);
    # subtracting the diagonal's contribution leaves the complement.
    index_sum = 0
    for p in c.cycles:
        cycs = p.cycles(include_fixed=True)
        tensor_index = 0
        for ca in cycs:
            for cb in cycs:
                s, t = len(ca), len(cb)
                tensor_index += s * t - gcd(s, t)
        index_sum += tensor_index - p.index()
    genus_ram = genus_from_tuple(m * (m - 1), index_sum)
    # Orbit route via the generic component machinery.
    pair = CoverPair(
        c.branch_points, c.cycles, c.cycles, c.degree, c.degree
    )
    complement = [
        comp for comp in pair.components if comp.deg_over_z == m * (m - 1)
    ]
    if len(complement) != 1:
        raise RuntimeError("expected exactly one non-diagonal component")
    genus_orbit = complement[0].genus_method1
    if genus_ram != genus_orbit:
        raise RuntimeError(
            f"complement genus mismatch: {genus_ram} vs {genus_orbit}"
        )
    return genus_ram


def _quotient_covers(c: Cover) -> list[tuple[str, Cover]]:
    """The cover itself plus its quotients through every nontrivial block
    system (degree = number of blocks); degree-1 quotients are excluded."""
    out: list[tuple[str, Cover]] = [("identity-quotient", c)]
    group = c.group()
    for bs in group.block_systems():
        if bs.num_blocks <= 1:
            continue
        quotient_cycles = []
        labels = []
        for label, p in zip(c.branch_points, c.cycles):
            images = tuple(
                bs.block_of(p.apply(bs.blocks[b - 1][0]))
                for b in range(1, bs.num_blocks + 1)
            )
            q = Permutation(images)
            if not q.is_identity:
                labels.append(label)
                quotient_cycles.append(q)
        if quotient_cycles:
            out.append(
                (
                    f"blocks-of-size-{bs.block_size}",
                    Cover(bs.num_blocks, tuple(labels), tuple(quotient_cycles)),
                )
            )
    return out


def detect_clc(f: Cover, g: Cover) -> dict | None:
    """Search for a common left composite: a shared quotient cover of
    degree at least 2 through which both covers factor.  Returns a
    witness description or None."""
    for name_f, qf in _quotient_covers(f):
        if qf.degree < 2:
            continue
        for name_g, qg in _quotient_covers(g):
            if qg.degree != qf.degree:
                continue
            if qf.branch_points != qg.branch_points:
                continue
            conj = equivalent_tuples(qf.cycles, qg.cycles, qf.degree)
            if conj is not None:
                return {
                    "f_quotient": name_f,
                    "g_quotient": name_g,
                    "degree": qf.degree,
                    "conjugator": str(conj),
                }
    return None


def genus0_witness(pair: PairedCover, component: Component) -> dict:
    """For a genus-0 component, the two branch-cycle covers W -> x-line
    and W -> y-line whose degrees factor the component's degree over z."""
    if component.genus_method1 != 0:
        raise ValueError("component genus is not 0")
    cover_over_y = component.pry_branch_cycles()
    swapped = pair.swapped()
    n = pair.degree_y
    swapped_orbit = tuple(
        _tensor_letter(y, x, pair.degree_x)
        for letter in component.orbit
        for x, y in [_tensor_pair(letter, n)]
    )
    swapped_component = Component(swapped, swapped_orbit)
    cover_over_x = swapped_component.pry_branch_cycles()
    assert cover_over_y.degree * pair.degree_y == component.deg_over_z
    assert cover_over_x.degree * pair.degree_x == component.deg_over_z
    return {"cover_over_x": cover_over_x, "cover_over_y": cover_over_y}


@dataclass(frozen=True)
class ScreenReport:
    """Flags for the genus-growth screening of a component projection.

    Each fail2* flag marks a way the component can keep composing covers
    from growing in genus; ``dec_var_not_excluded`` marks that an
    alternative simultaneous decomposition has not been ruled out.
    """

    fail2a: bool
    ochar: Fraction
    galois_closure_genus: int
    fail2b_quotients: tuple[str, ...]
    fail2c: bool | None
    fail2c_notes: str
    fail2d: bool | None
    dec_var_not_excluded: bool
    notes: tuple[str, ...]

    @property
    def any_flag(self) -> bool:
        return (
            self.fail2a
            or bool(self.fail2b_quotients)
            or bool(self.fail2c)
            or bool(self.fail2d)
        )


def screen_g1(
    pr_w: Cover,
    g1: Cover,
    joint: CoverPair | None = None,
    second_representation_known: bool = False,
) -> ScreenReport:
    """Screen a component projection pr_w against a candidate composing
    cover g1 over the same target line."""
    pr_w.require_valid()
    g1.require_valid()
    notes: list[str] = []

    ochar = pr_w.orbifold_char()
    ghat = pr_w.galois_closure_genus()
    fail2a = ochar >= 0
    if fail2a:
        notes.append(
            f"galois closure of the projection has genus {ghat} (<= 1)"
        )

    fail2b: list[str] = []
    for name, q in _quotient_covers(pr_w):
        if name == "identity-quotient":
            continue
        if q.genus() == 0:
            fail2b.append(f"{name}:degree-{q.degree}")

    fail2c: bool | None = None
    fail2c_notes = ""
    if pr_w.genus() == 1:
        pr_labels = set(pr_w.branch_points)
        contained = set(g1.branch_points) <= pr_labels
        dominated = False
        if contained:
            by_label = dict(zip(pr_w.branch_points, pr_w.cycles))
            dominated = all(
                dominates(by_label[label], cyc)
                for label, cyc in zip(g1.branch_points, g1.cycles)
            )
        s = len(g1.branch_points)
        orders = [c.order() for c in g1.cycles]
        order_bound_ok = s <= 3 or (s == 4 and all(o == 2 for o in orders))
        fail2c = contained and dominated and order_bound_ok
        fail2c_notes = (
            f"branch containment={contained}, domination={dominated}, "
            f"s={s}, orders={orders}, order-bound-ok={order_bound_ok}"
        )
    else:
        fail2c_notes = f"projection genus is {pr_w.genus()}, not 1"

    fail2d: bool | None = None
    if joint is not None:
        fail2d = len(joint.components) > 1
        if fail2d:
            notes.append(
                "the fiber product of the projection with g1 is reducible"
            )

    dec_var = second_representation_known or bool(
        pr_w.group().block_systems()
    )
    if dec_var:
        notes.append("dec-var not excluded")

    return ScreenReport(
        fail2a=fail2a,
        ochar=ochar,
        galois_closure_genus=ghat,
        fail2b_quotients=tuple(fail2b),
        fail2c=fail2c,
        fail2c_notes=fail2c_notes,
        fail2d=fail2d,
        dec_var_not_excluded=dec_var,
        notes=tuple(notes),
    )
