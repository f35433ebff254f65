"""Regular subgroups of coset actions and the structure census.

A finite Galois group acting on the left cosets of a subgroup turns the
coset set S into a transitive permutation module.  This module lists every
regular subgroup of Perm(S) normalized by the image of that action, and
separately lists the normal complements of the subgroup inside the big
group ("descent" data); pushing a complement through the coset action
always lands in the enumerated family.  Two independent engines are
provided and cross-checked in tests:

* a naive engine: exhaustive search over fixed-point-free cycles of full
  length (cyclic candidates) and over commuting pairs of fixed-point-free
  p-elements (elementary abelian candidates), then the normalization
  filter — feasible for degree <= 10;
* a holomorph engine: for each abstract candidate group G, enumerate
  homomorphisms from the action image into the holomorph of G, read off a
  compatible labeling of S by G, and take the translation subgroup —
  feasible up to the prime-power cap.

Degrees whose group types are not exhausted by "cyclic or elementary
abelian of rank 2" are refused rather than enumerated incompletely.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from .reporting import Report, checked
from .variants import beta_images, cyclo_gen_images, sigma_images


class EnumerationRefusal(Exception):
    """Base class for explicit refusals of an enumeration request."""


class CapExceeded(EnumerationRefusal):
    def __init__(self, size: int, cap: int):
        self.size, self.cap = size, cap
        super().__init__("degree %d exceeds the configured cap %d" % (size, cap))


class UnsupportedInstance(EnumerationRefusal):
    pass


class SearchBudgetExceeded(EnumerationRefusal):
    pass


# degrees whose finite groups are all cyclic or elementary abelian of
# rank two: 1, primes, squares of primes, and square-free m coprime to
# the orders of the unit groups of its prime factors (cyclic-only m)
COMPLETE_ORDERS = frozenset({1, 2, 3, 4, 5, 7, 9, 11, 13, 15, 17, 19, 23, 25})

NAIVE_MAX_DEGREE = 10


# ---------------------------------------------------------------------------
# permutations and permutation groups

@dataclass(frozen=True, order=True)
class Perm:
    """A permutation of 0..d-1 given by its image vector."""

    images: tuple

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("image vector is not a bijection on 0..%d"
                             % (len(self.images) - 1))

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(tuple(range(degree)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Perm") -> "Perm":
        """Composition: (self * other)(x) = self(other(x))."""
        im = self.images
        return Perm(tuple(im[j] for j in other.images))

    def __call__(self, point: int) -> int:
        return self.images[point]

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(tuple(inv))

    def order(self) -> int:
        seen, result = [False] * len(self.images), 1
        for start in range(len(self.images)):
            if seen[start]:
                continue
            length, x = 0, start
            while not seen[x]:
                seen[x] = True
                x = self.images[x]
                length += 1
            a, b = result, length
            while b:
                a, b = b, a % b
            result = result * length // a
        return result

    def is_fixed_point_free(self) -> bool:
        return all(j != i for i, j in enumerate(self.images))


def mulclose(gens, limit: int | None = None):
    """Closure of a set of permutations under composition.

    Returns the set of group elements, or None if `limit` is given and the
    closure grows past it (used to prune non-homomorphic assignments).
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one permutation")
    ident = Perm.identity(gens[0].degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    if limit is not None and len(seen) >= limit:
                        return None
                    seen.add(y)
                    new.append(y)
        frontier = new
    return seen


class FiniteGroup:
    """A concrete permutation group: closed element list plus generators."""

    __slots__ = ("degree", "elements", "generators", "_set")

    def __init__(self, generators, elements=None):
        gens = tuple(generators)
        if not gens:
            raise ValueError("need at least one generator")
        degree = gens[0].degree
        if any(g.degree != degree for g in gens):
            raise ValueError("generators act on different point sets")
        closure = mulclose(gens)
        if elements is not None:
            if set(elements) != closure:
                raise ValueError("element list is not the closure of the "
                                 "generators")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "elements", tuple(sorted(closure)))
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "_set", frozenset(closure))

    def __setattr__(self, name, value):
        raise AttributeError("FiniteGroup is immutable")

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, perm: Perm) -> bool:
        return perm in self._set

    def __eq__(self, other) -> bool:
        return (isinstance(other, FiniteGroup)
                and self.degree == other.degree and self._set == other._set)

    def __hash__(self) -> int:
        return hash((self.degree, self._set))

    def __le__(self, other: "FiniteGroup") -> bool:
        return self.degree == other.degree and self._set <= other._set

    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def is_abelian(self) -> bool:
        gs = self.generators
        return all(a * b == b * a for a in gs for b in gs)

    def is_cyclic(self) -> bool:
        return any(g.order() == self.order for g in self.elements)

    def __repr__(self) -> str:
        return "FiniteGroup(order=%d, degree=%d)" % (self.order, self.degree)


# ---------------------------------------------------------------------------
# coset actions

def coset_action(gamma: FiniteGroup, delta: FiniteGroup):
    """Action of gamma on the left cosets of delta.

    Returns (number of cosets, mapping element -> permutation of cosets).
    The identity coset gets index 0 and coset indices follow the first
    appearance of a coset when scanning gamma's canonical element order,
    so the construction is deterministic.
    """
    if not delta <= gamma:
        raise ValueError("delta is not a subgroup of gamma")
    elt_to_coset: dict[Perm, int] = {}
    reps: list[Perm] = []
    for g in gamma.elements:
        if g in elt_to_coset:
            continue
        idx = len(reps)
        reps.append(g)
        for d in delta.elements:
            elt_to_coset[g * d] = idx
    size = len(reps)
    action = {}
    for g in gamma.elements:
        action[g] = Perm(tuple(elt_to_coset[g * r] for r in reps))
    return size, action


def is_regular(group: FiniteGroup, size: int) -> bool:
    """Transitive and fixed point free on 0..size-1 (hence order == size)."""
    if group.degree != size or group.order != size:
        return False
    ident = group.identity()
    for g in group.elements:
        if g != ident and not g.is_fixed_point_free():
            return False
    orbit = {0}
    frontier = [0]
    while frontier:
        new = []
        for x in frontier:
            for g in group.generators:
                y = g(x)
                if y not in orbit:
                    orbit.add(y)
                    new.append(y)
        frontier = new
    return len(orbit) == size


def action_image(gamma: FiniteGroup, delta: FiniteGroup):
    """The coset permutation image of gamma with its generator images."""
    size, action = coset_action(gamma, delta)
    gens = [action[g] for g in gamma.generators]
    ident = Perm.identity(size)
    if all(g == ident for g in gens):
        gens = [ident]
    return size, FiniteGroup(gens), action


# ---------------------------------------------------------------------------
# normal subgroups and almost-classical complements

def _normal_closure(gamma: FiniteGroup, seed: Perm) -> frozenset:
    conjugates = {seed}
    frontier = [seed]
    while frontier:
        new = []
        for x in frontier:
            for g in gamma.generators:
                y = g * x * g.inverse()
                if y not in conjugates:
                    conjugates.add(y)
                    new.append(y)
        frontier = new
    return frozenset(mulclose(conjugates))


def normal_subgroups(gamma: FiniteGroup) -> list[frozenset]:
    """All normal subgroups, as element sets.

    Every normal subgroup is the join of the normal closures of its
    elements, so closing the single-element normal closures under join
    is exhaustive.
    """
    ident = gamma.identity()
    found = {frozenset([ident])}
    for x in gamma.elements:
        found.add(_normal_closure(gamma, x))
    worklist = list(found)
    while worklist:
        fresh = []
        for a in list(found):
            for b in worklist:
                if a <= b or b <= a:
                    continue
                join = frozenset(mulclose(a | b))
                if join not in found:
                    found.add(join)
                    fresh.append(join)
        worklist = fresh
    return sorted(found, key=lambda s: (len(s), sorted(p.images for p in s)))


def almost_classical(gamma: FiniteGroup, delta: FiniteGroup) -> list[FiniteGroup]:
    """Normal complements of delta in gamma.

    Returns every normal subgroup N with N ∩ delta trivial and
    N·delta = gamma, as subgroups of gamma (not of the coset symmetric
    group); push them through the coset action to land in the enumerated
    regular family.
    """
    if not delta <= gamma:
        raise ValueError("delta is not a subgroup of gamma")
    ident = gamma.identity()
    index = gamma.order // delta.order
    out = []
    for nset in normal_subgroups(gamma):
        if len(nset) != index:
            continue
        if any(x != ident and x in delta for x in nset):
            continue
        products = {a * b for a in nset for b in delta.elements}
        if len(products) != gamma.order:
            raise AssertionError("order count violated by a complement")
        gens = _generating_sequence(sorted(nset))
        out.append(FiniteGroup(gens, nset))
    out.sort(key=lambda g: [p.images for p in g.elements])
    return out


def push_through_action(action: dict, subgroup: FiniteGroup) -> FiniteGroup:
    """Image of a subgroup of gamma inside the coset symmetric group."""
    gens = [action[g] for g in subgroup.generators]
    ident = Perm.identity(gens[0].degree)
    if all(g == ident for g in gens):
        gens = [ident]
    return FiniteGroup(gens, {action[g] for g in subgroup.elements})


def _generating_sequence(elements) -> list[Perm]:
    """Small deterministic generating sequence for a closed element list."""
    elements = sorted(elements)
    full = set(elements)
    if len(full) == 1:
        return [elements[0]]
    by_order = sorted(elements, key=lambda p: (-p.order(), p.images))
    top = by_order[0]
    if top.order() == len(full):
        return [top]
    for b in by_order:
        closed = mulclose([top, b])
        if closed == full:
            return [top, b]
    gens, closed = [], None
    for x in by_order:
        if closed is not None and x in closed:
            continue
        gens.append(x)
        closed = mulclose(gens)
        if closed == full:
            return gens
    raise AssertionError("element list is not closed")


# ---------------------------------------------------------------------------
# the naive engine: fixed-point-free candidates, then the filter

def _deadline_check(deadline: float | None):
    if deadline is not None and time.monotonic() > deadline:
        raise SearchBudgetExceeded("enumeration exceeded its time budget")


def _normalizes(lam_gens, members: frozenset) -> bool:
    for g in lam_gens:
        gi = g.inverse()
        if any(g * x * gi not in members for x in members):
            return False
    return True


def _naive_cyclic(size: int, lam_gens, deadline) -> set:
    """All regular cyclic subgroups, from fixed-point-free full cycles."""
    found: set[frozenset] = set()
    gen_pairs = [(g, g.inverse()) for g in lam_gens]
    ident = Perm.identity(size)
    count = 0
    for tail in itertools.permutations(range(1, size)):
        count += 1
        if count % 4096 == 0:
            _deadline_check(deadline)
        seq = (0,) + tail
        images = [0] * size
        for k in range(size):
            images[seq[k]] = seq[(k + 1) % size]
        cycle = Perm(tuple(images))
        powers = [ident]
        cur = cycle
        while cur != ident:
            powers.append(cur)
            cur = cur * cycle
        members = frozenset(powers)
        if members in found:
            continue
        if all(g * cycle * gi in members for g, gi in gen_pairs):
            found.add(members)
    return found


def _fpf_p_elements(size: int, p: int) -> list[Perm]:
    """Fixed-point-free elements of order p (products of size/p p-cycles)."""
    out: list[Perm] = []
    images = [-1] * size

    def place(remaining: tuple):
        if not remaining:
            out.append(Perm(tuple(images)))
            return
        head = remaining[0]
        rest = remaining[1:]
        for partners in itertools.permutations(rest, p - 1):
            cycle = (head,) + partners
            for k in range(p):
                images[cycle[k]] = cycle[(k + 1) % p]
            left = tuple(x for x in rest if x not in partners)
            place(left)
        for x in remaining:
            images[x] = -1

    place(tuple(range(size)))
    return out


def _naive_elementary(size: int, p: int, lam_gens, deadline) -> set:
    """Regular rank-two elementary abelian subgroups from commuting pairs
    of fixed-point-free p-elements."""
    found: set[frozenset] = set()
    gen_pairs = [(g, g.inverse()) for g in lam_gens]
    pool = _fpf_p_elements(size, p)
    pool_set = set(pool)
    for c1 in pool:
        _deadline_check(deadline)
        orbits = []
        seen = [False] * size
        for start in range(size):
            if seen[start]:
                continue
            orb, x = [], start
            while not seen[x]:
                seen[x] = True
                orb.append(x)
                x = c1(x)
            orbits.append(orb)
        reps = [orb[0] for orb in orbits]
        where = {}
        for oi, orb in enumerate(orbits):
            for t, x in enumerate(orb):
                where[x] = (oi, t)
        for order_rest in itertools.permutations(range(1, p)):
            chain = (0,) + order_rest          # orbit cycle O_{chain[k]} -> O_{chain[k+1]}
            for choices in itertools.product(range(p), repeat=p):
                images = [-1] * size
                ok = True
                for k in range(p):
                    src, dst = chain[k], chain[(k + 1) % p]
                    target = orbits[dst][choices[k]]
                    for t in range(p):
                        x = orbits[src][t]
                        oi, s = where[target]
                        images[x] = orbits[oi][(s + t) % p]
                c2 = Perm(tuple(images))
                if c2 not in pool_set or c1 * c2 != c2 * c1:
                    continue
                members = set()
                a = Perm.identity(size)
                for _ in range(p):
                    b = a
                    for _ in range(p):
                        members.add(b)
                        b = b * c2
                    a = a * c1
                if len(members) != size:
                    continue
                members = frozenset(members)
                if members in found:
                    continue
                if all(g * c * gi in members
                       for g, gi in gen_pairs for c in (c1, c2)):
                    found.add(members)
    return found


# ---------------------------------------------------------------------------
# the holomorph engine: label the cosets by an abstract group

def _holomorph_cyclic(m: int) -> list[Perm]:
    """x -> t + u*x mod m for all translations t and units u."""
    out = []
    for u in range(1, m):
        a, b = u, m
        while b:
            a, b = b, a % b
        if a != 1:
            continue
        for t in range(m):
            out.append(Perm(tuple((t + u * x) % m for x in range(m))))
    return out


def _holomorph_elementary(p: int) -> list[Perm]:
    """x -> v + M*x on F_p^2 (index a*p+b) for all v and all M in GL_2."""
    m = p * p
    out = []
    for a, b, c, d in itertools.product(range(p), repeat=4):
        if (a * d - b * c) % p == 0:
            continue
        for v0, v1 in itertools.product(range(p), repeat=2):
            images = []
            for x in range(m):
                x0, x1 = divmod(x, p)
                images.append(((v0 + a * x0 + b * x1) % p) * p
                              + (v1 + c * x0 + d * x1) % p)
            out.append(Perm(tuple(images)))
    return out


def _translations_cyclic(m: int) -> list[Perm]:
    return [Perm(tuple((t + x) % m for x in range(m))) for t in range(m)]


def _translations_elementary(p: int) -> list[Perm]:
    m = p * p
    out = []
    for t in range(m):
        t0, t1 = divmod(t, p)
        out.append(Perm(tuple(((t0 + x // p) % p) * p + (t1 + x % p) % p
                              for x in range(m))))
    return out


def _pair_closure_is_graph(gen_pairs, group_order: int) -> dict | None:
    """Close pairs (g, h) under componentwise composition.

    The assignment g_i -> h_i extends to a homomorphism exactly when the
    closure has one pair per group element; in that case the closure *is*
    the graph of the homomorphism and is returned as a dict.
    """
    degree_l = gen_pairs[0][0].degree
    degree_r = gen_pairs[0][1].degree
    ident = (Perm.identity(degree_l), Perm.identity(degree_r))
    seen = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            for g in gen_pairs:
                y = (x[0] * g[0], x[1] * g[1])
                if y not in seen:
                    if len(seen) >= group_order:
                        return None
                    seen.add(y)
                    new.append(y)
        frontier = new
    if len(seen) != group_order:
        return None
    return dict(seen)


def _label_cosets(size: int, lam_gens, hol_images) -> list | None:
    """Equivariant labeling of the cosets by group points, basepoint 0 -> 0.

    Walks the action graph; every edge is checked, so an inconsistent
    assignment (one that does not factor through the point stabilizer) is
    rejected, as is a non-bijective labeling.
    """
    labels = [-1] * size
    labels[0] = 0
    frontier = [0]
    while frontier:
        new = []
        for x in frontier:
            for g, h in zip(lam_gens, hol_images):
                y = g(x)
                want = h(labels[x])
                if labels[y] == -1:
                    labels[y] = want
                    new.append(y)
                elif labels[y] != want:
                    return None
        frontier = new
    if sorted(labels) != list(range(size)):
        return None
    return labels


def _holomorph_search(size: int, lam_group: FiniteGroup, hol: list[Perm],
                      translations: list[Perm], deadline) -> set:
    """Regular subgroups of a fixed abstract type normalized by the image.

    Every such subgroup N yields, after labeling the cosets by N from a
    basepoint, a homomorphism of the action image into the holomorph of
    the abstract model (the normalizer of its translation group), under
    which the labeling is equivariant.  Enumerating the homomorphisms and
    re-reading labelings therefore recovers every N.
    """
    lam_gens = _generating_sequence(lam_group.elements)
    gen_orders = [g.order() for g in lam_gens]
    candidates = []
    for o in gen_orders:
        candidates.append([h for h in hol if o % h.order() == 0])
    found: set[frozenset] = set()
    count = 0
    for assignment in itertools.product(*candidates):
        count += 1
        if count % 512 == 0:
            _deadline_check(deadline)
        rho = _pair_closure_is_graph(list(zip(lam_gens, assignment)),
                                     lam_group.order)
        if rho is None:
            continue
        labels = _label_cosets(size, lam_gens, assignment)
        if labels is None:
            continue
        position = [0] * size
        for x, lab in enumerate(labels):
            position[lab] = x
        members = frozenset(
            Perm(tuple(position[tr(labels[x])] for x in range(size)))
            for tr in translations)
        if members in found:
            continue
        if not _normalizes(lam_group.generators, members):
            raise AssertionError("holomorph transport produced an "
                                 "unnormalized subgroup")
        found.add(members)
    return found


# ---------------------------------------------------------------------------
# the public enumeration

def _prime_power(m: int):
    if m < 2:
        return None
    for p in range(2, m + 1):
        if p * p > m:
            break
        if m % p == 0:
            k = 0
            while m % p == 0:
                m //= p
                k += 1
            return (p, k) if m == 1 else None
    return (m, 1)


def enumerate_regular_normalized(gamma: FiniteGroup, delta: FiniteGroup,
                                 engine: str = "auto",
                                 cap_generic: int = 15,
                                 cap_prime_power: int = 27,
                                 budget_seconds: float = 60.0
                                 ) -> list[FiniteGroup]:
    """All regular subgroups of the coset symmetric group normalized by
    the image of gamma, deduplicated and canonically sorted.

    Refuses degrees over the cap (generic vs prime-power), degrees whose
    group types go beyond cyclic / elementary abelian of rank two, and
    searches that blow the time budget.
    """
    if engine not in ("auto", "naive", "holomorph"):
        raise ValueError("unknown engine %r" % (engine,))
    size, lam_group, action = action_image(gamma, delta)
    pp = _prime_power(size)
    cap = cap_prime_power if pp is not None else cap_generic
    if size > cap:
        raise CapExceeded(size, cap)
    if size not in COMPLETE_ORDERS:
        raise UnsupportedInstance(
            "degree %d admits group types beyond cyclic and elementary "
            "abelian of rank two; refusing an incomplete enumeration" % size)
    if size == 1:
        return [FiniteGroup([Perm.identity(1)])]
    if engine == "naive" and size > NAIVE_MAX_DEGREE:
        raise UnsupportedInstance(
            "the naive engine is limited to degree <= %d, got %d"
            % (NAIVE_MAX_DEGREE, size))
    deadline = (time.monotonic() + budget_seconds
                if budget_seconds is not None else None)
    lam_gens = lam_group.generators

    found: set[frozenset] = set()
    if engine == "naive":
        found |= _naive_cyclic(size, lam_gens, deadline)
        if pp is not None and pp[1] == 2:
            found |= _naive_elementary(size, pp[0], lam_gens, deadline)
    else:
        found |= _holomorph_search(size, lam_group, _holomorph_cyclic(size),
                                   _translations_cyclic(size), deadline)
        if pp is not None and pp[1] == 2:
            p = pp[0]
            found |= _holomorph_search(size, lam_group,
                                       _holomorph_elementary(p),
                                       _translations_elementary(p), deadline)

    results = []
    for members in sorted(found, key=lambda s: sorted(p.images for p in s)):
        group = FiniteGroup(_generating_sequence(members), members)
        if not is_regular(group, size):
            raise AssertionError("enumeration produced a non-regular group")
        results.append(group)
    return results


# ---------------------------------------------------------------------------
# JSON interfaces

def instance_from_json(data: dict):
    """Parse {degree, gamma_generators, delta_generators} into groups."""
    degree = int(data["degree"])
    def parse(key):
        gens = [Perm(tuple(int(x) for x in images))
                for images in data[key]]
        if not gens:
            gens = [Perm.identity(degree)]
        for g in gens:
            if g.degree != degree:
                raise ValueError("%s entry has degree %d, expected %d"
                                 % (key, g.degree, degree))
        return FiniteGroup(gens)
    return parse("gamma_generators"), parse("delta_generators")


def instance_to_json(gamma: FiniteGroup, delta: FiniteGroup) -> dict:
    return {
        "degree": gamma.degree,
        "gamma_generators": [list(g.images) for g in gamma.generators],
        "delta_generators": [list(g.images) for g in delta.generators],
    }


def results_to_json(gamma: FiniteGroup, delta: FiniteGroup,
                    results: list[FiniteGroup]) -> dict:
    """Serialized enumeration output with structural flags per subgroup."""
    size, action = coset_action(gamma, delta)
    pushed = {frozenset(push_through_action(action, n).elements)
              for n in almost_classical(gamma, delta)}
    subgroups = []
    for group in results:
        subgroups.append({
            "elements": [list(p.images) for p in group.elements],
            "regular": True,
            "normalized": True,
            "cyclic": group.is_cyclic(),
            "almost_classical": frozenset(group.elements) in pushed,
        })
    return {"degree": size, "count": len(results), "subgroups": subgroups}


# ---------------------------------------------------------------------------
# Galois groups of the radical towers, and the frozen census

def full_galois_group(p: int, n: int) -> FiniteGroup:
    """Galois group of the level-n closure over Q, on the exponent grid."""
    return FiniteGroup([Perm(tuple(sigma_images(p, n))),
                        Perm(tuple(cyclo_gen_images(p, n)))])


def zeta1_galois_group(p: int, n: int) -> FiniteGroup:
    """Galois group of the level-n closure over the level-1 cyclotomic."""
    return FiniteGroup([Perm(tuple(sigma_images(p, n))),
                        Perm(tuple(beta_images(p, n)))])


def cyclotomic_subgroup(p: int, n: int) -> FiniteGroup:
    """Subgroup fixing the radical generator (full cyclotomic part)."""
    return FiniteGroup([Perm(tuple(cyclo_gen_images(p, n)))])


def beta_subgroup(p: int, n: int) -> FiniteGroup:
    """Subgroup fixing the radical generator over the level-1 cyclotomic."""
    return FiniteGroup([Perm(tuple(beta_images(p, n)))])


@dataclass(frozen=True)
class CensusInstance:
    label: str
    gamma: FiniteGroup
    delta: FiniteGroup
    expected_structures: int
    expected_almost_classical: int


def census_instances() -> list[CensusInstance]:
    return [
        CensusInstance("cubic-radical-over-Q",
                       full_galois_group(3, 1), cyclotomic_subgroup(3, 1),
                       1, 1),
        CensusInstance("ninth-root-radical-over-Q",
                       full_galois_group(3, 2), cyclotomic_subgroup(3, 2),
                       1, 1),
        CensusInstance("ninth-root-radical-over-cyclotomic",
                       zeta1_galois_group(3, 2), beta_subgroup(3, 2),
                       3, 3),
    ]


def census_reports(instance: CensusInstance, engine: str = "auto",
                   budget_seconds: float = 300.0) -> list[Report]:
    """Count check plus cyclic-structure check for one census instance."""
    params = {"label": instance.label,
              "gamma_order": instance.gamma.order,
              "delta_order": instance.delta.order}
    state: dict = {}

    def counts():
        size, action = coset_action(instance.gamma, instance.delta)
        results = enumerate_regular_normalized(
            instance.gamma, instance.delta, engine=engine,
            budget_seconds=budget_seconds)
        state["results"] = results
        state["size"] = size
        if len(results) != instance.expected_structures:
            return False, {"stage": "structure-count", "got": len(results),
                           "expected": instance.expected_structures}
        complements = almost_classical(instance.gamma, instance.delta)
        if len(complements) != instance.expected_almost_classical:
            return False, {"stage": "complement-count",
                           "got": len(complements),
                           "expected": instance.expected_almost_classical}
        enumerated = {frozenset(g.elements) for g in results}
        for comp in complements:
            image = push_through_action(action, comp)
            if frozenset(image.elements) not in enumerated:
                return False, {"stage": "complement-not-enumerated"}
        return True, None

    def cyclic():
        if "results" not in state:
            return False, {"stage": "no-enumeration"}
        for group in state["results"]:
            if not group.is_cyclic() or group.order != state["size"]:
                return False, {"stage": "non-cyclic-structure",
                               "order": group.order}
        return True, None

    report_counts = checked("census-counts", dict(params), counts)
    report_cyclic = checked("census-cyclic", dict(params), cyclic)
    return [report_counts, report_cyclic]
