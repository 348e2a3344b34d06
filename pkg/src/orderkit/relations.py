"""Auxiliary order relations, each with a definitional brute-force oracle.

Every relation here quantifies over some family of subsets (directed sets,
arbitrary subsets, upper sets).  The oracle modes execute those definitions
literally; the fast/closed modes use finite-carrier collapses, and the two
must agree everywhere (enforced by the test suite on whole enumeration
universes).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import limits
from .poset import FiniteLattice, FinitePoset, Subset, iter_bits, mask_of


@dataclass(frozen=True)
class Relation:
    """An n x n boolean table over one carrier; ``rows[x]`` has bit y set
    when the relation holds at (x, y)."""

    owner: FinitePoset
    rows: tuple

    def holds(self, x, y):
        return bool(self.rows[x] >> y & 1)

    def pairs(self):
        for x in range(self.owner.n):
            for y in iter_bits(self.rows[x]):
                yield (x, y)

    def as_bool_table(self):
        n = self.owner.n
        return tuple(tuple(bool(self.rows[x] >> y & 1) for y in range(n)) for x in range(n))


def _directed_with_sup(P, cap):
    """(mask, sup) for every directed subset whose supremum exists."""
    out = []
    for mask in P.iter_directed_masks(cap):
        s = P.sup_mask(mask)
        if s is not None:
            out.append((mask, s))
    return out


def way_below(P: FinitePoset, mode="fast", cap=None) -> Relation:
    """x way-below y: every directed set with an existing supremum >= y
    meets the up set of x.

    The oracle enumerates all directed subsets.  On a finite carrier every
    directed set contains its supremum, which collapses the relation to the
    order itself; fast mode returns that.
    """
    n = P.n
    if mode == "fast":
        return Relation(P, P.up)
    if mode != "oracle":
        raise ValueError(f"unknown mode {mode!r}")
    rows = [P.full_mask] * n
    for dmask, s in _directed_with_sup(P, cap):
        for x in range(n):
            if not P.up[x] & dmask:
                # D misses the up set of x: x is not way-below anything <= sup D
                rows[x] &= ~P.down[s]
    return Relation(P, tuple(rows))


def approximants(P: FinitePoset, x: int, mode="fast", cap=None) -> Subset:
    """All elements way-below x; equals the down set of x on finite carriers."""
    rel = way_below(P, mode, cap)
    mask = 0
    for p in range(P.n):
        if rel.holds(p, x):
            mask |= 1 << p
    return Subset(P, mask)


def way_below_sets(P: FinitePoset, f: Subset, g: Subset, cap=None) -> bool:
    """Set-to-set approximation: every directed set whose existing supremum
    lies in the up set of g already meets the up set of f."""
    fmask, gmask = P._mask(f), P._mask(g)
    if fmask == 0 or gmask == 0:
        raise ValueError("both subsets must be nonempty")
    up_f = P.up_closure_mask(fmask)
    up_g = P.up_closure_mask(gmask)
    for dmask, s in _directed_with_sup(P, cap):
        if up_g >> s & 1 and not dmask & up_f:
            return False
    return True


@dataclass(frozen=True)
class FinFamily:
    """The up sets of finite subsets approximating a single element,
    reported as the antichain of minimal members plus the family size."""

    owner: FinitePoset
    element: int
    members: tuple  # all distinct up-set masks, sorted by (size, indices)
    minimal: tuple  # the inclusion-minimal members, same order

    @property
    def size(self):
        return len(self.members)

    def minimal_subsets(self):
        return tuple(Subset(self.owner, m) for m in self.minimal)

    def intersection_mask(self):
        acc = self.owner.full_mask
        for m in self.members:
            acc &= m
        return acc


def fin_family(P: FinitePoset, x: int, cap=None) -> FinFamily:
    """Collect the up sets of all nonempty finite subsets F with F
    approximating {x} (set way-below, singleton on the right)."""
    limits.check_subset_cap(P.n, "approximating-family enumeration", cap)
    seen = set()
    target = Subset(P, 1 << x)
    for fmask in range(1, 1 << P.n):
        if way_below_sets(P, Subset(P, fmask), target, cap):
            seen.add(P.up_closure_mask(fmask))
    members = sorted(seen, key=lambda m: (m.bit_count(), tuple(iter_bits(m))))
    minimal = tuple(
        m for m in members if not any(o != m and o & ~m == 0 for o in members)
    )
    return FinFamily(P, x, tuple(members), minimal)


def way_way_below(L: FiniteLattice, mode="closed", cap=None) -> Relation:
    """u way-way-below v: every subset S with join >= v has a member above u.

    Oracle mode quantifies over all 2^n subsets including the empty one.
    Closed mode uses the worst-case witness S = complement of the up set of
    u, whose join decides the relation: u is way-way-below v exactly when
    that join is not >= v.
    """
    P = L.base
    n = L.n
    if mode == "closed":
        rows = []
        for u in range(n):
            m = L.join_mask(P.full_mask & ~P.up[u])
            rows.append(P.full_mask & ~P.down[m])
        return Relation(P, tuple(rows))
    if mode != "oracle":
        raise ValueError(f"unknown mode {mode!r}")
    limits.check_subset_cap(n, "subset enumeration for way-way-below", cap)
    rows = [P.full_mask] * n
    for smask in range(1 << n):
        j = L.join_mask(smask)
        down_s = P.down_closure_mask(smask)
        above = P.down[j]  # all v with join S >= v
        for u in range(n):
            if not down_s >> u & 1:
                rows[u] &= ~above
    return Relation(P, tuple(rows))


def prec(L: FiniteLattice, mode="fast", cap=None) -> Relation:
    """x below y in the upper-set interpolation order: every upper set
    inside the up set of y is already inside the up set of x.

    Single upper sets suffice on a finite carrier: any intersection of a
    nonempty collection of upper sets is itself an upper set and the whole
    finite collection can serve as the finitely-many subcollection.  Fast
    mode returns the order itself, the finite collapse of the definition.
    """
    P = L.base
    n = L.n
    if mode == "fast":
        return Relation(P, P.up)
    if mode != "oracle":
        raise ValueError(f"unknown mode {mode!r}")
    limits.check_subset_cap(n, "upper-set enumeration for interpolation order", cap)
    rows = [P.full_mask] * n
    for v in P.iter_upper_masks():
        inside_y = mask_of(y for y in range(n) if not v & ~P.up[y])
        for x in range(n):
            if v & ~P.up[x]:
                rows[x] &= ~inside_y
    return Relation(P, tuple(rows))
