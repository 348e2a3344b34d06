"""Scott topology on a finite poset and its lattice of opens.

On a finite carrier every directed set contains its supremum, so the Scott
opens are exactly the upper sets.  The definitional checks are still
implemented and cross-checked against that collapse.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import limits
from .errors import SizeLimitError
from .poset import FiniteLattice, FinitePoset, Subset, iter_bits


def is_scott_open(P: FinitePoset, u: Subset, mode="definitional", cap=None) -> bool:
    """Upper, and every directed set with an existing supremum inside the
    set already meets it.  The ``upper`` mode checks upperness only, the
    finite-carrier equivalent."""
    mask = u.mask if isinstance(u, Subset) else u
    upper = P.up_closure_mask(mask) == mask
    if mode == "upper":
        return upper
    if mode != "definitional":
        raise ValueError(f"unknown mode {mode!r}")
    if not upper:
        return False
    for dmask in P.iter_directed_masks(cap):
        s = P.sup_mask(dmask)
        if s is not None and mask >> s & 1 and not dmask & mask:
            return False
    return True


def scott_closure(P: FinitePoset, s: Subset, mode="fast") -> Subset:
    """Smallest Scott-closed superset; the down closure on finite carriers.

    Definitional mode intersects all Scott-closed supersets instead and is
    kept for cross-checking.
    """
    mask = s.mask if isinstance(s, Subset) else s
    if mode == "fast":
        return Subset(P, P.down_closure_mask(mask))
    if mode != "definitional":
        raise ValueError(f"unknown mode {mode!r}")
    acc = P.full_mask
    for u in P.iter_upper_masks():
        closed = P.full_mask ^ u
        if not mask & ~closed:
            acc &= closed
    return Subset(P, acc)


def _subset_label(P, mask):
    return "{" + ",".join(P.labels[i] for i in iter_bits(mask)) + "}"


def _lattice_of_set_family(P, masks, name):
    """Lattice of a union/intersection-closed family ordered by inclusion."""
    masks = sorted(masks, key=lambda m: (m.bit_count(), tuple(iter_bits(m))))
    index = {m: i for i, m in enumerate(masks)}
    k = len(masks)
    labels = tuple(_subset_label(P, m) for m in masks)
    rows = []
    for i in range(k):
        row = 0
        for j in range(k):
            if not masks[i] & ~masks[j]:
                row |= 1 << j
        rows.append(row)
    base = FinitePoset(labels, rows, name=name)
    join = []
    meet = []
    for i in range(k):
        jrow = []
        mrow = []
        for j in range(k):
            jrow.append(index[masks[i] | masks[j]])
            mrow.append(index[masks[i] & masks[j]])
        join.append(tuple(jrow))
        meet.append(tuple(mrow))
    lattice = FiniteLattice(
        base=base,
        join=tuple(join),
        meet=tuple(meet),
        bottom=index[0],
        top=index[P.full_mask],
    )
    return masks, lattice


@dataclass(frozen=True)
class OpenSetLattice:
    """A family of subsets of one poset, with the lattice they form under
    inclusion (union as join, intersection as meet)."""

    base_poset: FinitePoset
    opens: tuple  # Subset values in lattice element order
    lattice: FiniteLattice

    @property
    def masks(self):
        return tuple(s.mask for s in self.opens)

    def index_of_mask(self, mask):
        try:
            return self.masks.index(mask)
        except ValueError:
            raise KeyError(f"{mask:#x} is not a member set") from None


def _collect_upper_masks(P, limit):
    limit = limits.opens_limit(limit)
    out = []
    for m in P.iter_upper_masks():
        out.append(m)
        if len(out) > limit:
            raise SizeLimitError("upper-set enumeration", len(out), limit)
    return out


def scott_opens(P: FinitePoset, limit=None) -> OpenSetLattice:
    """The lattice of Scott-open subsets ordered by inclusion."""
    masks = _collect_upper_masks(P, limit)
    masks, lattice = _lattice_of_set_family(P, masks, name=f"sigma({P.name or 'P'})")
    return OpenSetLattice(P, tuple(Subset(P, m) for m in masks), lattice)


def scott_closed_lattice(P: FinitePoset, limit=None) -> OpenSetLattice:
    """The lattice of Scott-closed subsets (complements of opens) ordered by
    inclusion; order-dual to the open-set lattice via complementation."""
    masks = [P.full_mask ^ m for m in _collect_upper_masks(P, limit)]
    masks, lattice = _lattice_of_set_family(P, masks, name=f"gamma({P.name or 'P'})")
    return OpenSetLattice(P, tuple(Subset(P, m) for m in masks), lattice)


def complement_isomorphism(opens: OpenSetLattice, closeds: OpenSetLattice):
    """Explicit order anti-isomorphism between the two set lattices: the
    index map sending each open to its complement.  Raises if the map is
    not a bijection reversing the order, returns it otherwise."""
    P = opens.base_poset
    mapping = []
    for s in opens.opens:
        mapping.append(closeds.index_of_mask(P.full_mask ^ s.mask))
    if sorted(mapping) != list(range(len(closeds.opens))):
        raise AssertionError("complementation is not a bijection between the families")
    a, b = opens.lattice.base, closeds.lattice.base
    for i in range(a.n):
        for j in range(a.n):
            if a.leq(i, j) != b.leq(mapping[j], mapping[i]):
                raise AssertionError("complementation does not reverse inclusion")
    return tuple(mapping)
