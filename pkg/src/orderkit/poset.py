"""Finite posets and lattices over small labeled carriers.

Elements are indexed 0..n-1.  The order relation and all subsets are stored
as integer bit masks (bit j of ``up[i]`` says i <= j), so closures, bound
scans and subset enumeration are plain integer arithmetic.  Values are
immutable after construction and safe to share between concurrent tasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import CycleError, NotALatticeError, UnknownLabelError
from . import limits


def iter_bits(mask):
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices):
    out = 0
    for i in indices:
        out |= 1 << i
    return out


class FinitePoset:
    """An immutable finite partial order with distinct element labels.

    ``up[i]`` is the mask of ``{j | i <= j}`` and ``down[j]`` the mask of
    ``{i | i <= j}``.  Construction validates reflexivity, antisymmetry and
    transitivity.
    """

    def __init__(self, labels, up, name=""):
        labels = tuple(labels)
        up = tuple(up)
        n = len(labels)
        if len(set(labels)) != n:
            raise ValueError("labels must be pairwise distinct")
        if len(up) != n:
            raise ValueError("one relation row per element required")
        self.name = name
        self.labels = labels
        self.n = n
        self.up = up
        self._validate()

    def _validate(self):
        n, up = self.n, self.up
        full = (1 << n) - 1
        for i in range(n):
            if up[i] & ~full:
                raise ValueError(f"relation row {i} mentions out-of-range elements")
            if not up[i] >> i & 1:
                raise ValueError(f"relation not reflexive at {self.labels[i]}")
        for i in range(n):
            for j in iter_bits(up[i]):
                if i != j and up[j] >> i & 1:
                    raise CycleError((self.labels[i], self.labels[j]))
                if up[j] & ~up[i]:
                    k = next(iter_bits(up[j] & ~up[i]))
                    raise ValueError(
                        "relation not transitive: "
                        f"{self.labels[i]} <= {self.labels[j]} <= {self.labels[k]}"
                    )

    def validate(self):
        """Re-check the order axioms; raises if violated."""
        self._validate()
        return True

    # -- basic views ---------------------------------------------------

    @cached_property
    def down(self):
        """Column masks: ``down[j]`` = mask of {i | i <= j}."""
        n, up = self.n, self.up
        cols = [0] * n
        for i in range(n):
            for j in iter_bits(up[i]):
                cols[j] |= 1 << i
        return tuple(cols)

    @cached_property
    def full_mask(self):
        return (1 << self.n) - 1

    @cached_property
    def _label_index(self):
        return {lab: i for i, lab in enumerate(self.labels)}

    def index_of(self, label):
        try:
            return self._label_index[label]
        except KeyError:
            raise UnknownLabelError(label) from None

    def leq(self, i, j):
        return bool(self.up[i] >> j & 1)

    def leq_matrix(self):
        """The relation as a tuple of boolean rows (row i: i <= j)."""
        return tuple(
            tuple(bool(self.up[i] >> j & 1) for j in range(self.n)) for i in range(self.n)
        )

    def subset(self, indices=()):
        return Subset(self, mask_of(indices))

    def subset_of_mask(self, mask):
        if mask & ~self.full_mask:
            raise ValueError("subset mask out of range")
        return Subset(self, mask)

    def subset_of_labels(self, labels):
        return Subset(self, mask_of(self.index_of(l) for l in labels))

    def __eq__(self, other):
        return (
            isinstance(other, FinitePoset)
            and self.labels == other.labels
            and self.up == other.up
            and self.name == other.name
        )

    def __hash__(self):
        return hash((self.labels, self.up))

    def __repr__(self):
        shown = self.name or ",".join(self.labels)
        return f"FinitePoset({shown!r}, n={self.n})"

    def with_name(self, name):
        return FinitePoset(self.labels, self.up, name=name)

    # -- closures, bounds, directedness --------------------------------

    def up_closure_mask(self, mask):
        acc = 0
        for i in iter_bits(mask):
            acc |= self.up[i]
        return acc

    def down_closure_mask(self, mask):
        acc = 0
        for i in iter_bits(mask):
            acc |= self.down[i]
        return acc

    def up_closure(self, s: "Subset") -> "Subset":
        """Smallest upper set containing s."""
        return Subset(self, self.up_closure_mask(self._mask(s)))

    def down_closure(self, s: "Subset") -> "Subset":
        return Subset(self, self.down_closure_mask(self._mask(s)))

    def _mask(self, s):
        if isinstance(s, Subset):
            if s.owner is not self and s.owner != self:
                raise ValueError("subset belongs to a different poset")
            return s.mask
        if isinstance(s, int):
            return s
        return mask_of(s)

    def is_directed_mask(self, mask):
        if mask == 0:
            return False
        members = list(iter_bits(mask))
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                if not self.up[members[a]] & self.up[members[b]] & mask:
                    return False
        return True

    def is_directed(self, s: "Subset") -> bool:
        """Nonempty, and every pair has an upper bound inside the subset."""
        return self.is_directed_mask(self._mask(s))

    def least_of_mask(self, mask):
        """Index of the least element of ``mask``, or None."""
        for m in iter_bits(mask):
            if not mask & ~self.up[m]:
                return m
        return None

    def greatest_of_mask(self, mask):
        for m in iter_bits(mask):
            if not mask & ~self.down[m]:
                return m
        return None

    def sup_mask(self, mask):
        """Least upper bound of the masked subset, or None (sup of the empty
        set is the bottom element when the poset has one)."""
        ub = self.full_mask
        for i in iter_bits(mask):
            ub &= self.up[i]
        return self.least_of_mask(ub)

    def inf_mask(self, mask):
        lb = self.full_mask
        for i in iter_bits(mask):
            lb &= self.down[i]
        return self.greatest_of_mask(lb)

    def sup(self, s: "Subset"):
        return self.sup_mask(self._mask(s))

    def inf(self, s: "Subset"):
        return self.inf_mask(self._mask(s))

    # -- subset enumeration ---------------------------------------------

    def iter_subset_masks(self, cap=None, what="subset enumeration"):
        limits.check_subset_cap(self.n, what, cap)
        return range(1 << self.n)

    def iter_directed_masks(self, cap=None):
        """Masks of all directed subsets, in ascending mask order."""
        for mask in self.iter_subset_masks(cap, "directed-subset enumeration"):
            if self.is_directed_mask(mask):
                yield mask

    @cached_property
    def _reverse_linear_extension(self):
        # strictly larger elements first; |up set| ascending is a valid order
        return tuple(sorted(range(self.n), key=lambda i: (self.up[i].bit_count(), i)))

    def iter_upper_masks(self):
        """All upper (up-closed) subsets, by include/exclude backtracking
        along a linear extension processed from maximal elements down."""
        n = self.n
        order = self._reverse_linear_extension
        strict_up = [self.up[i] & ~(1 << i) for i in range(n)]

        def walk(k, mask):
            if k == n:
                yield mask
                return
            e = order[k]
            yield from walk(k + 1, mask)
            if not strict_up[e] & ~mask:
                yield from walk(k + 1, mask | (1 << e))

        return walk(0, 0)

    def count_upper_masks(self, stop_after=None):
        count = 0
        for _ in self.iter_upper_masks():
            count += 1
            if stop_after is not None and count > stop_after:
                return count
        return count

    def iter_lower_masks(self):
        full = self.full_mask
        for u in self.iter_upper_masks():
            yield full ^ u

    # -- structure ------------------------------------------------------

    def hasse(self):
        """Cover pairs (i, j): i < j with nothing strictly between."""
        out = []
        n, up, down = self.n, self.up, self.down
        for i in range(n):
            strict = up[i] & ~(1 << i)
            for j in iter_bits(strict):
                between = strict & down[j] & ~(1 << j)
                if not between:
                    out.append((i, j))
        return out

    @cached_property
    def cover_rows(self):
        rows = [0] * self.n
        for i, j in self.hasse():
            rows[i] |= 1 << j
        return tuple(rows)

    def dual(self):
        """Same carrier with the order reversed; an involution."""
        return FinitePoset(self.labels, self.down, name=self.name)

    def as_lattice(self) -> "FiniteLattice":
        """Tabulate binary joins and meets; raises NotALatticeError with a
        witness pair if some bound is missing."""
        n = self.n
        if n == 0:
            raise NotALatticeError((), "join")
        join = [[0] * n for _ in range(n)]
        meet = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                s = self.sup_mask((1 << i) | (1 << j))
                if s is None:
                    raise NotALatticeError((self.labels[i], self.labels[j]), "join")
                m = self.inf_mask((1 << i) | (1 << j))
                if m is None:
                    raise NotALatticeError((self.labels[i], self.labels[j]), "meet")
                join[i][j] = join[j][i] = s
                meet[i][j] = meet[j][i] = m
        bottom = self.inf_mask(self.full_mask)
        top = self.sup_mask(self.full_mask)
        return FiniteLattice(
            base=self,
            join=tuple(map(tuple, join)),
            meet=tuple(map(tuple, meet)),
            bottom=bottom,
            top=top,
        )

    # -- canonical forms and isomorphism ---------------------------------

    @cached_property
    def _refined_ranks(self):
        """Iso-invariant element colors: degree invariants refined by the
        colors of the elements below and above, until stable."""
        n, up, down = self.n, self.up, self.down
        if n == 0:
            return ()
        strict_up = [up[i] & ~(1 << i) for i in range(n)]
        strict_down = [down[i] & ~(1 << i) for i in range(n)]
        covers_up = self.cover_rows
        covers_down = [0] * n
        for i, j in self.hasse():
            covers_down[j] |= 1 << i
        sig = [
            (
                strict_down[i].bit_count(),
                strict_up[i].bit_count(),
                covers_down[i].bit_count(),
                covers_up[i].bit_count(),
            )
            for i in range(n)
        ]
        ranks = self._intern(sig)
        while True:
            sig = [
                (
                    ranks[i],
                    tuple(sorted(ranks[j] for j in iter_bits(strict_down[i]))),
                    tuple(sorted(ranks[j] for j in iter_bits(strict_up[i]))),
                )
                for i in range(n)
            ]
            new = self._intern(sig)
            if len(set(new)) == len(set(ranks)):
                return tuple(new)
            ranks = new

    @staticmethod
    def _intern(signatures):
        order = {s: r for r, s in enumerate(sorted(set(signatures)))}
        return [order[s] for s in signatures]

    @cached_property
    def _canonical_order(self):
        """Old indices in canonical position order: the rank-respecting
        ordering whose relation table is lexicographically least (cells read
        in growing-submatrix order)."""
        n = self.n
        if n == 0:
            return ()
        ranks = self._refined_ranks
        required = sorted(ranks)
        by_rank = {}
        for i in range(n):
            by_rank.setdefault(ranks[i], []).append(i)
        up = self.up

        best_chunks = None
        best_order = None

        def chunk(order, e):
            bits = []
            for i in order:
                bits.append(bool(up[i] >> e & 1))
            for i in order:
                bits.append(bool(up[e] >> i & 1))
            return tuple(bits)

        def walk(order, chunks, used, ahead):
            nonlocal best_chunks, best_order
            k = len(order)
            if k == n:
                if ahead or best_chunks is None:
                    best_chunks = list(chunks)
                    best_order = list(order)
                return
            for e in by_rank[required[k]]:
                if used >> e & 1:
                    continue
                c = chunk(order, e)
                branch_ahead = ahead
                if not branch_ahead and best_chunks is not None:
                    if c > best_chunks[k]:
                        continue
                    if c < best_chunks[k]:
                        branch_ahead = True
                order.append(e)
                chunks.append(c)
                walk(order, chunks, used | (1 << e), branch_ahead)
                order.pop()
                chunks.pop()

        walk([], [], 0, False)
        return tuple(best_order)

    def canonical_key(self):
        """Hashable structure invariant: equal keys iff isomorphic posets."""
        order = self._canonical_order
        pos = {old: new for new, old in enumerate(order)}
        rows = []
        for old in order:
            row = 0
            for j in iter_bits(self.up[old]):
                row |= 1 << pos[j]
            rows.append(row)
        return tuple(rows)

    def canonical_form(self) -> "FinitePoset":
        """Relabeled copy in canonical element order; idempotent, and equal
        relation tables exactly for isomorphic posets."""
        order = self._canonical_order
        return FinitePoset(
            tuple(self.labels[old] for old in order), self.canonical_key(), name=self.name
        )

    def is_canonical(self):
        return self._canonical_order == tuple(range(self.n))

    def is_isomorphic(self, other: "FinitePoset") -> bool:
        if self.n != other.n:
            return False
        if sorted(self._refined_ranks) != sorted(other._refined_ranks):
            return False
        return self.canonical_key() == other.canonical_key()


class Subset:
    """A subset of one poset's carrier, stored as a bit mask."""

    __slots__ = ("owner", "mask")

    def __init__(self, owner, mask):
        if mask & ~owner.full_mask:
            raise ValueError("subset mask out of range")
        object.__setattr__(self, "owner", owner)
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, *_):
        raise AttributeError("Subset is immutable")

    @property
    def indices(self):
        return tuple(iter_bits(self.mask))

    @property
    def labels(self):
        return tuple(self.owner.labels[i] for i in iter_bits(self.mask))

    def __len__(self):
        return self.mask.bit_count()

    def __iter__(self):
        return iter_bits(self.mask)

    def __contains__(self, i):
        return bool(self.mask >> i & 1)

    def __eq__(self, other):
        return (
            isinstance(other, Subset) and self.owner == other.owner and self.mask == other.mask
        )

    def __hash__(self):
        return hash((self.owner, self.mask))

    def _coerce(self, other):
        if isinstance(other, Subset):
            return other.mask
        return other

    def __or__(self, other):
        return Subset(self.owner, self.mask | self._coerce(other))

    def __and__(self, other):
        return Subset(self.owner, self.mask & self._coerce(other))

    def __sub__(self, other):
        return Subset(self.owner, self.mask & ~self._coerce(other))

    def complement(self):
        return Subset(self.owner, self.owner.full_mask ^ self.mask)

    def __repr__(self):
        return "{" + ",".join(self.labels) + "}"


@dataclass(frozen=True)
class FiniteLattice:
    """A finite poset with total binary join/meet tables and both bounds.

    Finite lattices are complete: subset joins and meets are folds of the
    binary tables, with join of nothing = bottom and meet of nothing = top.
    """

    base: FinitePoset
    join: tuple
    meet: tuple
    bottom: int
    top: int

    @property
    def n(self):
        return self.base.n

    @property
    def labels(self):
        return self.base.labels

    @property
    def name(self):
        return self.base.name

    def leq(self, i, j):
        return self.base.leq(i, j)

    def join_of(self, i, j):
        return self.join[i][j]

    def meet_of(self, i, j):
        return self.meet[i][j]

    def join_mask(self, mask):
        """Join of the masked subset; bottom for the empty mask."""
        acc = self.bottom
        for i in iter_bits(mask):
            acc = self.join[acc][i]
        return acc

    def meet_mask(self, mask):
        acc = self.top
        for i in iter_bits(mask):
            acc = self.meet[acc][i]
        return acc

    def dual(self) -> "FiniteLattice":
        return FiniteLattice(
            base=self.base.dual(),
            join=self.meet,
            meet=self.join,
            bottom=self.top,
            top=self.bottom,
        )

    def subset_of_mask(self, mask):
        return self.base.subset_of_mask(mask)


@dataclass(frozen=True)
class Witness:
    """Offending elements/subsets of a failed check, with both sides'
    values; all entries are element labels, never indices."""

    elements: tuple = ()
    subsets: tuple = ()
    lhs: str | None = None
    rhs: str | None = None
    note: str = ""

    def as_dict(self):
        return {
            "elements": list(self.elements),
            "subsets": [list(s) for s in self.subsets],
            "lhs": self.lhs,
            "rhs": self.rhs,
        }


@dataclass(frozen=True)
class Verdict:
    """Outcome of a check: pass, or fail with a minimal witness."""

    holds: bool
    witness: Witness | None = None
    profile: tuple = ()

    def profile_dict(self):
        return dict(self.profile)


def _closure_rows(n, rows):
    """Reflexive-transitive closure of adjacency bit rows, in place."""
    for i in range(n):
        rows[i] |= 1 << i
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = rows[i]
            for j in iter_bits(acc):
                acc |= rows[j]
            if acc != rows[i]:
                rows[i] = acc
                changed = True
    return rows


def build_poset(labels, pairs, mode="covers", name="") -> FinitePoset:
    """Build a poset from related pairs.

    ``covers`` mode closes the pairs reflexively and transitively; ``relation``
    mode does the same but the input may already contain derived pairs.  Both
    validate the axioms; a closure that relates two elements both ways raises
    CycleError.
    """
    if mode not in ("covers", "relation"):
        raise ValueError(f"unknown mode {mode!r}")
    labels = tuple(labels)
    n = len(labels)
    if len(set(labels)) != n:
        raise ValueError("labels must be pairwise distinct")
    index = {lab: i for i, lab in enumerate(labels)}
    rows = [0] * n
    for a, b in pairs:
        if a not in index:
            raise UnknownLabelError(a)
        if b not in index:
            raise UnknownLabelError(b)
        rows[index[a]] |= 1 << index[b]
    _closure_rows(n, rows)
    for i in range(n):
        for j in iter_bits(rows[i]):
            if i != j and rows[j] >> i & 1:
                raise CycleError((labels[i], labels[j]))
    return FinitePoset(labels, rows, name=name)
