"""Test universes: named instances, exhaustive enumeration up to
isomorphism, and seeded random posets.

Enumeration grows posets one element at a time: every poset arises from a
smaller one by adding a new maximal element above a down-closed subset, so
extending every canonical representative by every down set and deduplicating
on canonical keys yields exactly one representative per isomorphism class.
The published counts of unlabeled posets and lattices serve as acceptance
oracles for this construction, not as inputs.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from functools import lru_cache

from . import limits
from .errors import NotALatticeError, SizeLimitError, UnknownNameError
from .poset import FinitePoset, mask_of


@dataclass(frozen=True)
class GenSpec:
    """Parameters of a generated universe or a single random draw."""

    n: int
    kind: str = "posets"  # posets | lattices | random
    seed: int = 0
    density: float | None = None

    def __post_init__(self):
        if self.kind not in ("posets", "lattices", "random"):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.kind == "lattices" and self.n < 1:
            raise ValueError("lattices need at least one element")
        if self.density is not None and self.kind != "random":
            raise ValueError("density applies to random generation only")


def default_labels(n):
    if n <= 26:
        return tuple(chr(ord("a") + i) for i in range(n))
    return tuple(f"x{i}" for i in range(n))


_NAME_RE = re.compile(r"^(chain|antichain|boolean)\((\d+)\)$")


def named(name: str) -> FinitePoset:
    """Canonical named instances: chain(k), antichain(k), boolean(k), and
    the two minimal non-distributive five-element lattices M3 and N5."""
    if name == "M3":
        return _m3()
    if name == "N5":
        return _n5()
    m = _NAME_RE.match(name)
    if not m:
        raise UnknownNameError(name)
    kind, k = m.group(1), int(m.group(2))
    if kind == "chain":
        labels = tuple(str(i) for i in range(k))
        rows = [mask_of(range(i, k)) for i in range(k)]
        return FinitePoset(labels, rows, name=name)
    if kind == "antichain":
        labels = default_labels(k)
        rows = [1 << i for i in range(k)]
        return FinitePoset(labels, rows, name=name)
    # boolean(k): subsets of a k-element set by containment, labeled by the
    # decimal value of their membership mask
    size = 1 << k
    labels = tuple(str(i) for i in range(size))
    rows = [mask_of(j for j in range(size) if i & j == i) for i in range(size)]
    return FinitePoset(labels, rows, name=name)


def _m3():
    # 0 below the three incomparable atoms a, b, c, all below 1
    labels = ("0", "a", "b", "c", "1")
    rows = [
        mask_of([0, 1, 2, 3, 4]),
        mask_of([1, 4]),
        mask_of([2, 4]),
        mask_of([3, 4]),
        mask_of([4]),
    ]
    return FinitePoset(labels, rows, name="M3")


def _n5():
    # pentagon: 0 < a < c < 1 and 0 < b < 1, with b incomparable to a and c
    labels = ("0", "a", "b", "c", "1")
    rows = [
        mask_of([0, 1, 2, 3, 4]),
        mask_of([1, 3, 4]),
        mask_of([2, 4]),
        mask_of([3, 4]),
        mask_of([4]),
    ]
    return FinitePoset(labels, rows, name="N5")


NAMED_LATTICE_EXAMPLES = (
    "chain(1)", "chain(2)", "chain(3)", "chain(4)", "chain(5)",
    "boolean(1)", "boolean(2)", "boolean(3)",
    "M3", "N5",
)

NAMED_POSET_EXAMPLES = NAMED_LATTICE_EXAMPLES + (
    "antichain(1)", "antichain(2)", "antichain(3)", "antichain(4)", "antichain(5)",
)


def _extend_with_max(P, down_mask):
    """Add one new maximal element strictly above exactly ``down_mask``."""
    n = P.n
    top_bit = 1 << n
    rows = [P.up[i] | (top_bit if down_mask >> i & 1 else 0) for i in range(n)]
    rows.append(top_bit)
    return FinitePoset(default_labels(n + 1), rows)


@lru_cache(maxsize=None)
def _poset_level(n):
    """Canonical keys of all isomorphism classes of size n, sorted."""
    if n == 0:
        return ((),)
    keys = set()
    for key in _poset_level(n - 1):
        parent = FinitePoset(default_labels(n - 1), key)
        for down_mask in parent.iter_lower_masks():
            keys.add(_extend_with_max(parent, down_mask).canonical_key())
    return tuple(sorted(keys))


def enumerate_posets(n: int, max_n=None):
    """One canonical representative per isomorphism class of n-element
    posets, in canonical order; deterministic across runs."""
    ceiling = limits.enum_max() if max_n is None else max_n
    if n > ceiling:
        raise SizeLimitError("poset enumeration", n, ceiling)
    for i, key in enumerate(_poset_level(n)):
        yield FinitePoset(default_labels(n), key, name=f"P{n}.{i}")


def enumerate_lattices(n: int, max_n=None):
    """The enumerated posets that carry a lattice structure."""
    k = 0
    for P in enumerate_posets(n, max_n):
        try:
            lat = P.with_name(f"L{n}.{k}").as_lattice()
        except NotALatticeError:
            continue
        k += 1
        yield lat


def count_posets(n, max_n=None):
    return sum(1 for _ in enumerate_posets(n, max_n))


def count_lattices(n, max_n=None):
    return sum(1 for _ in enumerate_lattices(n, max_n))


def random_poset(spec: GenSpec) -> FinitePoset:
    """Random poset from a shuffled linear extension: each forward pair is
    related with probability ``density``, then closed transitively.  A pure
    function of (n, seed, density)."""
    if spec.kind != "random":
        raise ValueError("random_poset needs kind='random'")
    density = 0.0 if spec.density is None else spec.density
    rng = random.Random(spec.seed)
    order = list(range(spec.n))
    rng.shuffle(order)
    rows = [1 << i for i in range(spec.n)]
    for a in range(spec.n):
        for b in range(a + 1, spec.n):
            if rng.random() < density:
                rows[order[a]] |= 1 << order[b]
    # transitive closure along the shuffled extension, back to front
    for a in range(spec.n - 2, -1, -1):
        acc = rows[order[a]]
        for b in range(a + 1, spec.n):
            if acc >> order[b] & 1:
                acc |= rows[order[b]]
        rows[order[a]] = acc
    return FinitePoset(
        default_labels(spec.n), rows, name=f"R{spec.n}.{spec.seed}"
    )
