import pytest
from hypothesis import given, settings, strategies as st

from orderkit import NotALatticeError, SizeLimitError, UnknownNameError
from orderkit.generators import (
    GenSpec,
    enumerate_lattices,
    enumerate_posets,
    named,
    random_poset,
)

POSET_COUNTS = {1: 1, 2: 2, 3: 5, 4: 16, 5: 63}
LATTICE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 5, 6: 15, 7: 53}


def test_named_instances():
    assert named("chain(1)").n == 1
    m3 = named("M3")
    assert m3.n == 5
    atoms = [i for i in range(5) if m3.down[i].bit_count() == 2]
    coatoms = [i for i in range(5) if m3.up[i].bit_count() == 2]
    assert len(atoms) == 3 and atoms == coatoms
    b2 = named("boolean(2)")
    assert b2.n == 4 and len(b2.hasse()) == 4
    with pytest.raises(UnknownNameError):
        named("zigzag(3)")
    with pytest.raises(UnknownNameError):
        named("chain(x)")


def test_poset_counts(posets_upto_5):
    for n, want in POSET_COUNTS.items():
        assert len(posets_upto_5[n]) == want


def test_lattice_counts(lattices_upto_6):
    for n in range(1, 7):
        assert len(lattices_upto_6[n]) == LATTICE_COUNTS[n]


def test_lattices_n4():
    found = [L.base for L in enumerate_lattices(4)]
    assert len(found) == 2
    assert any(P.is_isomorphic(named("chain(4)")) for P in found)
    assert any(P.is_isomorphic(named("boolean(2)")) for P in found)


def test_lattices_n5_include_m3_n5(lattices_upto_6):
    bases = [L.base for L in lattices_upto_6[5]]
    assert any(P.is_isomorphic(named("M3")) for P in bases)
    assert any(P.is_isomorphic(named("N5")) for P in bases)


def test_enumeration_no_isomorphic_pair(posets_upto_5):
    for n in (3, 4, 5):
        keys = [P.canonical_key() for P in posets_upto_5[n]]
        assert len(set(keys)) == len(keys)


def test_enumeration_deterministic():
    first = [P.up for P in enumerate_posets(4)]
    second = [P.up for P in enumerate_posets(4)]
    assert first == second


def test_enumeration_emits_valid_canonical(posets_upto_5):
    for P in posets_upto_5[4]:
        assert P.validate()
        assert P.is_canonical()


def test_enumeration_cap(monkeypatch):
    with pytest.raises(SizeLimitError):
        list(enumerate_posets(20))
    monkeypatch.setenv("ORDERKIT_MAX_N", "3")
    with pytest.raises(SizeLimitError):
        list(enumerate_posets(4))
    assert len(list(enumerate_posets(3))) == 5


def test_genspec_validation():
    with pytest.raises(ValueError):
        GenSpec(n=0, kind="lattices")
    with pytest.raises(ValueError):
        GenSpec(n=3, kind="posets", density=0.5)
    with pytest.raises(ValueError):
        GenSpec(n=3, kind="weird")
    with pytest.raises(ValueError):
        random_poset(GenSpec(n=3, kind="posets"))


def test_random_poset_extremes():
    anti = random_poset(GenSpec(n=5, kind="random", seed=1, density=0.0))
    assert anti.is_isomorphic(named("antichain(5)"))
    chain = random_poset(GenSpec(n=5, kind="random", seed=1, density=1.0))
    assert chain.is_isomorphic(named("chain(5)"))


def test_random_poset_deterministic():
    a = random_poset(GenSpec(n=6, kind="random", seed=42, density=0.3))
    b = random_poset(GenSpec(n=6, kind="random", seed=42, density=0.3))
    assert a == b
    assert a.validate()
    c = random_poset(GenSpec(n=6, kind="random", seed=43, density=0.3))
    assert c.validate()


@given(st.integers(1, 7), st.integers(0, 2**20), st.floats(0, 1))
@settings(max_examples=50, deadline=None)
def test_random_poset_always_valid(n, seed, density):
    P = random_poset(GenSpec(n=n, kind="random", seed=seed, density=density))
    assert P.validate()
    try:
        P.as_lattice()
    except NotALatticeError:
        pass
