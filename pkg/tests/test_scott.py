import pytest

from orderkit import SizeLimitError
from orderkit.generators import named
from orderkit.properties import is_prime_continuous
from orderkit.scott import (
    complement_isomorphism,
    is_scott_open,
    scott_closed_lattice,
    scott_closure,
    scott_opens,
)


def test_is_scott_open_examples():
    c2 = named("chain(2)")
    assert is_scott_open(c2, c2.subset([1]))
    assert not is_scott_open(c2, c2.subset([0]))
    m3 = named("M3")
    assert is_scott_open(m3, m3.subset_of_labels(["a", "b", "1"]))


def test_scott_open_modes_agree(posets_upto_5):
    for P in posets_upto_5[4]:
        for mask in range(1 << P.n):
            s = P.subset_of_mask(mask)
            assert is_scott_open(P, s, "definitional") == is_scott_open(P, s, "upper")


def test_scott_opens_examples():
    sig = scott_opens(named("antichain(2)"))
    assert [s.labels for s in sig.opens] == [(), ("a",), ("b",), ("a", "b")]
    assert sig.lattice.base.is_isomorphic(named("boolean(2)"))
    sig = scott_opens(named("chain(2)"))
    assert len(sig.opens) == 3
    assert sig.lattice.base.is_isomorphic(named("chain(3)"))
    sig = scott_opens(named("chain(1)"))
    assert sig.lattice.base.is_isomorphic(named("chain(2)"))


def test_scott_opens_structure(posets_upto_5):
    for P in posets_upto_5[4]:
        sig = scott_opens(P)
        masks = set(sig.masks)
        assert 0 in masks and P.full_mask in masks
        lat = sig.lattice
        assert lat.base.labels[lat.bottom] == "{}"
        for a in sig.masks:
            for b in sig.masks:
                assert a | b in masks
                assert a & b in masks
        for s in sig.opens:
            assert is_scott_open(P, s)
        # join is union and meet is intersection
        for i, a in enumerate(sig.masks):
            for j, b in enumerate(sig.masks):
                assert sig.masks[lat.join_of(i, j)] == a | b
                assert sig.masks[lat.meet_of(i, j)] == a & b


def test_scott_opens_count_is_upper_set_count(posets_upto_5):
    for n, batch in posets_upto_5.items():
        for P in batch:
            assert len(scott_opens(P).opens) == P.count_upper_masks()
    assert len(scott_opens(named("antichain(3)")).opens) == 8


def test_scott_opens_limit():
    with pytest.raises(SizeLimitError) as err:
        scott_opens(named("antichain(4)"), limit=10)
    assert err.value.needed == 11


def test_scott_opens_always_prime_continuous(posets_upto_5):
    for P in posets_upto_5[5][::5]:
        assert is_prime_continuous(scott_opens(P).lattice).holds


def test_closed_lattice_dual_to_opens(posets_upto_5):
    for P in posets_upto_5[4]:
        sig = scott_opens(P)
        gam = scott_closed_lattice(P)
        mapping = complement_isomorphism(sig, gam)
        assert sorted(mapping) == list(range(len(sig.opens)))
        assert gam.lattice.base.is_isomorphic(sig.lattice.base.dual())


def test_closed_lattice_examples():
    assert scott_closed_lattice(named("antichain(2)")).lattice.base.is_isomorphic(
        named("boolean(2)")
    )
    assert scott_closed_lattice(named("chain(2)")).lattice.base.is_isomorphic(
        named("chain(3)")
    )
    assert scott_closed_lattice(named("chain(1)")).lattice.base.is_isomorphic(
        named("chain(2)")
    )


def test_scott_closure_examples():
    c3 = named("chain(3)")
    assert scott_closure(c3, c3.subset([1])).indices == (0, 1)
    assert scott_closure(c3, c3.subset()).mask == 0
    m3 = named("M3")
    assert scott_closure(m3, m3.subset_of_labels(["a", "b"])).labels == ("0", "a", "b")


def test_scott_closure_modes_agree(posets_upto_5):
    for P in posets_upto_5[4]:
        for mask in range(1 << P.n):
            s = P.subset_of_mask(mask)
            assert scott_closure(P, s, "fast").mask == scott_closure(P, s, "definitional").mask
