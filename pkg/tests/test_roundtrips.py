"""Property tests over sampled words; the pools are small enough to
exhaust, so hypothesis is used for shrinkable counterexamples, not scale."""

from hypothesis import given
from hypothesis import strategies as st_

from modasc import maps, patterns, words

MODASC_POOL = [w for n in range(1, 8) for w in words.generate_modasc(n)]
PRIM_POOL = [w for n in range(1, 8) for w in words.generate_prim(n)]
PRIM_312_POOL = [w for w in PRIM_POOL if not patterns.contains(w, (3, 1, 2))]
OMEGA_POOL = [maps.standardize(w) for w in PRIM_POOL]
PARTITION_POOL = [
    maps.modasc122_to_partition(w)
    for w in MODASC_POOL
    if not patterns.contains(w, (1, 2, 2))
]


@given(st_.sampled_from(MODASC_POOL))
def test_flat_roundtrip(w):
    assert words.insert_flats(words.collapse_flats(w)) == w


@given(st_.sampled_from(MODASC_POOL))
def test_collapse_core_is_primitive(w):
    d = words.collapse_flats(w)
    assert words.is_prim(d.primitive)
    assert sum(d.multiplicities) == len(w)


@given(st_.sampled_from(PRIM_POOL))
def test_standardize_roundtrip(w):
    assert maps.omega_to_prim(maps.standardize(w)) == w


@given(st_.sampled_from(OMEGA_POOL))
def test_standardize_roundtrip_other_way(p):
    assert maps.standardize(maps.omega_to_prim(p)) == p


@given(st_.sampled_from(PRIM_POOL))
def test_chain_construction_agrees(w):
    p = maps.standardize(w)
    assert maps.omega_to_prim_by_chains(p) == maps.omega_to_prim(p)


@given(st_.sampled_from(PRIM_312_POOL))
def test_phi_roundtrip(w):
    assert maps.phi_inverse(maps.phi_312(w)) == w


@given(st_.sampled_from(PARTITION_POOL))
def test_claesson_roundtrip(beta):
    assert maps.claesson_inverse(maps.claesson(beta)) == beta


@given(st_.sampled_from(PARTITION_POOL))
def test_partition_encoding_roundtrip(beta):
    assert maps.modasc122_to_partition(maps.partition_to_modasc122(beta)) == beta


@given(st_.sampled_from(MODASC_POOL))
def test_word_text_roundtrip(w):
    assert words.parse_word(words.format_word(w)) == w


@given(st_.sampled_from(MODASC_POOL))
def test_step_counts_partition_length(w):
    s = words.statistics(w)
    flats = len(w) - 1 - s.asc - s.des
    assert flats >= 0
    assert s.asc + 1 == max(w)  # every letter value is an ascent top


@given(st_.sampled_from(PRIM_POOL))
def test_standardize_preserves_step_pattern(w):
    p = maps.standardize(w)
    sw, sp = words.statistics(w), words.statistics(p)
    assert sw.asc == sp.asc and sw.des == sp.des
    assert sw.asc + sw.des == len(w) - 1  # primitive words have no flats
    assert {i for i, _ in sw.wrlmin} == {i for i, _ in sp.rlmin}
