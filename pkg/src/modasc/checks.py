"""Named verification suites: bijections, transport, equivalences, identities.

Each check replays one statement of the theory at desk scale and
returns None on success or a short witness string on failure.  Suites
run in declaration order so the first failure is reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from . import counting, maps, paths, patterns, words
from .series import IntSeries


@dataclass(frozen=True)
class Caps:
    words: int = 10
    paths: int = 12
    partitions: int = 12


@dataclass(frozen=True)
class CheckResult:
    tag: str
    description: str
    passed: bool
    witness: str | None = None


def _all_partitions(n: int):
    """Every set partition of [n], blocks sorted, in DFS order."""
    blocks: list[list[int]] = []

    def place(i: int):
        if i > n:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            b.append(i)
            yield from place(i + 1)
            b.pop()
        blocks.append([i])
        yield from place(i + 1)
        blocks.pop()

    yield from place(1)


def _perms_avoiding_32_1(n: int):
    for p in itertools.permutations(range(1, n + 1)):
        if not patterns.contains_special(p, "32-1"):
            yield p


# ---------------------------------------------------------------------------
# bijections


def check_flat_roundtrip(caps: Caps) -> str | None:
    for n in range(1, caps.words + 1):
        for x in words.iter_modasc(n):
            d = words.collapse_flats(x)
            if words.insert_flats(d) != x:
                return f"roundtrip failed at {x}"
            if not words.is_prim(d.primitive):
                return f"core of {x} is not primitive"
            if words.statistics(x).asc != words.statistics(d.primitive).asc:
                return f"ascent count changed collapsing {x}"
    return None


def check_standardize_bijection(caps: Caps) -> str | None:
    for n in range(min(caps.words, 9) + 1):
        prims = words.generate_prim(n)
        image = []
        for x in prims:
            p = maps.standardize(x)
            if not patterns.in_omega(p):
                return f"st({x}) = {p} leaves the omega class"
            if maps.omega_to_prim(p) != x:
                return f"inverse failed at {x}"
            image.append(p)
        if len(set(image)) != len(prims):
            return f"not injective at n={n}"
        if set(image) != set(patterns.generate_omega(n)):
            return f"image misses the omega class at n={n}"
    return None


def check_burge_ascending(caps: Caps) -> str | None:
    for n in range(min(caps.words, 9) + 1):
        image = {maps.burge_fishburn(x, "ascending") for x in words.iter_prim(n)}
        if image != set(patterns.generate_omega(n)):
            return f"transpose image differs from the omega class at n={n}"
    return None


def check_burge_descending(caps: Caps) -> str | None:
    for n in range(min(caps.words, 9) + 1):
        seen = set()
        for x in words.iter_modasc(n):
            p = maps.burge_fishburn(x, "descending")
            if sorted(p) != list(range(1, n + 1)):
                return f"transpose of {x} is not a permutation"
            seen.add(p)
        if len(seen) != len(words.generate_modasc(n)):
            return f"not injective at n={n}"
    return None


def check_composition_112(caps: Caps) -> str | None:
    for n in range(1, caps.words + 1):
        avs = patterns.avoiders(n, ((1, 1, 2),), "modasc")
        if len(avs) != 2 ** (n - 1):
            return f"|avoiders| != 2^(n-1) at n={n}"
        comps = set()
        for x in avs:
            c = maps.modasc112_to_composition(x)
            if sum(c) != n:
                return f"{x} maps to a non-composition of {n}"
            if maps.composition_to_modasc112(c) != x:
                return f"roundtrip failed at {x}"
            comps.add(c)
        if len(comps) != len(avs):
            return f"not injective at n={n}"
    return None


def check_partition_122(caps: Caps) -> str | None:
    for n in range(1, min(caps.words, caps.partitions) + 1):
        avs = patterns.avoiders(n, ((1, 2, 2),), "modasc")
        image = set()
        for x in avs:
            beta = maps.modasc122_to_partition(x)
            k = len(beta)
            if [b[0] for b in beta] != list(range(1, k + 1)):
                return f"block minima of {beta} are not an interval"
            if maps.partition_to_modasc122(beta) != x:
                return f"roundtrip failed at {x}"
            image.add(beta)
        if n <= 10:
            wanted = {
                beta
                for beta in _all_partitions(n)
                if [b[0] for b in beta] == list(range(1, len(beta) + 1))
            }
            if image != wanted:
                return f"image mismatch against direct enumeration at n={n}"
        if len(image) != counting.closed_counts("122", "modasc", n):
            return f"count mismatch at n={n}"
    return None


def check_dyck_312(caps: Caps) -> str | None:
    for n in range(1, min(caps.words + 1, caps.paths + 1) + 1):
        avs = patterns.avoiders(n, ((3, 1, 2),), "prim")
        expected = paths.generate_dudu_avoiders(n - 1)
        image = set()
        for x in avs:
            pth = maps.phi_312(x)
            if maps.phi_inverse(pth) != x:
                return f"inverse failed at {x}"
            image.add(pth)
        if image != set(expected):
            return f"path image mismatch at n={n}"
        if len(image) != len(avs):
            return f"not injective at n={n}"
    return None


def check_claesson(caps: Caps) -> str | None:
    for n in range(1, min(caps.words, 9) + 1):
        perms = list(_perms_avoiding_32_1(n))
        if len(perms) != counting.bell(n):
            return f"|Sym_n(32-1)| != Bell at n={n}"
        image = set()
        for beta in _all_partitions(n):
            p = maps.claesson(beta)
            if patterns.contains_special(p, "32-1"):
                return f"claesson({beta}) contains 32-1"
            if maps.claesson_inverse(p) != tuple(
                sorted((tuple(sorted(b)) for b in beta), key=min)
            ):
                return f"inverse failed at {beta}"
            nonsingle = sum(1 for b in beta if len(b) > 1)
            if words.statistics(p).des != nonsingle:
                return f"descent law failed at {beta}"
            image.add(p)
        if image != set(perms):
            return f"image mismatch at n={n}"
        hist: dict[int, int] = {}
        for p in perms:
            r = len(words.statistics(p).rlmin)
            hist[r] = hist.get(r, 0) + 1
        for j, cnt in hist.items():
            if cnt != counting.stirling2(n, j):
                return f"right-to-left minima law failed at n={n}, j={j}"
    return None


# ---------------------------------------------------------------------------
# transport


def check_prim_counts_omega(caps: Caps) -> str | None:
    for n in range(min(caps.words, 9) + 1):
        if len(words.generate_prim(n)) != len(patterns.generate_omega(n)):
            return f"|Prim_n| != |Omega_n| at n={n}"
    return None


def check_chain_construction(caps: Caps) -> str | None:
    for n in range(min(caps.words, 9) + 1):
        for p in patterns.generate_omega(n):
            if maps.omega_to_prim(p) != maps.omega_to_prim_by_chains(p):
                return f"chain and falling constructions differ at {p}"
    return None


def check_pattern_transport(caps: Caps) -> str | None:
    for y in ((2, 1, 3), (2, 3, 1)):
        for n in range(1, min(caps.words, 9) + 1):
            avs = patterns.avoiders(n, (y,), "prim")
            image = {maps.standardize(x) for x in avs}
            omega_side = {
                p
                for p in patterns.generate_omega(n)
                if not patterns.contains(p, y)
            }
            if image != omega_side:
                return f"transport of {y} fails at n={n}"
            if len(avs) != counting.motzkin(n - 1):
                return f"|Prim_n({y})| != Motzkin at n={n}"
    return None


def check_transport_321(caps: Caps) -> str | None:
    for n in range(1, min(caps.words, 9) + 1):
        avs = patterns.avoiders(n, ((3, 2, 1),), "prim")
        image = {maps.standardize(x) for x in avs}
        direct = {
            (1,) + tuple(v + 1 for v in q)
            for q in itertools.permutations(range(1, n))
            if not patterns.contains(q, (3, 2, 1))
        }
        if image != direct:
            return f"image is not 1 (+) Sym(321) at n={n}"
        if len(avs) != counting.catalan(n - 1):
            return f"|Prim_n(321)| != Catalan shift at n={n}"
    return None


def check_primitive_statistics(caps: Caps) -> str | None:
    for n in range(1, caps.words + 1):
        for w in words.iter_prim(n):
            st = words.statistics(w)
            if st.wlrmax != st.lrmax or st.wrlmax != st.rlmax:
                return f"weak and strict maxima differ on {w}"
            if st.lrmin != ((1, 1),):
                return f"left-to-right minima of {w} are not just the head"
    return None


def check_standardize_statistics(caps: Caps) -> str | None:
    for n in range(1, min(caps.words, 9) + 1):
        for w in words.iter_prim(n):
            p = maps.standardize(w)
            des_w = {i for i in range(n - 1) if w[i] > w[i + 1]}
            des_p = {i for i in range(n - 1) if p[i] > p[i + 1]}
            if des_w != des_p:
                return f"descent set changed standardizing {w}"
            stw, stp = words.statistics(w), words.statistics(p)
            if {i for i, _ in stw.wrlmin} != {i for i, _ in stp.rlmin}:
                return f"weak minima positions changed standardizing {w}"
    return None


# ---------------------------------------------------------------------------
# equivalences

EQUIVALENCES: tuple[tuple[str, str, str], ...] = (
    ("21", "121", "modasc"),
    ("213", "1213", "modasc"),
    ("312", "1312", "modasc"),
    ("212", "1212", "modasc"),
    ("212", "2132", "modasc"),
    ("212", "12132", "modasc"),
    ("122", "1232", "prim"),
    ("221", "2321", "prim"),
)

JOINT_EQUIVALENCES: tuple[tuple[tuple[str, ...], str, str], ...] = (
    (("212", "213"), "213", "prim"),
    (("221", "231"), "231", "prim"),
)


def check_single_equivalences(caps: Caps) -> str | None:
    n_max = min(caps.words, 9)
    for a, b, cls in EQUIVALENCES:
        w = patterns.avoidance_witness(
            patterns.parse_pattern(a), patterns.parse_pattern(b), cls, n_max
        )
        if w is not None:
            return f"{a} vs {b} over {cls}: witness {w[1]} at n={w[0]}"
    return None


def check_joint_equivalences(caps: Caps) -> str | None:
    n_max = min(caps.words, 9)
    for pair, single, cls in JOINT_EQUIVALENCES:
        pats = tuple(patterns.parse_pattern(p) for p in pair)
        lone = (patterns.parse_pattern(single),)
        for n in range(n_max + 1):
            if patterns.avoiders(n, pats, cls) != patterns.avoiders(n, lone, cls):
                return f"{','.join(pair)} vs {single} over {cls} differ at n={n}"
    return None


# ---------------------------------------------------------------------------
# identities

SERIES_ORDER = 20


def check_series_f(caps: Caps) -> str | None:
    try:
        counting.special_series("F", SERIES_ORDER)
    except ArithmeticError as exc:
        return str(exc)
    return None


def check_series_prim122(caps: Caps) -> str | None:
    f = counting.special_series("F", SERIES_ORDER)
    one = IntSeries.one(SERIES_ORDER)
    prim = counting.special_series("PrimOGF122", SERIES_ORDER)
    if prim != (one + IntSeries.t(SERIES_ORDER)) * f:
        return "PrimOGF122 != (1+t) F"
    for n in range(1, SERIES_ORDER + 1):
        if prim[n] != counting.closed_counts("122", "prim", n):
            return f"series and formula differ at n={n}"
    for n in range(1, min(caps.words, 10) + 1):
        if prim[n] != counting.oracle_table("122", "prim", n).value(n):
            return f"series and oracle differ at n={n}"
    return None


def check_series_modasc122(caps: Caps) -> str | None:
    s = counting.special_series("ModascOGF122", SERIES_ORDER)
    for n in range(1, SERIES_ORDER + 1):
        if s[n] != counting.closed_counts("122", "modasc", n):
            return f"series and power sum differ at n={n}"
    for n in range(1, caps.words + 1):
        if s[n] != patterns.count_avoiders(n, ((1, 2, 2),), "modasc"):
            return f"series and oracle differ at n={n}"
    return None


def check_series_g(caps: Caps) -> str | None:
    g = counting.special_series("G", SERIES_ORDER)
    for n in range(min(caps.words, 10)):
        if g[n] != patterns.count_avoiders(n + 1, ((1, 2, 2),), "prim"):
            return f"[t^{n}]G differs from the count at length {n + 1}"
    return None


def check_transform_agreement(caps: Caps) -> str | None:
    for text in sorted({p for row in counting.TABLE1 for p in row.patterns}):
        try:
            prim_vals = {
                k: counting.closed_counts(text, "prim", k)
                for k in range(SERIES_ORDER + 1)
            }
        except counting.NoClosedFormError:
            continue
        series = IntSeries(
            [prim_vals[k] for k in range(SERIES_ORDER + 1)], SERIES_ORDER
        )
        subst = counting.ogf_substitute(series, SERIES_ORDER)
        for n in range(1, SERIES_ORDER + 1):
            lhs = counting.binomial_transform_count(prim_vals, n)
            if subst[n] != lhs:
                return f"substitution != transform for {text} at n={n}"
            if counting.is_primitive_pattern(text):
                if lhs != counting.closed_counts(text, "modasc", n):
                    return f"transform misses the class count for {text} at n={n}"
    return None


def check_series_d(caps: Caps) -> str | None:
    d = counting.special_series("D", max(SERIES_ORDER, caps.paths))
    for n in range(caps.paths + 1):
        generated = len(paths.generate_dudu_avoiders(n))
        if d[n] != generated:
            return f"[t^{n}]D != generated path count {generated}"
    for n in range(max(SERIES_ORDER, caps.paths) + 1):
        if d[n] != counting.dudu_count(n):
            return f"[t^{n}]D != coefficient sum"
    return None


def check_series_modasc312(caps: Caps) -> str | None:
    s = counting.special_series("Modasc312", SERIES_ORDER)
    for n in range(1, SERIES_ORDER + 1):
        if s[n] != counting.closed_counts("312", "modasc", n):
            return f"series and formula differ at n={n}"
    offset, printed = counting.PRINTED_SEQUENCES[("312", "modasc")]
    for i, v in enumerate(printed):
        n = offset + i
        if n <= SERIES_ORDER and s[n] != v:
            return f"series misses the quoted value at n={n}"
    for n in range(1, caps.words + 1):
        if s[n] != patterns.count_avoiders(n, ((3, 1, 2),), "modasc"):
            return f"series and oracle differ at n={n}"
    return None


def check_series_motzkin(caps: Caps) -> str | None:
    m = counting.special_series("Motzkin_eq", SERIES_ORDER)
    for n in range(SERIES_ORDER + 1):
        if m[n] != counting.motzkin(n):
            return f"fixed point differs from the recurrence at n={n}"
    return None


def check_stirling_identity(caps: Caps) -> str | None:
    top = min(caps.partitions, counting.PARTITION_CAP)
    for n in range(1, top + 1):
        if sum(counting.p_coefficients(n)) != counting.bell(n):
            return f"partition row sum != Bell at n={n}"
        for h in range(n):
            if not counting.stirling_identity_check(n, h):
                return f"identity fails at n={n}, h={h}"
    return None


def check_ascent_laws_2321(caps: Caps) -> str | None:
    for n in range(1, min(caps.words, 10) + 1):
        hist = counting.ascent_distribution("2321", "modasc", n)
        for h, cnt in hist.items():
            if cnt != counting.stirling2(n, n - h):
                return f"class histogram fails at n={n}, h={h}"
        if sum(hist.values()) != counting.bell(n):
            return f"class total != Bell at n={n}"
        prim_hist = counting.ascent_distribution("2321", "prim", n)
        row = counting.p_coefficients(n - 1)
        for h, cnt in prim_hist.items():
            j = n - 1 - h
            want = row[j] if 0 <= j < len(row) else 0
            if cnt != want:
                return f"primitive histogram fails at n={n}, h={h}"
    return None


def check_insertion_221(caps: Caps) -> str | None:
    for n in range(1, caps.words + 1):
        by_sites = counting.modasc221_by_insertion(n)
        formula = counting.closed_counts("221", "modasc", n)
        oracle = patterns.count_avoiders(n, ((2, 2, 1),), "modasc")
        if not by_sites == formula == oracle:
            return f"n={n}: insertion {by_sites}, formula {formula}, oracle {oracle}"
    return None


def check_printed_sequences(caps: Caps) -> str | None:
    for (text, cls), (offset, values) in counting.PRINTED_SEQUENCES.items():
        pat = patterns.parse_pattern(text)
        for i, v in enumerate(values):
            n = offset + i
            if counting.closed_counts(text, cls, n) != v:
                return f"formula misses {text}/{cls} quoted value at n={n}"
            if n <= caps.words and patterns.count_avoiders(n, (pat,), cls) != v:
                return f"oracle misses {text}/{cls} quoted value at n={n}"
    return None


Check = tuple[str, str, Callable[[Caps], "str | None"]]

SUITES: dict[str, tuple[Check, ...]] = {
    "bijections": (
        ("flats.roundtrip", "collapsing and reinserting flat steps is the identity", check_flat_roundtrip),
        ("std.bijection", "standardization bijects primitives onto the omega class", check_standardize_bijection),
        ("burge.ascending", "the ascending-tie transpose bijects primitives onto the omega class", check_burge_ascending),
        ("burge.descending", "the descending-tie transpose is injective into permutations", check_burge_descending),
        ("comp.112", "112-avoiders encode compositions", check_composition_112),
        ("part.122", "122-avoiders encode partitions with interval minima", check_partition_122),
        ("dyck.312", "312-avoiding primitives encode dudu-avoiding Dyck paths", check_dyck_312),
        ("claesson.32-1", "partitions encode 32-1-avoiding permutations", check_claesson),
    ),
    "transport": (
        ("omega.size", "primitive words and the omega class are equinumerous", check_prim_counts_omega),
        ("omega.chains", "the chain and falling constructions of the inverse agree", check_chain_construction),
        ("transport.213-231", "avoidance of 213 and 231 transports along standardization", check_pattern_transport),
        ("transport.321", "321-avoiding primitives standardize onto 1 followed by 321-avoiders", check_transport_321),
        ("prim.stats", "on primitive words weak and strict extrema coincide", check_primitive_statistics),
        ("std.stats", "standardization preserves descents and weak minima positions", check_standardize_statistics),
    ),
    "equivalences": (
        ("equiv.single", "single patterns with identical avoider sets", check_single_equivalences),
        ("equiv.joint", "redundant patterns inside pattern pairs", check_joint_equivalences),
    ),
    "identities": (
        ("series.F", "the two forms of F agree", check_series_f),
        ("series.prim122", "primitive 122 counts: series, formula and oracle agree", check_series_prim122),
        ("series.modasc122", "122 counts: series, power sum and oracle agree", check_series_modasc122),
        ("series.G", "G shifts the primitive 122 counts by one", check_series_g),
        ("transform.eq", "substitution t -> t/(1-t) equals the binomial transform", check_transform_agreement),
        ("series.D", "D matches generated dudu-avoiding paths and the coefficient sum", check_series_d),
        ("series.modasc312", "312 counts: series, formula, oracle and quoted values agree", check_series_modasc312),
        ("series.motzkin", "the Motzkin fixed point matches the recurrence", check_series_motzkin),
        ("stirling.identity", "the Stirling-number identity holds with brute-forced coefficients", check_stirling_identity),
        ("ascents.2321", "ascent histograms over 2321-avoiders match Stirling rows", check_ascent_laws_2321),
        ("insertion.221", "221 counts by insertion, formula and oracle agree", check_insertion_221),
        ("printed.sequences", "sequences quoted in full match formula and oracle", check_printed_sequences),
    ),
}

SUITES["all"] = SUITES["bijections"] + SUITES["transport"] + SUITES["equivalences"] + SUITES["identities"]


def run_suite(name: str, caps: Caps) -> list[CheckResult]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    results = []
    for tag, description, fn in SUITES[name]:
        witness = fn(caps)
        results.append(CheckResult(tag, description, witness is None, witness))
    return results
