import pytest

from modasc import checks

SMALL = checks.Caps(words=6, paths=8, partitions=8)


def test_all_suites_pass_at_small_depth():
    results = checks.run_suite("all", SMALL)
    assert len(results) == sum(
        len(fns) for name, fns in checks.SUITES.items() if name != "all"
    )
    failing = [(r.tag, r.witness) for r in results if not r.passed]
    assert failing == []
    assert len({r.tag for r in results}) == len(results)


def test_named_suites_are_subsets():
    all_tags = {r.tag for r in checks.run_suite("all", SMALL)}
    for name in ("bijections", "transport", "equivalences", "identities"):
        tags = {r.tag for r in checks.run_suite(name, SMALL)}
        assert tags <= all_tags


def test_unknown_suite():
    with pytest.raises(ValueError):
        checks.run_suite("everything", SMALL)
