"""Pattern containment and avoidance for words and permutations.

A classical pattern is itself a Cayley permutation; a word contains it
if some subsequence is order isomorphic to it, where equalities must be
matched by equalities.  Three special patterns on permutations are
supported by name:

* ``omega``  - an adjacent descent p_i > p_{i+1} whose bottom value is
  followed, at least two positions later, by the next smaller value
  (p_{i+1} = p_j + 1).
* ``zeta``   - contained exactly by the permutations that do not start
  with 1.
* ``32-1``   - an adjacent descent followed, at least two positions
  later, by a value below both legs (p_i > p_{i+1} > p_k).

Avoider sets are generated by growing words level by level and pruning:
extending a modified ascent sequence relabels the old letters in an
order-preserving way, so containment is inherited by every extension
and any new occurrence must use the appended letter.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .words import Word, _children, _children_prim, is_cayley

Perm = tuple[int, ...]

SPECIAL_PATTERNS = ("omega", "zeta", "32-1")


def parse_pattern(text: str) -> Word:
    from .words import parse_word

    y = parse_word(text)
    if not y:
        raise ValueError("a pattern must be nonempty")
    if not is_cayley(y):
        raise ValueError(f"pattern {text!r} is not a Cayley permutation")
    return y


def contains(x: Word, y: Word) -> bool:
    """True if some subsequence of x is order isomorphic to y.

    Equal pattern values must map to equal word values.

    >>> contains((1, 1, 1, 3, 1, 2, 2, 2, 2, 4, 2, 1, 1), (2, 3, 2, 1))
    True
    >>> contains((1, 2, 3, 4, 3, 2, 5, 6, 1, 7, 6, 1, 8, 9, 7), (3, 1, 2))
    False
    """
    k = len(y)
    n = len(x)
    if k == 0:
        return True
    if k > n:
        return False
    chosen = [0] * k

    def extend(s: int, start: int) -> bool:
        ys = y[s]
        for i in range(start, n - (k - s) + 1):
            v = x[i]
            ok = True
            for t in range(s):
                yt = y[t]
                vt = chosen[t]
                if yt < ys:
                    if vt >= v:
                        ok = False
                        break
                elif yt == ys:
                    if vt != v:
                        ok = False
                        break
                elif vt <= v:
                    ok = False
                    break
            if ok:
                chosen[s] = v
                if s + 1 == k or extend(s + 1, i + 1):
                    return True
        return False

    return extend(0, 0)


def _contains_with_last(x: Word, y: Word) -> bool:
    """Containment where the occurrence must use the last letter of x."""
    k = len(y)
    n = len(x)
    if k == 0:
        return True
    if k > n:
        return False
    last = x[-1]
    chosen = [0] * k

    def extend(s: int, start: int) -> bool:
        ys = y[s]
        if s == k - 1:
            v = last
            for t in range(s):
                yt = y[t]
                vt = chosen[t]
                if yt < ys:
                    if vt >= v:
                        return False
                elif yt == ys:
                    if vt != v:
                        return False
                elif vt <= v:
                    return False
            return True
        for i in range(start, n - (k - s) + 1):
            v = x[i]
            ok = True
            for t in range(s):
                yt = y[t]
                vt = chosen[t]
                if yt < ys:
                    if vt >= v:
                        ok = False
                        break
                elif yt == ys:
                    if vt != v:
                        ok = False
                        break
                elif vt <= v:
                    ok = False
                    break
            if ok:
                chosen[s] = v
                if extend(s + 1, i + 1):
                    return True
        return False

    return extend(0, 0)


def _check_class(cls: str) -> None:
    if cls not in ("modasc", "prim"):
        raise ValueError(f"unknown class {cls!r}; expected 'modasc' or 'prim'")


def _pattern_key(patterns: Iterable[Word]) -> frozenset[Word]:
    pats = frozenset(patterns)
    for y in pats:
        if not y:
            raise ValueError("patterns must be nonempty")
        if not is_cayley(y):
            raise ValueError(f"pattern {y} is not a Cayley permutation")
    return pats


@lru_cache(maxsize=None)
def _avoider_level(n: int, pats: frozenset[Word], cls: str) -> tuple[Word, ...]:
    if n == 0:
        return ((),)
    prev = _avoider_level(n - 1, pats, cls)
    extend = _children_prim if cls == "prim" else _children
    out = []
    for w in prev:
        for c in extend(w):
            for y in pats:
                if _contains_with_last(c, y):
                    break
            else:
                out.append(c)
    return tuple(out)


def avoiders(n: int, patterns: Iterable[Word], cls: str = "modasc") -> list[Word]:
    """All length-n members of the class avoiding every given pattern.

    >>> avoiders(3, [(1, 2, 2)])
    [(1, 1, 1), (1, 1, 2), (1, 2, 1), (1, 2, 3)]
    """
    _check_class(cls)
    if n < 0:
        raise ValueError("length must be nonnegative")
    return sorted(_avoider_level(n, _pattern_key(patterns), cls))


def count_avoiders(n: int, patterns: Iterable[Word], cls: str = "modasc") -> int:
    _check_class(cls)
    return len(_avoider_level(n, _pattern_key(patterns), cls))


def _is_permutation(p: Perm) -> bool:
    return set(p) == set(range(1, len(p) + 1))


def contains_special(p: Perm, name: str) -> bool:
    """Containment of one of the named special patterns in a permutation."""
    if not _is_permutation(p):
        raise ValueError(f"{p} is not a permutation")
    if name == "zeta":
        return bool(p) and p[0] != 1
    if name == "omega":
        pos = {v: i for i, v in enumerate(p)}
        for i in range(len(p) - 1):
            if p[i] > p[i + 1] and p[i + 1] > 1:
                if pos[p[i + 1] - 1] > i + 1:
                    return True
        return False
    if name == "32-1":
        n = len(p)
        # suffix_min[i] = min of p[i:]
        suffix_min = [0] * (n + 1)
        if n:
            suffix_min[n] = n + 1
            for i in range(n - 1, -1, -1):
                suffix_min[i] = min(p[i], suffix_min[i + 1])
        for i in range(n - 1):
            if p[i] > p[i + 1] and i + 2 < n and suffix_min[i + 2] < p[i + 1]:
                return True
        return False
    raise ValueError(f"unknown special pattern {name!r}")


def in_omega(p: Perm) -> bool:
    """True if p starts with 1 and avoids the omega pattern.

    The empty permutation is a member.
    """
    if not p:
        return True
    return p[0] == 1 and not contains_special(p, "omega")


@lru_cache(maxsize=None)
def generate_omega(n: int) -> tuple[Perm, ...]:
    """All members of the omega class of length n, in lexicographic order."""
    import itertools

    if n == 0:
        return ((),)
    out = []
    for rest in itertools.permutations(range(2, n + 1)):
        p = (1,) + rest
        if not contains_special(p, "omega"):
            out.append(p)
    return tuple(out)


def equal_avoidance_sets(
    y1: Word, y2: Word, cls: str = "modasc", n_max: int = 9
) -> bool:
    """True if the two patterns have identical avoider sets up to n_max."""
    return avoidance_witness(y1, y2, cls, n_max) is None


def avoidance_witness(
    y1: Word, y2: Word, cls: str = "modasc", n_max: int = 9
) -> tuple[int, Word] | None:
    """Smallest word avoiding exactly one of the two patterns, or None.

    >>> avoidance_witness((1, 2, 2), (1, 2, 3, 2), n_max=5)
    (3, (1, 2, 2))
    """
    _check_class(cls)
    for n in range(n_max + 1):
        a = _avoider_level(n, _pattern_key([y1]), cls)
        b = _avoider_level(n, _pattern_key([y2]), cls)
        if a != b:
            sa, sb = set(a), set(b)
            return n, min(sa.symmetric_difference(sb))
    return None
