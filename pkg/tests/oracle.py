"""Naive reference implementations used to cross-check the package.

Nothing here imports magmalab; every answer comes from nested loops over
plain lists so that disagreements point at the optimised code.
"""

from __future__ import annotations

from itertools import combinations, product


def zn_table(n: int, t: int, u: int, adjoin: bool = False) -> list[list[int]]:
    size = n + 1 if adjoin else n
    e = n
    tab = [[0] * size for _ in range(size)]
    for a in range(size):
        for b in range(size):
            if adjoin and a == e:
                tab[a][b] = b
            elif adjoin and b == e:
                tab[a][b] = a
            elif adjoin and a == b:
                tab[a][b] = e
            else:
                tab[a][b] = (t * a + u * b) % n
    return tab


def associative(tab, elems=None) -> bool:
    elems = range(len(tab)) if elems is None else elems
    return all(tab[tab[a][b]][c] == tab[a][tab[b][c]] for a in elems for b in elems for c in elems)


def commutative(tab, elems=None) -> bool:
    elems = range(len(tab)) if elems is None else elems
    return all(tab[a][b] == tab[b][a] for a in elems for b in elems)


def idempotent(tab) -> bool:
    return all(tab[a][a] == a for a in range(len(tab)))


def _moufang(m, x, y, z):
    return m(m(x, y), m(z, x)) == m(m(x, m(y, z)), x)


def _bol(m, x, y, z):
    return m(m(m(x, y), z), y) == m(x, m(m(y, z), y))


def law_holds(tab, law: str, elems=None) -> bool:
    elems = list(range(len(tab))) if elems is None else list(elems)
    m = lambda a, b: tab[a][b]  # noqa: E731
    if law == "moufang":
        return all(_moufang(m, *p) for p in product(elems, repeat=3))
    if law == "bol":
        return all(_bol(m, *p) for p in product(elems, repeat=3))
    if law == "p":
        return all(m(m(x, y), x) == m(x, m(y, x)) for x, y in product(elems, repeat=2))
    if law == "ralt":
        return all(m(m(x, y), y) == m(x, m(y, y)) for x, y in product(elems, repeat=2))
    if law == "lalt":
        return all(m(m(x, x), y) == m(x, m(x, y)) for x, y in product(elems, repeat=2))
    if law == "alt":
        return law_holds(tab, "lalt", elems) and law_holds(tab, "ralt", elems)
    raise ValueError(law)


def subsets(n: int, min_size: int = 1, max_size: int | None = None):
    max_size = n if max_size is None else max_size
    for k in range(min_size, max_size + 1):
        yield from combinations(range(n), k)


def is_closed(tab, s) -> bool:
    ss = set(s)
    return all(tab[a][b] in ss for a in s for b in s)


def closed_subsets(tab, proper: bool = True) -> list[tuple[int, ...]]:
    n = len(tab)
    return [s for s in subsets(n, 1, n - 1 if proper else n) if is_closed(tab, s)]


def subsemigroups(tab) -> list[tuple[int, ...]]:
    return [s for s in closed_subsets(tab) if associative(tab, s)]


def is_left_ideal(tab, s) -> bool:
    ss = set(s)
    return all(tab[x][a] in ss for x in range(len(tab)) for a in s)


def is_right_ideal(tab, s) -> bool:
    ss = set(s)
    return all(tab[a][x] in ss for x in range(len(tab)) for a in s)


def has_proper_semigroup(tab, zero: int | None = 0) -> bool:
    """Some proper nonempty subset other than {zero} is closed and associative."""
    for s in subsemigroups(tab):
        if zero is not None and s == (zero,):
            continue
        return True
    return False


def class_pairs(n: int, tag: str) -> list[tuple[int, int]]:
    from math import gcd
    out = []
    for t in range(n):
        for u in range(n):
            if tag == "z" and t != u and t and u and gcd(t, u) == 1:
                out.append((t, u))
            elif tag == "zs" and t != u and t and u:
                out.append((t, u))
            elif tag == "zss" and t and u:
                out.append((t, u))
            elif tag == "zsss" and (t, u) != (0, 0):
                out.append((t, u))
    return out


def closed_state_sets(delta) -> list[tuple[int, ...]]:
    k = len(delta)
    out = []
    for s in subsets(k):
        ss = set(s)
        if all(r in ss for z in s for r in delta[z]):
            out.append(s)
    return out
