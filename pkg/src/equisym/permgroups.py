"""Minimal permutation-group arithmetic.

Just enough machinery to *verify* the finite-group extension witnesses
shipped with the package: closure, element orders, and the coset
bookkeeping that turns a group action with known quotient data into the
quotient data of a subgroup.  Elements are tuples ``p`` with ``p[i]`` the
image of ``i``; ``compose(p, q)`` applies ``q`` first.
"""

from __future__ import annotations

from fractions import Fraction

Perm = tuple[int, ...]


def identity(degree: int) -> Perm:
    return tuple(range(degree))


def compose(p: Perm, q: Perm) -> Perm:
    return tuple(p[q[i]] for i in range(len(p)))


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def power(p: Perm, k: int) -> Perm:
    acc = identity(len(p))
    base = p
    k = int(k)
    if k < 0:
        base, k = inverse(p), -k
    while k:
        if k & 1:
            acc = compose(acc, base)
        base = compose(base, base)
        k >>= 1
    return acc


def order(p: Perm) -> int:
    e = identity(len(p))
    q, k = p, 1
    while q != e:
        q = compose(q, p)
        k += 1
    return k


def closure(gens: list[Perm]) -> frozenset[Perm]:
    if not gens:
        raise ValueError("need at least one generator")
    e = identity(len(gens[0]))
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def cyclic_subgroup(p: Perm) -> list[Perm]:
    """Powers of ``p`` in order ``p^0, p^1, ...``."""
    e = identity(len(p))
    out = [e]
    q = p
    while q != e:
        out.append(q)
        q = compose(q, p)
    return out


def conjugate(g: Perm, y: Perm) -> Perm:
    return compose(compose(g, y), inverse(g))


def subgroup_quotient_data(
    group: frozenset[Perm],
    vector: list[Perm],
    periods: list[int],
    cover_genus: int,
    subgroup: list[Perm],
) -> tuple[int, list[tuple[int, Perm]]]:
    """Quotient data of the ``subgroup``-action on the covering surface.

    ``vector`` and ``periods`` describe the full group action on a genus-0
    quotient (one torsion generator per cone point, product trivial).  For
    each cone point the surface points above it are the cosets of the
    generator's cyclic subgroup; the subgroup's orbits on them give the
    cone points of the intermediate quotient, with period the order of the
    orbit stabiliser.  Returns ``(quotient_genus, [(period, stab_gen)])``
    where ``stab_gen`` generates the stabiliser of one point in the orbit;
    the quotient genus is solved exactly from Riemann-Hurwitz.
    """
    n_sub = len(subgroup)
    sub_set = frozenset(subgroup)
    cones: list[tuple[int, Perm]] = []
    for y, m in zip(vector, periods):
        k = cyclic_subgroup(y)
        assert len(k) == m
        kset = frozenset(k)
        cosets: dict[frozenset[Perm], Perm] = {}
        for g in group:
            c = frozenset(compose(g, x) for x in k)
            if c not in cosets:
                cosets[c] = g
        assert len(cosets) == len(group) // m
        unvisited = dict(cosets)
        while unvisited:
            coset, g = next(iter(unvisited.items()))
            orbit = set()
            stack = [(coset, g)]
            while stack:
                c, rep = stack.pop()
                if c in orbit:
                    continue
                orbit.add(c)
                unvisited.pop(c, None)
                for s in subgroup:
                    c2 = frozenset(compose(s, x) for x in c)
                    if c2 not in orbit:
                        stack.append((c2, compose(s, rep)))
            g_inv = inverse(g)
            stab = [s for s in subgroup if compose(compose(g_inv, s), g) in kset]
            d = len(stab)
            assert len(orbit) * d == n_sub  # orbit-stabiliser
            if d > 1:
                w = power(conjugate(g, y), m // d)
                assert w in sub_set and order(w) == d
                cones.append((d, w))
    area = Fraction(-2)
    for d, _ in cones:
        area += Fraction(d - 1, d)
    # 2g - 2 = |H| (2h' - 2 + sum(1 - 1/d));  solve for h'
    lhs = Fraction(2 * cover_genus - 2, n_sub)
    h2 = lhs - sum(Fraction(d - 1, d) for d, _ in cones) + 2
    if h2.denominator != 1 or h2.numerator % 2 != 0:
        raise ValueError("subgroup quotient genus is not integral")
    hq = h2.numerator // 2
    if hq < 0:
        raise ValueError("negative quotient genus")
    return hq, sorted(cones, key=lambda c: c[0])


def discrete_log(x: Perm, generator: Perm) -> int:
    for k, p in enumerate(cyclic_subgroup(generator)):
        if p == x:
            return k
    raise ValueError("element is not a power of the generator")
