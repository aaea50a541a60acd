#!/usr/bin/env python3
"""Tiny brute-force reference used to pin expected values in the C++ tests.

Everything here is computed the slow, obvious way (explicit state-space
search, no closure tricks) so it stays an independent cross-check.
Run it and copy the printed values into the tests when they change.
"""

from itertools import combinations, permutations

# ---- graphs (adjacency as frozensets over 0..n-1) ----


def make_graph(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return n, [frozenset(a) for a in adj]


PAW = make_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
P3 = make_graph(3, [(0, 1), (1, 2)])
P4 = make_graph(4, [(0, 1), (1, 2), (2, 3)])
K3K2 = make_graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)])

# leaks: ('v', x), ('e', u, v) with u < v, ('a', t, h)


def disables(leaks, t, h):
    for lk in leaks:
        if lk[0] == "v" and lk[1] == t:
            return True
        if lk[0] == "e" and {lk[1], lk[2]} == {t, h}:
            return True
        if lk[0] == "a" and (lk[1], lk[2]) == (t, h):
            return True
    return False


def valid_forces(g, blue, leaks):
    n, adj = g
    out = []
    for u in sorted(blue):
        white = adj[u] - blue
        if len(white) == 1:
            v = next(iter(white))
            if not disables(leaks, u, v):
                out.append((u, v))
    return out


def closure(g, blue, leaks):
    blue = set(blue)
    while True:
        fs = valid_forces(g, blue, leaks)
        heads = {v for _, v in fs}
        if not heads:
            return frozenset(blue)
        blue |= heads


def forces_in_complete_processes(g, blue, leaks):
    """All (u,v) appearing in some process that colors the whole graph."""
    n, adj = g
    full = frozenset(range(n))
    start = frozenset(blue)
    seen = {start}
    stack = [start]
    edges = []  # (state, (u,v), state')
    while stack:
        s = stack.pop()
        for u, v in valid_forces(g, s, leaks):
            t = s | {v}
            edges.append((s, (u, v), t))
            if t not in seen:
                seen.add(t)
                stack.append(t)
    if full not in seen:
        return set()
    co = {full}
    changed = True
    while changed:
        changed = False
        for s, _, t in edges:
            if t in co and s not in co:
                co.add(s)
                changed = True
    return {f for s, f, t in edges if s in co and t in co}


def leak_universe(g, kind):
    n, adj = g
    edges = sorted({(min(u, v), max(u, v)) for u in range(n) for v in adj[u]})
    if kind == "vertex":
        return [("v", x) for x in range(n)]
    if kind == "edge":
        return [("e", u, v) for u, v in edges]
    if kind == "specified":
        return sorted(("a", t, h) for u, v in edges for t, h in ((u, v), (v, u)))
    return leak_universe(g, "vertex") + leak_universe(g, "edge") + leak_universe(g, "specified")


def leak_sets(g, kind, ell):
    uni = leak_universe(g, kind)
    for k in range(0, ell + 1):
        for c in combinations(uni, k):
            yield c


def is_leaky(g, blue, kind, ell):
    n, _ = g
    full = frozenset(range(n))
    return all(closure(g, blue, L) == full for L in leak_sets(g, kind, ell))


def first_breaking(g, blue, kind, ell):
    n, _ = g
    full = frozenset(range(n))
    for L in leak_sets(g, kind, ell):
        stalled = closure(g, blue, L)
        if stalled != full:
            return L, sorted(stalled)
    return None


def subsets_colex(n, k):
    """k-subsets of range(n) ordered by characteristic bitmask."""
    masks = sorted(
        sum(1 << i for i in c) for c in combinations(range(n), k)
    )
    for m in masks:
        yield frozenset(i for i in range(n) if m >> i & 1)


def leaky_number(g, kind, ell):
    n, _ = g
    for k in range(n + 1):
        for b in subsets_colex(n, k):
            if is_leaky(g, b, kind, ell):
                return k, sorted(b)
    raise AssertionError


# ---- pattern (placement) membership ----


def placements(g, pattern_arcs):
    n, adj = g
    out = set()
    arcs = sorted(set(pattern_arcs))
    for r in range(len(arcs) + 1):
        for sub in combinations(arcs, r):
            nodes = sorted({x for a in sub for x in a})
            for img in permutations(range(n), len(nodes)):
                phi = dict(zip(nodes, img))
                placed = tuple(sorted((phi[t], phi[h]) for t, h in sub))
                if all(h in adj[t] for t, h in placed):
                    out.add(placed)
    return sorted(out)


def is_pattern_leaky(g, blue, pattern_arcs):
    n, _ = g
    full = frozenset(range(n))
    return all(
        closure(g, blue, [("a", t, h) for t, h in pl]) == full
        for pl in placements(g, pattern_arcs)
    )


def pattern_number(g, pattern_arcs):
    n, _ = g
    for k in range(n + 1):
        for b in subsets_colex(n, k):
            if is_pattern_leaky(g, b, pattern_arcs):
                return k, sorted(b)
    raise AssertionError


def main():
    print("== numbers (value, colex-first witness) ==")
    print("Z(paw)        :", leaky_number(PAW, "vertex", 0))
    print("Z_1(paw)      :", leaky_number(PAW, "vertex", 1))
    print("Z_1(P3)       :", leaky_number(P3, "vertex", 1))
    print("Z(P3)         :", leaky_number(P3, "vertex", 0))
    for kind in ("vertex", "edge", "specified", "mixed"):
        print(f"Z^{kind}_1(K3xK2):", leaky_number(K3K2, kind, 1))
    for kind in ("vertex", "edge", "specified", "mixed"):
        print(f"Z^{kind}_2(K3xK2):", leaky_number(K3K2, kind, 2))

    print("== breaking leak sets ==")
    print("K3xK2 B={0,1,2} specified ell=2:", first_breaking(K3K2, {0, 1, 2}, "specified", 2))

    print("== possible forces (complete-process semantics) ==")
    print("P3 B={0,2}    :", sorted(forces_in_complete_processes(P3, {0, 2}, [])))
    print("P3 B={0}      :", sorted(forces_in_complete_processes(P3, {0}, [])))
    print("K3xK2 B=x-clique:", sorted(forces_in_complete_processes(K3K2, {0, 1, 2}, [])))
    print(
        "K3xK2 B=x leak v0:",
        sorted(forces_in_complete_processes(K3K2, {0, 1, 2}, [("v", 0)])),
    )

    print("== patterns ==")
    single = [(0, 1)]
    matching3 = [(0, 1), (2, 3), (4, 5)]
    instar2 = [(0, 2), (1, 2)]
    print("Z_P(P3, single arc):", pattern_number(P3, single))
    print("placements(P3, two disjoint arcs):", placements(P3, [(0, 1), (2, 3)]))
    print("K3xK2 B=x L1(matching3) leaky?:", is_pattern_leaky(K3K2, {0, 1, 2}, matching3))
    print("Z_P(K3xK2, matching3):", pattern_number(K3K2, matching3))
    print("Z_P(K3xK2, instar2):", pattern_number(K3K2, instar2))
    print("Z_P(K3xK2, single arc):", pattern_number(K3K2, single))


if __name__ == "__main__":
    main()
