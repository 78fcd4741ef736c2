#!/usr/bin/env python3
"""Regenerate data/catalog.txt: all groups of order <= 30 as permutation groups.

Every named group is built from an explicit construction (products, metacyclic
presentations, semidirect products, matrix groups) as a Cayley table. The
script then checks

  * entries of the same order are pairwise non-isomorphic,
  * the per-order counts match the classical counts,
  * every cyclic extension of prime degree of every smaller catalog group is
    isomorphic to some catalog entry (all groups of order <= 30 are solvable,
    so this closes the list),

and writes each group as a transitive permutation group of minimal degree.

Usage: make_catalog.py [output-path]
"""

import itertools
import sys
from collections import Counter

CLASSICAL_COUNTS = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5,
                    2, 2, 1, 15, 2, 2, 5, 4, 1, 4]


class Group:
    """Finite group as a Cayley table; element 0 is the identity."""

    def __init__(self, table):
        self.t = table
        self.n = len(table)
        assert all(table[0][x] == x and table[x][0] == x for x in range(self.n))
        self.inv = [0] * self.n
        for x in range(self.n):
            for y in range(self.n):
                if table[x][y] == 0:
                    self.inv[x] = y
                    break
        self._orders = None

    def mul(self, x, y):
        return self.t[x][y]

    def order_of(self, x):
        k, y = 1, x
        while y != 0:
            y = self.t[y][x]
            k += 1
        return k

    @property
    def orders(self):
        if self._orders is None:
            self._orders = [self.order_of(x) for x in range(self.n)]
        return self._orders

    def closure(self, gens):
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.t[x][g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    def is_abelian(self):
        return all(self.t[x][y] == self.t[y][x] for x in range(self.n) for y in range(self.n))

    def center(self):
        return [x for x in range(self.n) if all(self.t[x][y] == self.t[y][x] for y in range(self.n))]

    def derived(self):
        comms = {self.t[self.t[self.inv[x]][self.inv[y]]][self.t[x][y]]
                 for x in range(self.n) for y in range(self.n)}
        return self.closure(sorted(comms))

    def spectrum(self):
        return Counter(self.orders)


def from_elements(elements, mul, identity):
    index = {e: i for i, e in enumerate(elements)}
    assert elements[0] == identity
    return Group([[index[mul(a, b)] for b in elements] for a in elements])


def generate(gens, mul, identity):
    elems = [identity]
    seen = {identity}
    i = 0
    while i < len(elems):
        for g in gens:
            y = mul(elems[i], g)
            if y not in seen:
                seen.add(y)
                elems.append(y)
        i += 1
    return elems


def cyclic(n):
    return Group([[(a + b) % n for b in range(n)] for a in range(n)])


def product(*groups):
    elems = list(itertools.product(*[range(g.n) for g in groups]))
    return from_elements(elems, lambda a, b: tuple(g.t[x][y] for g, x, y in zip(groups, a, b)),
                         tuple(0 for _ in groups))


def metacyclic(n, m, k, t):
    """<a, b | a^n, b^m = a^t, b a b^-1 = a^k>."""
    assert pow(k, m, n) == 1 % n and (k * t - t) % n == 0
    elems = [(i, j) for j in range(m) for i in range(n)]

    def mul(x, y):
        i, j = x
        i2, j2 = y
        e = (i + pow(k, j, n) * i2) % n
        jj = j + j2
        if jj >= m:
            e = (e + t) % n
            jj -= m
        return (e, jj)

    return from_elements(elems, mul, (0, 0))


def perm_group(gens):
    deg = len(gens[0])
    ident = tuple(range(deg))
    return from_elements(generate([tuple(g) for g in gens], lambda p, q: tuple(p[q[i]] for i in range(deg)), ident),
                         lambda p, q: tuple(p[q[i]] for i in range(deg)), ident)


def cycles(deg, *cs):
    img = list(range(deg))
    for c in cs:
        for a, b in zip(c, c[1:] + c[:1]):
            img[a] = b
    return img


def matrix_group(p, gens):
    dim = len(gens[0])
    ident = tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim))

    def mul(a, b):
        return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(dim)) % p for j in range(dim)) for i in range(dim))

    gens = [tuple(tuple(x % p for x in row) for row in g) for g in gens]
    return from_elements(generate(gens, mul, ident), mul, ident)


def hom_images(group, gens, images, target_mul, target_identity):
    """Images of every element under the homomorphism fixed on generators."""
    img = {0: target_identity}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g, gi in zip(gens, images):
                y = group.t[x][g]
                v = target_mul(img[x], gi)
                if y in img:
                    assert img[y] == v, "generator images do not define a homomorphism"
                else:
                    img[y] = v
                    nxt.append(y)
        frontier = nxt
    return [img[x] for x in range(group.n)]


def semidirect(normal, complement, comp_gens, auts):
    """normal x| complement; auts[i] is the automorphism (as a list) attached to comp_gens[i]."""
    ident = tuple(range(normal.n))
    compose = lambda f, g: tuple(f[g[x]] for x in range(normal.n))
    phi = hom_images(complement, comp_gens, [tuple(a) for a in auts], compose, ident)
    elems = [(x, h) for h in range(complement.n) for x in range(normal.n)]

    def mul(a, b):
        x, h = a
        y, k = b
        return (normal.t[x][phi[h][y]], complement.t[h][k])

    return from_elements(elems, mul, (0, 0))


def cyclic_extension(normal, alpha, n0, p):
    elems = [(x, i) for i in range(p) for x in range(normal.n)]
    powers = [list(range(normal.n))]
    for _ in range(p):
        powers.append([alpha[v] for v in powers[-1]])

    def mul(a, b):
        x, i = a
        y, j = b
        v = normal.t[x][powers[i][y]]
        if i + j >= p:
            v = normal.t[v][n0]
        return (v, (i + j) % p)

    return from_elements(elems, mul, (0, 0))


def small_generating_set(g):
    if g.n == 1:
        return []
    elems = sorted(range(1, g.n), key=lambda x: (-g.orders[x], x))
    for k in range(1, 6):
        for combo in itertools.combinations(elems, k):
            if len(g.closure(combo)) == g.n:
                return list(combo)
    raise AssertionError("no small generating set")


def automorphisms(g):
    gens = small_generating_set(g)
    if not gens:
        return [list(range(g.n))]
    cands = [[y for y in range(g.n) if g.orders[y] == g.orders[x]] for x in gens]
    auts = []
    for images in itertools.product(*cands):
        img = {0: 0}
        frontier = [0]
        ok = True
        while frontier and ok:
            nxt = []
            for x in frontier:
                for gg, gi in zip(gens, images):
                    y = g.t[x][gg]
                    v = g.t[img[x]][gi]
                    if y in img:
                        if img[y] != v:
                            ok = False
                            break
                    else:
                        img[y] = v
                        nxt.append(y)
                if not ok:
                    break
            frontier = nxt
        if ok and len(set(img.values())) == g.n:
            auts.append([img[x] for x in range(g.n)])
    return auts


def fingerprint(g):
    sq = Counter(g.orders[g.t[x][x]] for x in range(g.n))
    return (g.n, tuple(sorted(g.spectrum().items())), len(g.center()), len(g.derived()),
            g.is_abelian(), tuple(sorted(sq.items())))


def isomorphic(a, b):
    if fingerprint(a) != fingerprint(b):
        return False
    gens = small_generating_set(a)
    if not gens:
        return True
    cands = [[y for y in range(b.n) if b.orders[y] == a.orders[x]] for x in gens]
    for images in itertools.product(*cands):
        img = {0: 0}
        frontier = [0]
        ok = True
        while frontier and ok:
            nxt = []
            for x in frontier:
                for gg, gi in zip(gens, images):
                    y = a.t[x][gg]
                    v = b.t[img[x]][gi]
                    if y in img:
                        if img[y] != v:
                            ok = False
                            break
                    else:
                        img[y] = v
                        nxt.append(y)
                if not ok:
                    break
            frontier = nxt
        if ok and len(set(img.values())) == b.n:
            return True
    return False


def all_subgroups(g):
    cyc = {g.closure([x]) for x in range(g.n)}
    subs = set(cyc)
    frontier = list(cyc)
    while frontier:
        nxt = []
        for s in frontier:
            for c in cyc:
                if not c <= s:
                    j = g.closure(sorted(s | c))
                    if j not in subs:
                        subs.add(j)
                        nxt.append(j)
        frontier = nxt
    return subs


def is_normal(g, s):
    return all(g.t[g.t[x][h]][g.inv[x]] in s for x in range(g.n) for h in s)


def supersolvable_by_chain_search(g):
    """Search for a normal series 1 < N1 < ... < G with prime-order factors."""
    normals = [s for s in all_subgroups(g) if is_normal(g, s)]
    target = frozenset(range(g.n))
    start = frozenset([0])
    seen = {start}
    stack = [start]
    while stack:
        cur = stack.pop()
        if cur == target:
            return True
        for m in normals:
            if cur < m and m not in seen:
                idx = len(m) // len(cur)
                if idx > 1 and all(idx % d for d in range(2, idx)):
                    seen.add(m)
                    stack.append(m)
    return False


def minimal_transitive_action(g):
    """Generators of a faithful action on cosets of a largest core-free subgroup."""
    best = frozenset([0])
    for s in all_subgroups(g):
        if len(s) <= len(best) or len(s) == g.n:
            continue
        core = set(s)
        for x in range(g.n):
            core &= {g.t[g.t[x][h]][g.inv[x]] for h in s}
        if core == {0}:
            best = s
    cosets = []
    owner = {}
    for x in range(g.n):
        if x in owner:
            continue
        c = frozenset(g.t[x][h] for h in best)
        for y in c:
            owner[y] = len(cosets)
        cosets.append(c)
    gens = small_generating_set(g)
    perms = []
    for s in gens:
        perms.append([owner[g.t[s][min(c)]] for c in cosets])
    return len(cosets), perms


def cycle_text(img):
    seen = set()
    out = []
    for i in range(len(img)):
        if i in seen or img[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = img[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = img[j]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) if out else "()"


def build_named():
    C = cyclic
    D = lambda n: metacyclic(n, 2, n - 1, 0) if n > 2 else product(C(2), C(2))
    Dic = lambda n: metacyclic(2 * n, 2, 2 * n - 1, n)
    S3 = D(3)
    D8 = D(4)
    Q8 = Dic(2)
    A4 = perm_group([cycles(4, [0, 1, 2]), cycles(4, [0, 1], [2, 3])])
    S4 = perm_group([cycles(4, [0, 1]), cycles(4, [0, 1, 2, 3])])
    SL23 = matrix_group(3, [((1, 1), (0, 1)), ((1, 0), (1, 1))])
    heis = matrix_group(3, [((1, 1, 0), (0, 1, 0), (0, 0, 1)), ((1, 0, 0), (0, 1, 1), (0, 0, 1))])

    c4c2 = product(C(4), C(2))
    # elements of C4 x C2 are indexed as (i, j) -> 2*i + j
    idx = lambda i, j: 2 * (i % 4) + (j % 2)
    alpha_g16_3 = [idx(i + 0, j + i) for i in range(4) for j in range(2)]  # a -> ab, b -> b
    alpha_pauli = [idx(i + 2 * j, j) for i in range(4) for j in range(2)]  # a -> a, b -> a^2 b

    c3 = C(3)
    # C3 x| D8 with the rotation inverting C3 and the reflection acting trivially
    inv3 = [0, 2, 1]
    d8 = D8
    rot = next(x for x in range(d8.n) if d8.orders[x] == 4)
    refl = next(x for x in range(d8.n) if d8.orders[x] == 2 and d8.closure([rot, x]) == frozenset(range(8))
                and x not in d8.center())
    c3_d8 = semidirect(c3, d8, [rot, refl], [inv3, [0, 1, 2]])

    c3sq = product(C(3), C(3))
    inv_c3sq = [c3sq.inv[x] for x in range(9)]
    frob18 = semidirect(c3sq, C(2), [1], [inv_c3sq])

    named = {
        1: [("C1", C(1))],
        2: [("C2", C(2))],
        3: [("C3", C(3))],
        4: [("C4", C(4)), ("C2^2", product(C(2), C(2)))],
        5: [("C5", C(5))],
        6: [("S3", S3), ("C6", C(6))],
        7: [("C7", C(7))],
        8: [("C8", C(8)), ("C4xC2", c4c2), ("D8", D8), ("Q8", Q8), ("C2^3", product(C(2), C(2), C(2)))],
        9: [("C9", C(9)), ("C3^2", c3sq)],
        10: [("D10", D(5)), ("C10", C(10))],
        11: [("C11", C(11))],
        12: [("Dic3", Dic(3)), ("C12", C(12)), ("A4", A4), ("D12", D(6)), ("C6xC2", product(C(6), C(2)))],
        13: [("C13", C(13))],
        14: [("D14", D(7)), ("C14", C(14))],
        15: [("C15", C(15))],
        16: [("C16", C(16)),
             ("C4^2", product(C(4), C(4))),
             ("C2^2:C4", cyclic_extension(c4c2, alpha_g16_3, 0, 2)),
             ("C4:C4", metacyclic(4, 4, 3, 0)),
             ("C8xC2", product(C(8), C(2))),
             ("M16", metacyclic(8, 2, 5, 0)),
             ("D16", D(8)),
             ("SD16", metacyclic(8, 2, 3, 0)),
             ("Q16", Dic(4)),
             ("C4xC2^2", product(C(4), C(2), C(2))),
             ("C2xD8", product(C(2), D8)),
             ("C2xQ8", product(C(2), Q8)),
             ("C4oD8", cyclic_extension(c4c2, alpha_pauli, 0, 2)),
             ("C2^4", product(C(2), C(2), C(2), C(2)))],
        17: [("C17", C(17))],
        18: [("D18", D(9)), ("C18", C(18)), ("C3xS3", product(C(3), S3)), ("C3^2:C2", frob18),
             ("C6xC3", product(C(6), C(3)))],
        19: [("C19", C(19))],
        20: [("Dic5", Dic(5)), ("C20", C(20)), ("F20", metacyclic(5, 4, 2, 0)), ("D20", D(10)),
             ("C10xC2", product(C(10), C(2)))],
        21: [("C7:C3", metacyclic(7, 3, 2, 0)), ("C21", C(21))],
        22: [("D22", D(11)), ("C22", C(22))],
        23: [("C23", C(23))],
        24: [("C3:C8", metacyclic(3, 8, 2, 0)),
             ("C24", C(24)),
             ("SL(2,3)", SL23),
             ("Dic6", Dic(6)),
             ("C4xS3", product(C(4), S3)),
             ("D24", D(12)),
             ("C2xDic3", product(C(2), Dic(3))),
             ("C3:D8", c3_d8),
             ("C12xC2", product(C(12), C(2))),
             ("C3xD8", product(C(3), D8)),
             ("C3xQ8", product(C(3), Q8)),
             ("S4", S4),
             ("C2xA4", product(C(2), A4)),
             ("C2^2xS3", product(C(2), C(2), S3)),
             ("C6xC2^2", product(C(6), C(2), C(2)))],
        25: [("C25", C(25)), ("C5^2", product(C(5), C(5)))],
        26: [("D26", D(13)), ("C26", C(26))],
        27: [("C27", C(27)), ("C9xC3", product(C(9), C(3))), ("He27", heis), ("C9:C3", metacyclic(9, 3, 4, 0)),
             ("C3^3", product(C(3), C(3), C(3)))],
        28: [("Dic7", Dic(7)), ("C28", C(28)), ("D28", D(14)), ("C14xC2", product(C(14), C(2)))],
        29: [("C29", C(29))],
        30: [("C5xS3", product(C(5), S3)), ("C3xD10", product(C(3), D(5))), ("D30", D(15)), ("C30", C(30))],
    }
    return named


NON_SUPERSOLVABLE = {"A4", "SL(2,3)", "S4", "C2xA4"}


def main():
    out_path = sys.argv[1] if len(sys.argv) > 1 else "data/catalog.txt"
    named = build_named()

    for n, entries in named.items():
        assert len(entries) == CLASSICAL_COUNTS[n - 1], (n, len(entries))
        for name, g in entries:
            assert g.n == n, (name, g.n)
        for (na, ga), (nb, gb) in itertools.combinations(entries, 2):
            assert not isomorphic(ga, gb), (na, nb)

    # exhaustiveness: every prime-degree cyclic extension is already listed
    for n in range(2, 31):
        for p in [q for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29) if n % q == 0]:
            for _, normal in named[n // p]:
                auts = automorphisms(normal)
                conj = [[normal.t[normal.t[c][x]][normal.inv[c]] for x in range(normal.n)]
                        for c in range(normal.n)]
                for alpha in auts:
                    power = list(range(normal.n))
                    for _ in range(p):
                        power = [alpha[v] for v in power]
                    for n0 in range(normal.n):
                        if alpha[n0] != n0 or power != conj[n0]:
                            continue
                        ext = cyclic_extension(normal, alpha, n0, p)
                        if not any(isomorphic(ext, g) for _, g in named[n]):
                            raise AssertionError(f"unlisted group of order {n}")

    lines = ["# Groups of order 1..30, one block per isomorphism type.",
             "# Generated by tools/make_catalog.py; see README for the grammar.", ""]
    total = 0
    for n in sorted(named):
        for index, (name, g) in enumerate(named[n], start=1):
            degree, perms = minimal_transitive_action(g)
            check = perm_group(perms) if perms else Group([[0]])
            assert check.n == n and isomorphic(check, g), name
            ss = supersolvable_by_chain_search(g)
            assert ss == (name not in NON_SUPERSOLVABLE), name
            spec = ",".join(f"{d}:{c}" for d, c in sorted(g.spectrum().items()))
            lines.append(f"{n}/{index}/{name}/{degree}")
            if perms:
                lines.extend(cycle_text(p) for p in perms)
            else:
                lines.append("()")
            lines.append(f"expect spectrum={spec} abelian={int(g.is_abelian())} supersolvable={int(ss)}")
            lines.append("")
            total += 1
    assert total == 92
    with open(out_path, "w") as f:
        f.write("\n".join(lines))
    print(f"wrote {total} entries to {out_path}")


if __name__ == "__main__":
    main()
