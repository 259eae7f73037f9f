"""Construct the catalog groups from scratch and print frozen generator words.

Run from the repository root with the package installed.  The printed ENTRIES
table is pasted into src/formata/catalog.py; this script is the construction
of record for the matrix-action entries (Q8, SL23, G75, 2S4).
"""

from formata.errors import CapacityError
from formata.formations import Formation
from formata.groups import PermGroup, closure_elements
from formata.perms import Perm


def cyclic_words(n):
    if n == 1:
        return []
    return [Perm(tuple((i + 1) % n for i in range(n)))]


def quaternion_perms():
    """Left multiplication action of Q8 on its 8 elements."""
    units = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    base = {
        ("i", "i"): "-1", ("j", "j"): "-1", ("k", "k"): "-1",
        ("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j",
        ("j", "i"): "-k", ("k", "j"): "-i", ("i", "k"): "-j",
    }

    def mul(a, b):
        sign = 1
        if a.startswith("-"):
            sign, a = -sign, a[1:]
        if b.startswith("-"):
            sign, b = -sign, b[1:]
        if a == "1":
            out = b
        elif b == "1":
            out = a
        else:
            out = base[(a, b)]
        if out.startswith("-"):
            sign, out = -sign, out[1:]
        return out if sign == 1 else "-" + out

    idx = {u: n for n, u in enumerate(units)}
    perms = []
    for g in ("i", "j"):
        perms.append(Perm(tuple(idx[mul(g, u)] for u in units)))
    return perms


def vec_index(q):
    """Number the nonzero vectors of GF(q)^2 as a*q + b - 1."""
    out = {}
    for a in range(q):
        for b in range(q):
            if a or b:
                out[(a, b)] = a * q + b - 1
    return out


def mat_perm(M, q):
    """Permutation of the nonzero vectors induced by the matrix M."""
    idx = vec_index(q)
    images = [0] * len(idx)
    for (a, b), i in idx.items():
        w = ((M[0][0] * a + M[0][1] * b) % q, (M[1][0] * a + M[1][1] * b) % q)
        images[i] = idx[w]
    return Perm(tuple(images))


def mat_mul(A, B, q):
    return (
        ((A[0][0] * B[0][0] + A[0][1] * B[1][0]) % q, (A[0][0] * B[0][1] + A[0][1] * B[1][1]) % q),
        ((A[1][0] * B[0][0] + A[1][1] * B[1][0]) % q, (A[1][0] * B[0][1] + A[1][1] * B[1][1]) % q),
    )


def mat_order(M, q):
    ident = ((1, 0), (0, 1))
    P, n = M, 1
    while P != ident:
        P = mat_mul(P, M, q)
        n += 1
    return n


def sl2_elements(q):
    out = []
    for a in range(q):
        for b in range(q):
            for c in range(q):
                for d in range(q):
                    if (a * d - b * c) % q == 1:
                        out.append(((a, b), (c, d)))
    return out


def g75_perms():
    """C5 x C5 by translations, order-3 companion matrix of x^2 + x + 1."""
    q = 5
    points = [(a, b) for a in range(q) for b in range(q)]
    idx = {v: n for n, v in enumerate(points)}
    t1 = Perm(tuple(idx[((a + 1) % q, b)] for (a, b) in points))
    t2 = Perm(tuple(idx[(a, (b + 1) % q)] for (a, b) in points))
    M = ((0, 4), (1, 4))
    c = Perm(tuple(idx[((M[0][0] * a + M[0][1] * b) % q, (M[1][0] * a + M[1][1] * b) % q)] for (a, b) in points))
    return [t1, t2, c]


def find_2s4():
    """First order-48 subgroup of SL(2,7) on 48 vectors with one involution."""
    q = 7
    mats = sl2_elements(q)
    order8 = [M for M in mats if mat_order(M, q) == 8]
    order3 = [M for M in mats if mat_order(M, q) == 3]
    for A in order8:
        pa = mat_perm(A, q)
        for B in order3:
            pb = mat_perm(B, q)
            try:
                els = closure_elements(48, [pa, pb], cap=48)
            except CapacityError:
                continue
            if len(els) != 48:
                continue
            if sum(1 for x in els if x.order() == 2) != 1:
                continue
            return [pa, pb]
    raise AssertionError("no order-48 subgroup with a unique involution found")


def entry(name, degree, perms, solvable=True):
    G = PermGroup(degree, perms)
    k = len(G.conjugacy_classes())
    assert G.is_solvable() == solvable, name
    return (name, degree, [p.cycle_string() for p in perms], G.order(), k, solvable)


def main():
    entries = []
    for n in range(1, 13):
        entries.append(entry("C%d" % n, max(n, 1), cyclic_words(n)))
    entries.append(entry("V4", 4, [Perm((1, 0, 3, 2)), Perm((2, 3, 0, 1))]))
    entries.append(entry("S3", 3, [Perm((1, 2, 0)), Perm((1, 0, 2))]))
    entries.append(entry("D8", 4, [Perm((1, 2, 3, 0)), Perm((2, 1, 0, 3))]))
    entries.append(entry("Q8", 8, quaternion_perms()))
    entries.append(entry("A4", 4, [Perm((1, 2, 0, 3)), Perm((0, 2, 3, 1))]))
    entries.append(entry("S4", 4, [Perm((1, 2, 3, 0)), Perm((1, 0, 2, 3))]))
    entries.append(
        entry("D12", 6, [Perm((1, 2, 3, 4, 5, 0)), Perm((5, 4, 3, 2, 1, 0))])
    )
    c7 = Perm((1, 2, 3, 4, 5, 6, 0))
    t = Perm(tuple((2 * i) % 7 for i in range(7)))
    entries.append(entry("C7C3", 7, [c7, t]))
    entries.append(entry("G75", 25, g75_perms()))
    s = mat_perm(((0, 2), (1, 0)), 3)
    tt = mat_perm(((1, 1), (0, 1)), 3)
    entries.append(entry("SL23", 8, [s, tt]))
    two_s4 = find_2s4()
    entries.append(entry("2S4", 48, two_s4))

    G = PermGroup(48, two_s4)
    from formata.formations import residual

    K = residual(G, Formation.parse("supersolvable"))
    assert K.order() == 8
    assert sum(1 for x in K.elements() if x.order() == 2) == 1
    assert K.derived_subgroup().order() == 2

    print("ENTRIES = [")
    for name, degree, words, order, classes, solvable in entries:
        print("    CatalogEntry(")
        print("        %r," % name)
        print("        %d," % degree)
        print("        (")
        for w in words:
            print("            %r," % w)
        print("        ),")
        print("        %d," % order)
        print("        %d," % classes)
        print("        %r," % solvable)
        print("    ),")
    print("]")


if __name__ == "__main__":
    main()
