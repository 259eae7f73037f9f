"""Brute-force oracles, independent of the library's algorithmic paths.

Everything here recomputes results by exhaustive enumeration so the main
implementation can be checked against frozen values derived once from these.
"""

from itertools import combinations

from formata.perms import Perm
from formata.groups import PermGroup


def brute_elements(degree, gens):
    """Exhaustive closure under products, no stabilizer chain involved."""
    ident = Perm.identity(degree)
    found = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in found:
                    found.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(found)


def brute_classes(G):
    """Conjugacy classes by conjugating with every element."""
    elts = list(G.elements())
    remaining = set(elts)
    classes = []
    for x in elts:
        if x not in remaining:
            continue
        orbit = {g.inverse() * x * g for g in elts}
        remaining -= orbit
        classes.append(tuple(sorted(orbit)))
    classes.sort(key=lambda c: (len(c), c[0]))
    return classes


def brute_derived(G):
    """Subgroup generated by all commutators of all element pairs."""
    elts = G.elements()
    comms = {a.commutator(b) for a in elts for b in elts}
    return set(brute_elements(G.degree, sorted(comms)))


def brute_center(G):
    elts = G.elements()
    return sorted(x for x in elts if all(x * g == g * x for g in elts))


def brute_normal_subgroups(G):
    """Every subgroup that is a union of conjugacy classes, by subset sweep."""
    classes = brute_classes(G)
    k = len(classes)
    full = set(G.elements())
    found = set()
    for r in range(1, k + 1):
        for combo in combinations(range(k), r):
            union = set()
            for i in combo:
                union |= set(classes[i])
            if Perm.identity(G.degree) not in union:
                continue
            # subgroup test by closure staying inside the union
            closed = all(a * b in union for a in union for b in union)
            if closed:
                found.add(frozenset(union))
    found.add(frozenset(full))
    return sorted(found, key=lambda s: (len(s), tuple(sorted(p.images for p in s))))


def brute_all_subgroups(G):
    """Every subgroup, grown one element at a time from the trivial group."""
    ident = frozenset([Perm.identity(G.degree)])
    found = {ident}
    queue = [ident]
    while queue:
        S = queue.pop()
        for x in G.elements():
            if x in S:
                continue
            T = frozenset(brute_elements(G.degree, sorted(S | {x})))
            if T not in found:
                found.add(T)
                queue.append(T)
    return sorted(found, key=lambda s: (len(s), tuple(sorted(p.images for p in s))))


def group_from(degree, elements):
    return PermGroup.from_elements(degree, elements)


def brute_is_nilpotent(G):
    """Nilpotent iff the ascending central series reaches G."""
    n = G.order()
    Z = set(brute_center(G))
    prev = 1
    while len(Z) != prev:
        prev = len(Z)
        if prev == n:
            return True
        # preimage of the center of G/Z: x with [x, g] in Z for all g
        elts = G.elements()
        Z = {x for x in elts if all(x.commutator(g) in Z for g in elts)}
        Z = set(brute_elements(G.degree, sorted(Z)))
    return len(Z) == n


def oracle_character_table(G):
    """Character table computed independently: exact arithmetic in Q(zeta_e)
    via sympy DomainMatrix, structure constants by full pair counting, and
    eigenvalues via polynomial factorization over the field.  Returns a list
    of rows, one per irreducible, each a list of ANP field elements in class
    order, together with the field used."""
    from sympy import QQ, Poly, Rational, exp, I, pi, symbols
    from sympy.polys.matrices import DomainMatrix
    from math import isqrt

    classes = G.conjugacy_classes()
    k = len(classes)
    e = G.exponent()
    if e == 1:
        return [[QQ.one]], QQ
    fld = QQ.algebraic_field(exp(2 * pi * I / e))
    index_of = {}
    for j, cls in enumerate(classes):
        for x in cls.elements:
            index_of[x] = j

    def structure_matrix(i):
        # counts over all pairs, then divides by the target class size
        raw = [[0] * k for _ in range(k)]
        for x in classes[i].elements:
            for y_idx, cls_j in enumerate(classes):
                for y in cls_j.elements:
                    raw[y_idx][index_of[x * y]] += 1
        rows = []
        for j in range(k):
            row = []
            for t in range(k):
                num, den = raw[j][t], classes[t].size
                assert num % den == 0
                row.append(fld.convert(num // den))
            rows.append(row)
        return DomainMatrix(rows, (k, k), fld)

    x = symbols("x")
    spaces = [DomainMatrix.eye(k, fld).to_dense()]
    for i in range(1, k):
        if all(B.shape[0] == 1 for B in spaces):
            break
        M = structure_matrix(i).to_dense()
        nxt = []
        for B in spaces:
            d = B.shape[0]
            if d == 1:
                nxt.append(B)
                continue
            Br, piv = B.rref()
            BM = (M.matmul(Br.transpose())).transpose()  # rows = images of basis
            C_rows = [[BM[r, p].element for p in piv] for r in range(d)]
            # row r of BM in basis coords reads off pivot columns
            C = DomainMatrix([[fld.convert(v) for v in row] for row in C_rows], (d, d), fld)
            Ct = C.transpose()
            poly = Poly(Ct.charpoly(), x, domain=fld)
            for fac, mult in poly.factor_list()[1]:
                cs = fac.rep.to_list()  # domain elements, descending
                assert len(cs) == 2, "nonlinear factor; eigenvalue not in field"
                lam_el = -cs[1] / cs[0]
                shift = Ct - DomainMatrix.eye(d, fld).to_dense() * lam_el
                ns = shift.to_dense().nullspace().to_dense()
                if ns.shape[0]:
                    nxt.append(ns.matmul(Br))
        spaces = nxt
    assert all(B.shape[0] == 1 for B in spaces) and len(spaces) == k

    inv_class = [index_of[cls.rep.inverse()] for cls in classes]
    rows = []
    for B in spaces:
        w = [B[0, j].element for j in range(k)]
        w0inv = fld.one / w[0]
        w = [v * w0inv for v in w]
        s = fld.zero
        for j in range(k):
            s += w[j] * w[inv_class[j]] * fld.convert(Rational(1, classes[j].size))
        d2 = fld.to_sympy(fld.convert(G.order()) / s)
        d2r = Rational(d2)
        assert d2r.q == 1 and isqrt(int(d2r)) ** 2 == int(d2r)
        deg = isqrt(int(d2r))
        row = [w[j] * fld.convert(Rational(deg, classes[j].size)) for j in range(k)]
        rows.append(row)
    return rows, fld
