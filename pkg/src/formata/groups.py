"""Permutation groups: stabilizer chains, subgroup machinery, quotients, series."""

from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass
from itertools import product as iproduct

from .errors import (
    CapacityError,
    DomainError,
    InternalInconsistencyError,
    UnsupportedGroupError,
)
from .perms import Perm


def order_cap():
    """Largest group order the desk-scale algorithms will touch."""
    return int(os.environ.get("FORMATA_MAX_ORDER", "5000"))


class StabilizerChain:
    """Deterministic stabilizer chain built by incremental Schreier-Sims.

    Level i stores a base point, the generators of the i-th stabilizer, and a
    transversal mapping each orbit point to a coset representative that carries
    the base point onto it.  Certifies order and membership without enumeration.
    """

    def __init__(self, degree):
        self.degree = degree
        self.base = []
        self.gens = []
        self.transversals = []

    def order(self):
        n = 1
        for t in self.transversals:
            n *= len(t)
        return n

    def sift(self, p):
        for i, b in enumerate(self.base):
            img = p.images[b]
            t = self.transversals[i]
            if img not in t:
                return p
            p = p * t[img].inverse()
        return p

    def contains(self, p):
        if p.degree != self.degree:
            return False
        return self.sift(p).is_identity()


def build_chain(degree, generators):
    chain = StabilizerChain(degree)
    for g in generators:
        _chain_add(chain, g, 0)
    return chain


def _chain_add(chain, p, level):
    """Insert p, known to fix base[0..level-1], sifting it to its proper level."""
    for i in range(level, len(chain.base)):
        b = chain.base[i]
        img = p.images[b]
        t = chain.transversals[i]
        if img in t:
            p = p * t[img].inverse()
            if p.is_identity():
                return
        else:
            _chain_new_gen(chain, p, i)
            return
    if not p.is_identity():
        _chain_new_gen(chain, p, len(chain.base))


def _level_gens(chain, level):
    """Strong generators fixing base[0..level-1]: those stored at this level or deeper."""
    out = []
    for j in range(level, len(chain.gens)):
        out.extend(chain.gens[j])
    return out


def _chain_new_gen(chain, p, level):
    if level == len(chain.base):
        b = min(i for i in range(chain.degree) if p.images[i] != i)
        chain.base.append(b)
        chain.gens.append([])
        chain.transversals.append({b: Perm.identity(chain.degree)})
    chain.gens[level].append(p)
    # the new generator enlarges the effective generating set of every level
    # above it as well, so re-close from here back up to the top
    for i in range(level, -1, -1):
        _chain_close(chain, i)


def _chain_close(chain, level):
    """Rebuild the orbit at this level; sift every Schreier generator deeper."""
    b = chain.base[level]
    gens = _level_gens(chain, level)
    trans = {b: Perm.identity(chain.degree)}
    queue = [b]
    while queue:
        pt = queue.pop(0)
        rep = trans[pt]
        for g in gens:
            img = g.images[pt]
            if img not in trans:
                trans[img] = rep * g
                queue.append(img)
    chain.transversals[level] = trans
    for pt in sorted(trans):
        rep = trans[pt]
        for g in gens:
            sg = rep * g * trans[g.images[pt]].inverse()
            if not sg.is_identity():
                _chain_add(chain, sg, level + 1)


@dataclass(frozen=True)
class ConjClass:
    """Conjugacy class: representative is the lexicographically least element."""

    representative: Perm
    elements: tuple
    size: int

    @property
    def rep(self):
        return self.representative


class PermGroup:
    """Finite permutation group of fixed degree, immutable after construction.

    Caches (elements, chain, classes, lattice data) are populated lazily; every
    derived object is deterministic, so late population is idempotent.
    """

    def __init__(self, degree, generators=()):
        self.degree = degree
        gens = []
        seen = set()
        for g in generators:
            if g.degree != degree:
                raise DomainError("generator degree mismatch")
            if not g.is_identity() and g.images not in seen:
                seen.add(g.images)
                gens.append(g)
        self.generators = tuple(gens)
        self._chain = None
        self._order = None
        self._elements = None
        self._element_set = None
        self._classes = None
        self._class_index = None
        self._normals = None
        self._normal_closure_memo = {}
        self._derived = None
        self._center = None
        self._table = None
        self._residuals = {}
        self._projectors = {}
        self._quotients = {}

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_elements(cls, degree, elements):
        """Group from a full element collection; generators are reduced greedily."""
        elts = sorted(set(elements))
        ident = Perm.identity(degree)
        if ident not in elts:
            elts = sorted(set(elts) | {ident})
        gens = _greedy_generators(degree, elts)
        G = cls(degree, gens)
        G._elements = tuple(elts)
        G._element_set = frozenset(elts)
        G._order = len(elts)
        return G

    def identity(self):
        return Perm.identity(self.degree)

    # -- basic structure ------------------------------------------------------

    def chain(self):
        if self._chain is None:
            self._chain = build_chain(self.degree, self.generators)
        return self._chain

    def order(self):
        if self._order is None:
            self._order = self.chain().order()
        return self._order

    def contains(self, p):
        if self._element_set is not None:
            return p in self._element_set
        return self.chain().contains(p)

    def elements(self):
        """All elements, sorted; capped by FORMATA_MAX_ORDER."""
        if self._elements is None:
            n = self.order()
            if n > order_cap():
                raise CapacityError(f"group order {n} exceeds cap {order_cap()}")
            ident = self.identity()
            found = {ident}
            queue = [ident]
            while queue:
                x = queue.pop()
                for g in self.generators:
                    y = x * g
                    if y not in found:
                        found.add(y)
                        queue.append(y)
            if len(found) != n:
                raise InternalInconsistencyError("closure disagrees with chain order")
            self._elements = tuple(sorted(found))
            self._element_set = frozenset(found)
        return self._elements

    def element_set(self):
        if self._element_set is None:
            self.elements()
        return self._element_set

    def is_trivial(self):
        return self.order() == 1

    def is_abelian(self):
        gens = self.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1 :])

    def exponent(self):
        return math.lcm(*(c.representative.order() for c in self.conjugacy_classes()))

    def subgroup(self, gens):
        for g in gens:
            if not self.contains(g):
                raise DomainError("subgroup generator outside the group")
        return PermGroup(self.degree, gens)

    def is_subgroup_of(self, other):
        return self.degree == other.degree and all(
            other.contains(g) for g in self.generators
        )

    def same_group_as(self, other):
        return (
            self.degree == other.degree
            and self.order() == other.order()
            and self.is_subgroup_of(other)
        )

    def reduced(self):
        """Same group with a small deterministic generating sequence."""
        gens = _greedy_generators(self.degree, self.elements())
        G = PermGroup(self.degree, gens)
        G._elements = self._elements
        G._element_set = self._element_set
        G._order = self._order
        return G

    def sort_key(self):
        """Fixed total order on subgroups: order first, then element list."""
        return (self.order(), tuple(p.images for p in self.elements()))

    # -- conjugacy classes ----------------------------------------------------

    def conjugacy_classes(self):
        """Classes sorted by size then least element; the identity class is first."""
        if self._classes is None:
            elts = self.elements()
            gens = self.generators
            seen = set()
            classes = []
            for x in elts:
                if x in seen:
                    continue
                orbit = {x}
                queue = [x]
                while queue:
                    y = queue.pop()
                    for g in gens:
                        z = y.conj(g)
                        if z not in orbit:
                            orbit.add(z)
                            queue.append(z)
                seen |= orbit
                members = tuple(sorted(orbit))
                classes.append(ConjClass(members[0], members, len(members)))
            classes.sort(key=lambda c: (c.size, c.representative))
            self._classes = tuple(classes)
            index = {}
            for i, c in enumerate(classes):
                for m in c.elements:
                    index[m] = i
            self._class_index = index
        return self._classes

    def class_index(self):
        if self._class_index is None:
            self.conjugacy_classes()
        return self._class_index

    def class_of(self, p):
        try:
            return self.class_index()[p]
        except KeyError:
            raise DomainError("element outside the group") from None

    # -- derived and solvability ----------------------------------------------

    def derived_subgroup(self):
        if self._derived is None:
            gens = self.generators
            comms = [a.commutator(b) for a in gens for b in gens]
            self._derived = normal_closure(self, comms)
        return self._derived

    def derived_series(self):
        series = [self]
        while True:
            d = series[-1].derived_subgroup()
            if d.order() == series[-1].order():
                break
            series.append(d)
            if d.order() == 1:
                break
        return series

    def is_solvable(self):
        return self.derived_series()[-1].order() == 1

    def is_perfect(self):
        return self.derived_subgroup().order() == self.order()

    def center(self):
        if self._center is None:
            gens = self.generators
            members = [x for x in self.elements() if all(x * g == g * x for g in gens)]
            self._center = PermGroup.from_elements(self.degree, members)
        return self._center


def _greedy_generators(degree, elements):
    """Smallest-first generating sequence extracted from a sorted element list."""
    target = len(elements)
    gens = []
    span = {Perm.identity(degree)}
    for x in elements:
        if len(span) == target:
            break
        if x in span:
            continue
        gens.append(x)
        # close the span under the enlarged generating set
        queue = list(span)
        span.add(x)
        queue.append(x)
        while queue:
            y = queue.pop()
            for g in gens:
                z = y * g
                if z not in span:
                    span.add(z)
                    queue.append(z)
    return gens


def generate(degree, generator_words):
    """Build a group from cycle-notation generator words."""
    from .perms import parse_cycles

    gens = [parse_cycles(w, degree) for w in generator_words]
    return PermGroup(degree, gens)


def closure_elements(degree, gens, cap=None):
    """Element set generated by gens; raises CapacityError past the cap."""
    cap = order_cap() if cap is None else cap
    ident = Perm.identity(degree)
    found = {ident}
    queue = [ident]
    gens = [g for g in gens if not g.is_identity()]
    while queue:
        x = queue.pop()
        for g in gens:
            y = x * g
            if y not in found:
                if len(found) >= cap:
                    raise CapacityError(f"closure exceeds cap {cap}")
                found.add(y)
                queue.append(y)
    return found


def normal_closure(G, seed):
    """Smallest subgroup of G containing seed and normal in G."""
    gens = [g for g in seed if not g.is_identity()]
    span = closure_elements(G.degree, gens)
    while True:
        new = []
        for x in gens:
            for g in G.generators:
                c = x.conj(g)
                if c not in span:
                    new.append(c)
        if not new:
            break
        gens.extend(new)
        span = closure_elements(G.degree, gens)
    return PermGroup.from_elements(G.degree, span)


def intersection(A, B):
    """Subgroup intersection via element sets (desk scale)."""
    if A.degree != B.degree:
        raise DomainError("degree mismatch")
    return PermGroup.from_elements(A.degree, A.element_set() & B.element_set())


def subgroup_product(A, B):
    """Product AB as a subgroup; requires the setwise product to be one."""
    if A.degree != B.degree:
        raise DomainError("degree mismatch")
    gens = list(A.generators) + list(B.generators)
    P = PermGroup.from_elements(A.degree, closure_elements(A.degree, gens))
    expected = A.order() * B.order() // intersection(A, B).order()
    if P.order() != expected:
        raise DomainError("setwise product AB is not a subgroup")
    return P


def is_normal_in(N, G):
    """True when N <= G and N is closed under conjugation by G's generators."""
    if not N.is_subgroup_of(G):
        return False
    nset = N.element_set()
    return all(n.conj(g) in nset for n in N.generators for g in G.generators)


def is_invariant_under(U, H):
    """True when conjugation by H's generators maps U into itself."""
    uset = U.element_set()
    return all(u.conj(h) in uset for u in U.generators for h in H.generators)


def centralizer(G, x):
    """Centralizer of an element or of a subgroup's generator set."""
    if isinstance(x, Perm):
        targets = [x]
    else:
        targets = list(x.generators)
    members = [
        g for g in G.elements() if all(g * t == t * g for t in targets)
    ]
    return PermGroup.from_elements(G.degree, members)


def normalizer(G, U):
    uset = U.element_set()
    ugens = U.generators
    members = [
        g for g in G.elements() if all(u.conj(g) in uset for u in ugens)
    ]
    return PermGroup.from_elements(G.degree, members)


def is_prime(p):
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


def sylow(G, p):
    """The first Sylow p-subgroup in deterministic order (normalizer ascent)."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    n = G.order()
    a = 0
    m = n
    while m % p == 0:
        m //= p
        a += 1
    target = p**a
    P = PermGroup.from_elements(G.degree, [G.identity()])
    while P.order() < target:
        N = G if P.order() == 1 else normalizer(G, P)
        grown = False
        for x in N.elements():
            if x in P.element_set():
                continue
            o = x.order()
            if o != 1 and p ** _int_log(o, p) == o:
                members = closure_elements(G.degree, list(P.generators) + [x])
                P = PermGroup.from_elements(G.degree, members)
                grown = True
                break
        if not grown:
            raise InternalInconsistencyError("sylow ascent stalled")
    return P


def _int_log(n, p):
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k if n == 1 else -1


# -- normal subgroup lattice --------------------------------------------------


def normal_subgroups(G):
    """All normal subgroups, as closures of unions of conjugacy classes."""
    if G._normals is not None:
        return G._normals
    classes = G.conjugacy_classes()
    memo = G._normal_closure_memo

    def close(class_ids):
        key = frozenset(class_ids)
        if key in memo:
            return memo[key]
        elts = []
        for i in key:
            elts.extend(classes[i].elements)
        span = closure_elements(G.degree, elts)
        # record the union of full classes actually inside the closure
        covered = frozenset(
            i for i, c in enumerate(classes) if c.representative in span
        )
        N = PermGroup.from_elements(G.degree, span)
        memo[key] = (covered, N)
        memo[covered] = (covered, N)
        return covered, N

    found = {}
    trivial_key, trivial = close([0])
    found[trivial_key] = trivial
    queue = [trivial_key]
    while queue:
        base_key = queue.pop(0)
        for i in range(len(classes)):
            if i in base_key:
                continue
            new_key, N = close(base_key | {i})
            if new_key not in found:
                found[new_key] = N
                queue.append(new_key)
    out = sorted(found.values(), key=lambda N: N.sort_key())
    G._normals = tuple(out)
    return G._normals


def minimal_normal_subgroups(G):
    normals = [N for N in normal_subgroups(G) if N.order() > 1]
    out = []
    for N in normals:
        if not any(
            M.order() < N.order() and M.is_subgroup_of(N) and M.order() > 1
            for M in normals
        ):
            out.append(N)
    return out


def chief_series(G, through=()):
    """A chief series of G passing through the given chain of normal subgroups."""
    if not G.is_solvable():
        raise UnsupportedGroupError("chief series requires a solvable group")
    normals = normal_subgroups(G)
    for A in through:
        if not is_normal_in(A, G):
            raise DomainError("chief series anchor is not normal")
    targets = sorted({A.sort_key(): A for A in through}.items())
    targets = [A for _, A in targets] + [G]
    prev = None
    for T in targets:
        if prev is not None and not prev.is_subgroup_of(T):
            raise DomainError("chief series anchors do not form a chain")
        prev = T
    series = [PermGroup.from_elements(G.degree, [G.identity()])]
    for T in targets:
        while series[-1].order() != T.order():
            cur = series[-1]
            candidates = [
                N
                for N in normals
                if N.order() > cur.order()
                and cur.is_subgroup_of(N)
                and N.is_subgroup_of(T)
            ]
            nxt = min(candidates, key=lambda N: N.sort_key())
            series.append(nxt)
    return series


# -- quotients ----------------------------------------------------------------


class GroupMap:
    """Homomorphism onto a coset-action quotient, with kernel and a section."""

    def __init__(self, source, target, coset_reps, coset_index, kernel):
        self.source = source
        self.target = target
        self._reps = coset_reps
        self._index = coset_index
        self._kernel = kernel
        self.gen_images = tuple(self.apply(g) for g in source.generators)

    def kernel(self):
        return self._kernel

    def apply(self, x):
        if not self.source.contains(x):
            raise DomainError("element outside the map's source")
        images = tuple(self._index[self._reps[i] * x] for i in range(len(self._reps)))
        return Perm(images)

    def lift(self, q):
        """A coset representative mapping onto q (a section, not a morphism)."""
        if not self.target.contains(q):
            raise DomainError("element outside the map's target")
        return self._reps[q.images[self._index[self.source.identity()]]]

    def image_of_subgroup(self, U):
        return PermGroup(self.target.degree, [self.apply(u) for u in U.generators])

    def preimage_of_subgroup(self, V):
        gens = list(self._kernel.generators) + [self.lift(v) for v in V.generators]
        U = PermGroup(self.source.degree, gens)
        if U.order() != self._kernel.order() * V.order():
            raise InternalInconsistencyError("preimage order mismatch")
        return U


def quotient(G, N):
    """Quotient by a normal subgroup via the right-coset action; returns (Q, map)."""
    key = N.sort_key()
    if key in G._quotients:
        return G._quotients[key]
    if not is_normal_in(N, G):
        raise DomainError("quotient requires a normal subgroup")
    nelts = sorted(N.element_set())
    index = {}
    reps = []
    for g in G.elements():
        if g in index:
            continue
        coset = sorted(n * g for n in nelts)
        rep = coset[0]
        idx = len(reps)
        reps.append(rep)
        for c in coset:
            index[c] = idx
    # cosets are discovered in sorted element order, so rep list is sorted and
    # the identity coset comes first
    qgens = []
    for g in G.generators:
        qgens.append(Perm(tuple(index[reps[i] * g] for i in range(len(reps)))))
    Q = PermGroup(len(reps), qgens)
    if Q.order() * N.order() != G.order():
        raise InternalInconsistencyError("quotient order mismatch")
    gmap = GroupMap(G, Q, reps, index, N)
    for a in G.generators:
        for b in G.generators:
            if gmap.apply(a * b) != gmap.apply(a) * gmap.apply(b):
                raise InternalInconsistencyError("coset action is not a morphism")
    G._quotients[key] = (Q, gmap)
    return Q, gmap


# -- complements --------------------------------------------------------------


def complement(G, A, seed=20240801, attempts=512):
    """A complement to the abelian normal subgroup A, or None (certified).

    Tries seeded random lift tuples first, then enumerates all lift tuples
    (one element from each generator coset), which is exhaustive: a complement
    is generated by its unique lift tuple.
    """
    if not is_normal_in(A, G):
        raise DomainError("complement requires a normal subgroup")
    if not A.is_abelian():
        raise DomainError("complement target must be abelian")
    if A.order() == 1:
        return G
    index = G.order() // A.order()
    if index == 1:
        return PermGroup.from_elements(G.degree, [G.identity()])
    base = G.reduced()
    aelts = sorted(A.element_set())
    cosets = [sorted(a * g for a in aelts) for g in base.generators]

    def try_tuple(lifts):
        members = closure_elements(G.degree, lifts, cap=G.order() + 1)
        if len(members) == index:
            C = PermGroup.from_elements(G.degree, members)
            if intersection(C, A).order() != 1:
                raise InternalInconsistencyError("complement intersects kernel")
            return C
        return None

    rng = random.Random(seed)
    for _ in range(attempts):
        lifts = [coset[rng.randrange(len(coset))] for coset in cosets]
        C = try_tuple(lifts)
        if C is not None:
            return C
    for lifts in iproduct(*cosets):
        C = try_tuple(list(lifts))
        if C is not None:
            return C
    return None


# -- H-composition series -----------------------------------------------------


def h_composition_series(G, H, anchors=()):
    """H-invariant subnormal series refining the anchors, with H-simple factors.

    Each anchor gap (A, B) is refined by a chief series of B*H through A and B;
    the refinement is iterated to a fixpoint, after which every factor M/U is a
    chief factor of M*H, i.e. admits no proper nontrivial H-invariant subgroup
    normal in the upper term.
    """
    if not H.is_subgroup_of(G):
        raise DomainError("H must be a subgroup of G")
    chain = [PermGroup.from_elements(G.degree, [G.identity()])]
    for A in sorted(anchors, key=lambda A: A.sort_key()):
        if not is_invariant_under(A, H):
            raise DomainError("anchor is not H-invariant")
        if A.order() in (1, G.order()) or A.order() == chain[-1].order():
            continue
        chain.append(A)
    chain.append(G)
    for lo, hi in zip(chain, chain[1:]):
        if not lo.is_subgroup_of(hi):
            raise DomainError("anchors do not form a chain")
        if not is_normal_in(lo, subgroup_product(hi, H)):
            raise DomainError("anchor is not normal in the next term times H")
    while True:
        new_chain = [chain[0]]
        changed = False
        for lo, hi in zip(chain, chain[1:]):
            if hi.order() > lo.order():
                M = subgroup_product(hi, H)
                cs = chief_series(M, through=[lo, hi])
                mids = [
                    T
                    for T in cs
                    if lo.order() < T.order() < hi.order()
                    and lo.is_subgroup_of(T)
                    and T.is_subgroup_of(hi)
                ]
                if mids:
                    changed = True
                new_chain.extend(mids)
            new_chain.append(hi)
        chain = new_chain
        if not changed:
            return chain


def intermediate_subgroups(G, H):
    """All subgroups U with H <= U <= G, grown one element at a time."""
    if not H.is_subgroup_of(G):
        raise DomainError("H must be a subgroup of G")
    if G.order() > 600:
        raise CapacityError("intermediate subgroup sweep capped at order 600")
    start = PermGroup.from_elements(G.degree, closure_elements(G.degree, H.generators))
    found = {frozenset(start.element_set()): start}
    queue = [start]
    while queue:
        U = queue.pop(0)
        for x in G.elements():
            if x in U.element_set():
                continue
            span = closure_elements(G.degree, list(U.generators) + [x])
            key = frozenset(span)
            if key not in found:
                W = PermGroup.from_elements(G.degree, span)
                found[key] = W
                queue.append(W)
    return sorted(found.values(), key=lambda U: U.sort_key())
