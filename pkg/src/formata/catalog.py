"""Built-in catalog of small solvable groups with frozen generators.

Matrix-action entries (Q8, SL23, G75, 2S4) were constructed once by
tools/build_catalog.py and frozen here as explicit cycle words.  Every lookup
re-checks the recorded order and class count; the order-48 entry additionally
proves it is the double cover with a unique involution whose supersolvable
residual is Q8.
"""

from .errors import CatalogIntegrityError
from .formations import Formation, residual
from .groups import generate


class CatalogEntry:
    """Frozen construction plus the invariants it must reproduce."""

    __slots__ = ("name", "degree", "words", "order", "classes", "solvable", "_group")

    def __init__(self, name, degree, words, order, classes, solvable):
        self.name = name
        self.degree = degree
        self.words = tuple(words)
        self.order = order
        self.classes = classes
        self.solvable = solvable
        self._group = None

    def build(self):
        if self._group is not None:
            return self._group
        G = generate(self.degree, self.words)
        if G.order() != self.order:
            raise CatalogIntegrityError(
                "%s: order %d, expected %d" % (self.name, G.order(), self.order)
            )
        if len(G.conjugacy_classes()) != self.classes:
            raise CatalogIntegrityError(
                "%s: %d classes, expected %d"
                % (self.name, len(G.conjugacy_classes()), self.classes)
            )
        if G.is_solvable() != self.solvable:
            raise CatalogIntegrityError("%s: solvability flag mismatch" % self.name)
        if self.name == "2S4":
            _check_double_cover(G)
        G.name = self.name
        self._group = G
        return G


def _check_double_cover(G):
    """Structural identification of the binary double cover of S4."""
    involutions = sum(1 for x in G.elements() if x.order() == 2)
    if involutions != 1:
        raise CatalogIntegrityError("2S4: %d involutions, expected 1" % involutions)
    K = residual(G, Formation("supersolvable"))
    if K.order() != 8:
        raise CatalogIntegrityError("2S4: residual order %d, expected 8" % K.order())
    if max(x.order() for x in K.elements()) > 4:
        raise CatalogIntegrityError("2S4: residual has an element of order > 4")
    if sum(1 for x in K.elements() if x.order() == 2) != 1:
        raise CatalogIntegrityError("2S4: residual is not Q8 (involution count)")
    if K.derived_subgroup().order() != 2:
        raise CatalogIntegrityError("2S4: residual derived subgroup is not C2")


ENTRIES = [
    CatalogEntry("C1", 1, (), 1, 1, True),
    CatalogEntry("C2", 2, ("(0 1)",), 2, 2, True),
    CatalogEntry("C3", 3, ("(0 1 2)",), 3, 3, True),
    CatalogEntry("C4", 4, ("(0 1 2 3)",), 4, 4, True),
    CatalogEntry("C5", 5, ("(0 1 2 3 4)",), 5, 5, True),
    CatalogEntry("C6", 6, ("(0 1 2 3 4 5)",), 6, 6, True),
    CatalogEntry("C7", 7, ("(0 1 2 3 4 5 6)",), 7, 7, True),
    CatalogEntry("C8", 8, ("(0 1 2 3 4 5 6 7)",), 8, 8, True),
    CatalogEntry("C9", 9, ("(0 1 2 3 4 5 6 7 8)",), 9, 9, True),
    CatalogEntry("C10", 10, ("(0 1 2 3 4 5 6 7 8 9)",), 10, 10, True),
    CatalogEntry("C11", 11, ("(0 1 2 3 4 5 6 7 8 9 10)",), 11, 11, True),
    CatalogEntry("C12", 12, ("(0 1 2 3 4 5 6 7 8 9 10 11)",), 12, 12, True),
    CatalogEntry("V4", 4, ("(0 1)(2 3)", "(0 2)(1 3)"), 4, 4, True),
    CatalogEntry("S3", 3, ("(0 1 2)", "(0 1)"), 6, 3, True),
    CatalogEntry("D8", 4, ("(0 1 2 3)", "(0 2)"), 8, 5, True),
    CatalogEntry("Q8", 8, ("(0 2 1 3)(4 6 5 7)", "(0 4 1 5)(2 7 3 6)"), 8, 5, True),
    CatalogEntry("A4", 4, ("(0 1 2)", "(1 2 3)"), 12, 4, True),
    CatalogEntry("S4", 4, ("(0 1 2 3)", "(0 1)"), 24, 5, True),
    CatalogEntry("D12", 6, ("(0 1 2 3 4 5)", "(0 5)(1 4)(2 3)"), 12, 6, True),
    CatalogEntry("C7C3", 7, ("(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"), 21, 5, True),
    CatalogEntry(
        "G75",
        25,
        (
            "(0 5 10 15 20)(1 6 11 16 21)(2 7 12 17 22)(3 8 13 18 23)(4 9 14 19 24)",
            "(0 1 2 3 4)(5 6 7 8 9)(10 11 12 13 14)(15 16 17 18 19)(20 21 22 23 24)",
            "(1 24 5)(2 18 10)(3 12 15)(4 6 20)(7 19 9)(8 13 14)(11 21 23)(16 22 17)",
        ),
        75,
        11,
        True,
    ),
    CatalogEntry("SL23", 8, ("(0 5 1 2)(3 6 7 4)", "(0 3 6)(1 7 4)"), 24, 7, True),
    CatalogEntry(
        "2S4",
        48,
        (
            "(0 9 21 6 5 45 33 41)(1 19 43 13 4 35 11 34)(2 22 16 20 3 32 38 27)"
            "(7 8 18 40 47 46 36 14)(10 31 28 12 44 23 26 42)(15 17 30 25 39 37 24 29)",
            "(0 11 42)(1 16 36)(2 21 30)(3 33 24)(4 38 18)(5 43 12)(6 10 37)(7 15 31)"
            "(8 20 25)(9 32 19)(13 14 26)(17 41 44)(22 35 45)(23 47 39)(27 29 46)(28 34 40)",
        ),
        48,
        8,
        True,
    ),
]

_BY_NAME = {e.name.lower(): e for e in ENTRIES}


def catalog_names():
    return [e.name for e in ENTRIES]


def catalog_group(name):
    """The named catalog group, built once and integrity-checked."""
    entry = _BY_NAME.get(name.lower())
    if entry is None:
        raise CatalogIntegrityError("unknown catalog group %r" % name)
    return entry.build()


def load_catalog():
    """All entries, constructed and invariant-checked."""
    for e in ENTRIES:
        e.build()
    return list(ENTRIES)
