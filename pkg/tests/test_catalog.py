"""Catalog construction and integrity tests."""

import pytest

from formata.catalog import ENTRIES, catalog_group, catalog_names, load_catalog
from formata.errors import CatalogIntegrityError
from formata.formations import Formation, residual


def test_catalog_names_complete():
    names = catalog_names()
    assert len(names) == len(ENTRIES) == 23
    for expected in ("C1", "C12", "V4", "S3", "D8", "Q8", "A4", "S4", "D12", "C7C3", "G75", "SL23", "2S4"):
        assert expected in names


def test_all_entries_build():
    for entry in load_catalog():
        G = entry.build()
        assert G.order() == entry.order
        assert G.degree == entry.degree
        assert len(G.conjugacy_classes()) == entry.classes
        assert G.is_solvable() == entry.solvable
        assert G.name == entry.name


def test_lookup_is_case_insensitive():
    assert catalog_group("s4") is catalog_group("S4")
    assert catalog_group("sl23") is catalog_group("SL23")
    assert catalog_group("2s4") is catalog_group("2S4")


def test_lookup_caches_group_object():
    assert catalog_group("G75") is catalog_group("G75")


def test_unknown_name_rejected():
    with pytest.raises(CatalogIntegrityError):
        catalog_group("M11")


def test_class_counts():
    expected = {"S4": 5, "Q8": 5, "A4": 4, "D12": 6, "C7C3": 5, "G75": 11, "SL23": 7, "2S4": 8}
    for name, classes in expected.items():
        assert len(catalog_group(name).conjugacy_classes()) == classes


def test_q8_has_unique_involution():
    G = catalog_group("Q8")
    assert G.order() == 8
    assert sum(1 for x in G.elements() if x.order() == 2) == 1


def test_c7c3_is_nonabelian_of_order_21():
    G = catalog_group("C7C3")
    assert G.order() == 21
    assert G.derived_subgroup().order() == 7


def test_g75_structure():
    G = catalog_group("G75")
    assert G.order() == 75
    assert G.derived_subgroup().order() == 25


def test_sl23_structure():
    G = catalog_group("SL23")
    assert G.order() == 24
    assert sum(1 for x in G.elements() if x.order() == 2) == 1
    assert G.derived_subgroup().order() == 8


def test_order_48_entry_is_the_double_cover():
    G = catalog_group("2S4")
    assert G.order() == 48
    assert sum(1 for x in G.elements() if x.order() == 2) == 1
    K = residual(G, Formation("supersolvable"))
    assert K.order() == 8
    assert K.derived_subgroup().order() == 2
    assert max(x.order() for x in K.elements()) == 4


def test_order_48_entry_acts_regularly():
    G = catalog_group("2S4")
    assert G.degree == 48
    base = 0
    orbit = {base}
    frontier = [base]
    while frontier:
        pt = frontier.pop()
        for g in G.generators:
            img = g(pt)
            if img not in orbit:
                orbit.add(img)
                frontier.append(img)
    assert len(orbit) == 48
