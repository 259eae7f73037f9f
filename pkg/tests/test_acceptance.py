"""Acceptance gate: one test per release criterion, exact checks only."""

import subprocess
import sys
import time

from formata.catalog import catalog_group, load_catalog
from formata.characters import character_table
from formata.cli import counterexample_report
from formata.formations import Formation, is_nilpotent, prime_divisors, projector
from formata.groups import generate, normal_subgroups, quotient
from formata.headchars import (
    counting_check,
    fprime_ascending,
    theorem_54_report,
    theorem_a_report,
    theorem_b_report,
    theorem_c_report,
)

from test_chartab import assert_matches_oracle

FORMATIONS = [
    Formation.parse(name)
    for name in ("nilpotent", "supersolvable", "metanilpotent", "nilpotent-length:2")
]
NIL = FORMATIONS[0]


def test_criterion_1_tables_exact_and_oracle_matched():
    for entry in load_catalog():
        G = entry.build()
        start = time.perf_counter()
        table = character_table(G)
        assert table.verify()
        assert sum(d * d for d in table.degrees()) == G.order()
        if G.order() <= 60:
            assert_matches_oracle(G)
        assert time.perf_counter() - start < 10.0, entry.name


def test_criterion_2_counting_all_formations():
    for entry in load_catalog():
        G = entry.build()
        for F in FORMATIONS:
            assert counting_check(G, F), (entry.name, str(F))


def test_criterion_3_equivalence_all_formations():
    for entry in load_catalog():
        G = entry.build()
        for F in FORMATIONS:
            rep = theorem_54_report(G, F)
            assert rep["summary"]["all_pass"], (entry.name, str(F))


def test_criterion_4_theorem_a_suite():
    for entry in load_catalog():
        G = entry.build()
        odd = G.order() % 2 == 1
        normals = normal_subgroups(G)
        for F in FORMATIONS:
            part_c_required = F == NIL or odd
            for N in normals:
                rep = theorem_a_report(G, F, N)
                assert rep["summary"]["all_pass"], (entry.name, str(F), N.order())
                if part_c_required:
                    assert all(
                        inst["witnesses"]["part_c"]["checked"]
                        for inst in rep["instances"]
                    ), (entry.name, str(F), N.order())
            heads = fprime_ascending(G, F)
            index = G.order() // projector(G, F).order()
            for chi in heads:
                assert index % chi.degree().as_int() == 0, (entry.name, str(F))
            for N in normals:
                Q, _ = quotient(G, N)
                if is_nilpotent(Q):
                    for chi in heads:
                        assert chi.restrict(N).is_irreducible(), (entry.name, str(F), N.order())


def test_criterion_5_theorem_b_all_formations():
    for entry in load_catalog():
        G = entry.build()
        for F in FORMATIONS:
            rep = theorem_b_report(G, F)
            assert rep["summary"]["all_pass"], (entry.name, str(F))
    spot = theorem_b_report(catalog_group("S4"), NIL)
    assert spot["summary"]["M_order"] == 1


def test_criterion_6_theorem_c_all_primes():
    for entry in load_catalog():
        G = entry.build()
        for p in prime_divisors(G.order()):
            rep = theorem_c_report(G, p)
            assert rep["summary"]["all_pass"], (entry.name, p)
    G = catalog_group("S4")
    spot = theorem_c_report(G, 3)
    meet = generate(G.degree, spot["instances"][0]["witnesses"]["kernel_intersection"])
    v4 = next(N for N in normal_subgroups(G) if N.order() == 4)
    assert meet.same_group_as(v4)


def test_criterion_7_counterexample_must_fail():
    rep = counterexample_report()
    wit = rep["instances"][0]["witnesses"]
    assert wit["theta_extensions"] > 0
    assert wit["phi_extensions"] > 0
    assert all(not e["pass"] for e in wit["upward"])
    assert all(not e["pass"] for e in wit["downward"])
    assert not wit["all_transfers_hold"]
    assert rep["summary"]["all_pass"]


def test_criterion_8_degree_parity_specialization():
    G = catalog_group("S4")
    heads = fprime_ascending(G, NIL)
    assert sorted(ch.degree().as_int() for ch in heads) == [1, 1, 3, 3]
    odd_degree = [ch for ch in character_table(G).irr if ch.degree().as_int() % 2 == 1]
    assert len(heads) == len(odd_degree)
    assert all(any(h is o for o in odd_degree) for h in heads)


def test_criterion_9_verify_all_deterministic_and_fast():
    cmd = [sys.executable, "-m", "formata.cli", "verify", "all"]
    start = time.perf_counter()
    first = subprocess.run(cmd, capture_output=True, timeout=300)
    second = subprocess.run(cmd, capture_output=True, timeout=300)
    elapsed = time.perf_counter() - start
    assert first.returncode == 0
    assert second.returncode == 0
    assert first.stdout == second.stdout
    assert first.stderr == b"" and second.stderr == b""
    assert b"verify all:" in first.stdout
    assert elapsed < 300.0
