import math

import pytest

from sysbounds.audit import (
    CHECK_IDS,
    DEFAULT_MANDATORY,
    ESSENTIALITY_ID,
    TRIV_RADIUS,
    AuditConfig,
    EnumerationSource,
    OrbitTable,
    audit_graph,
    audit_sweep,
    compute_invariants,
    enumerate_labeled,
    graph_from_mask,
    read_graph6_file,
)
from sysbounds.families import (
    gen_complete,
    gen_cycle,
    gen_general_mycielski,
    gen_kneser,
    gen_mycielski,
    gen_petersen,
)
from sysbounds.graph import canonical_form, odd_girth, to_graph6

# Checks whose printed formulas overshoot |V| on odd cycles; see the ledger.
UNSOUND = {"BB2", "MIX1"}
SOUND_MANDATORY = DEFAULT_MANDATORY - UNSOUND


class TestEnumeration:
    @pytest.mark.parametrize("n, labeled, classes", [(0, 1, 1), (3, 8, 4), (4, 64, 11), (5, 1024, 34)])
    def test_counts(self, n, labeled, classes):
        assert enumerate_labeled(n) == labeled
        assert enumerate_labeled(n, dedup=True) == classes

    def test_visitor_sees_distinct_graphs(self):
        seen = []
        enumerate_labeled(4, seen.append)
        assert len({to_graph6(g) for g in seen}) == 64

    def test_too_large(self):
        with pytest.raises(ValueError):
            enumerate_labeled(8)

    @pytest.mark.parametrize("n, classes", [(5, 34), (6, 156), (7, 1044)])
    def test_orbit_table(self, n, classes):
        t = OrbitTable(n)
        assert t.num_classes == classes
        assert sum(t.orbit_sizes) == 1 << (n * (n - 1) // 2)

    def test_orbit_table_agrees_with_canonical_form(self):
        t = OrbitTable(6)
        forms = {}
        for mask in range(1 << 15):
            key = canonical_form(graph_from_mask(6, mask))
            assert forms.setdefault(key, int(t.class_of[mask])) == int(t.class_of[mask])
        assert len(forms) == 156


class TestFamilies:
    def test_groetzsch(self, groetzsch):
        inv = compute_invariants(groetzsch)
        assert (groetzsch.n, inv.chi, inv.odd_girth) == (11, 4, 5)

    def test_kneser_is_petersen(self):
        assert canonical_form(gen_kneser(5, 2)) == canonical_form(gen_petersen())

    def test_cycle7(self):
        inv = compute_invariants(gen_cycle(7))
        assert inv.chi == 3 and inv.odd_girth == 7 and inv.k == 3

    def test_sizes(self):
        assert gen_mycielski(gen_cycle(7)).n == 15
        assert gen_general_mycielski(gen_cycle(7), 3).n == 22

    def test_bad_parameters(self):
        for f, args in ((gen_cycle, (2,)), (gen_kneser, (2, 3)), (gen_general_mycielski, (gen_cycle(5), 0))):
            with pytest.raises(ValueError):
                f(*args)


class TestAuditGraph:
    def test_c5(self, c5):
        rec = audit_graph(c5)
        assert rec.k == 2 and rec.chi == 3
        assert rec.check("SYS").value == 4 and rec.check("SYS").satisfied
        bb3 = rec.check("BB3")
        assert bb3.value == 5 and bb3.satisfied and bb3.tight
        assert rec.check("MIX3_RECURSIVE").tight
        printed = rec.check("MIX3_PRINTED")
        assert printed.value == 9 and not printed.satisfied and not printed.mandatory
        assert rec.check("EQ2").tight and rec.check("BALL_A").tight
        assert printed in rec.report_only_violations

    @pytest.mark.parametrize("k", range(2, 7))
    def test_odd_cycles_tight_for_recursive_bound(self, k):
        rec = audit_graph(gen_cycle(2 * k + 1))
        c = rec.check("MIX3_RECURSIVE")
        assert c.value == 2 * k + 1 and c.tight

    def test_groetzsch(self, groetzsch):
        rec = audit_graph(groetzsch)
        assert rec.k == 2 and rec.chi == 4
        assert rec.check("BB3").value == 9 and rec.check("BB3").satisfied
        assert rec.check("BALL_A").value == 3 and rec.check("BALL_A").satisfied
        assert compute_invariants(groetzsch).ball_k_minus_1 == 6

    def test_bipartite_record(self):
        rec = audit_graph(gen_cycle(6))
        assert rec.k is None and rec.odd_girth is None
        assert {c.id for c in rec.checks} == {ESSENTIALITY_ID, "GROMOV"}
        assert all(c.satisfied for c in rec.checks)

    def test_k_one_skips_product_bounds(self):
        rec = audit_graph(gen_complete(4))
        ids = {c.id for c in rec.checks}
        assert rec.k == 1
        assert not ids & {"BB1", "BB2", "MIX1", "BALL_A", "EQ2"}
        assert {"SYS", "BB3", "MIX3_RECURSIVE", TRIV_RADIUS} <= ids

    def test_validation(self, c5):
        with pytest.raises(ValueError):
            audit_graph(c5, mandatory={"NOPE"})
        with pytest.raises(ValueError):
            audit_graph(c5, mandatory={"SYS"}, report_only={"SYS"})

    def test_record_fields(self, c5):
        d = audit_graph(c5).to_dict()
        assert set(d) == {"graph6", "n", "chi", "oddGirth", "girth", "k", "essentiality",
                          "forestEssentiality", "checks"}
        assert {c["id"] for c in d["checks"]} <= set(CHECK_IDS)


class TestAuditSweep:
    def test_n6_sound_suite(self):
        mandatory = {"SYS", "BB3", "MIX3_RECURSIVE", "BALL_A", "BALL_B", "EQ2", ESSENTIALITY_ID, TRIV_RADIUS}
        rep = audit_sweep(
            EnumerationSource(tuple(range(7))),
            AuditConfig(mandatory=frozenset(mandatory), report_only=frozenset({"MIX3_PRINTED"})),
        )
        assert rep.total_graphs == sum(1 << (n * (n - 1) // 2) for n in range(7))
        assert rep.ok and rep.violation_count == 0
        assert "Dhc" in {r.graph6 for r in rep.report_only_findings}

    def test_empty_stream(self):
        rep = audit_sweep([], AuditConfig())
        assert rep.total_graphs == 0 and rep.violations == [] and rep.ok

    def test_stream_matches_enumeration(self):
        src = EnumerationSource((5,))
        graphs = [graph_from_mask(5, m) for m in range(1 << 10)]
        a = audit_sweep(src).to_dict()
        b = audit_sweep(graphs).to_dict()
        for key in ("totalGraphs", "violationCount", "tightCount", "reportOnlyCount"):
            assert a[key] == b[key]
        assert a["violations"] == b["violations"]
        assert a["reportOnlyFindings"] == b["reportOnlyFindings"]
        assert a["tightInstances"] == b["tightInstances"]

    def test_memo_does_not_change_results(self):
        graphs = [graph_from_mask(5, m) for m in range(0, 1 << 10, 3)]
        a = audit_sweep(graphs, AuditConfig(memo=True)).to_dict()
        b = audit_sweep(graphs, AuditConfig(memo=False)).to_dict()
        assert a == b

    def test_dedup_counts_classes(self):
        rep = audit_sweep(EnumerationSource((5,), dedup=True))
        assert rep.total_graphs == 34

    def test_deterministic_and_parallel(self):
        src = EnumerationSource((6,))
        a = audit_sweep(src, AuditConfig(jobs=1)).to_json()
        b = audit_sweep(src, AuditConfig(jobs=1)).to_json()
        c = audit_sweep(src, AuditConfig(jobs=2)).to_json()
        assert a == b
        assert a.replace('"jobs": 1', '"jobs": 2') == c

    def test_max_listed_keeps_counts(self):
        rep = audit_sweep(EnumerationSource((5,)), AuditConfig(max_listed=3))
        assert len(rep.report_only_findings) == 3
        assert rep.finding_count > 3
        assert [r.graph6 for r in rep.report_only_findings] == sorted(r.graph6 for r in rep.report_only_findings)

    def test_csv(self):
        text = audit_sweep(EnumerationSource((5,)), AuditConfig(max_listed=2)).to_csv()
        lines = text.splitlines()
        assert lines[0].startswith("list,graph6,n,chi")
        assert any(line.startswith("violation,") for line in lines[1:])

    def test_labeled_c5_copies_are_listed(self):
        rep = audit_sweep(EnumerationSource((5,)))
        assert rep.violation_count == 12
        assert len({r.graph6 for r in rep.violations}) == 12
        assert all({c.id for c in r.mandatory_violations} == UNSOUND for r in rep.violations)

    def test_graph6_file(self, tmp_path):
        p = tmp_path / "g.g6"
        p.write_text("Dhc\n\nA_\n")
        assert [g.n for g in read_graph6_file(str(p))] == [5, 2]
        bad = tmp_path / "bad.g6"
        bad.write_text("Dhc\nxyz!\n")
        with pytest.raises(ValueError, match=":2:"):
            list(read_graph6_file(str(bad)))


def extremal_graphs():
    c5 = gen_cycle(5)
    yield "petersen", gen_petersen()
    for k in range(2, 11):
        yield f"C{2 * k + 1}", gen_cycle(2 * k + 1)
    g = c5
    while g.n <= 23:
        yield f"mycielski-{g.n}", g
        g = gen_mycielski(g)
    for levels in (2, 3):
        yield f"genmycielski-C7-{levels}", gen_general_mycielski(gen_cycle(7), levels)


@pytest.mark.parametrize("name, g", list(extremal_graphs()))
def test_extremal_families_sound_suite(name, g):
    rec = audit_graph(g)
    assert {c.id for c in rec.mandatory_violations} <= UNSOUND
    assert not [c for c in rec.checks if c.mandatory and c.id in SOUND_MANDATORY and not c.satisfied]


@pytest.mark.parametrize("k", range(2, 11))
def test_bb2_and_mix1_overshoot_short_odd_cycles(k):
    # ceil(11/2) = 6 > 5 and ceil(64/9) = 8 > 7; from k = 4 on they hold.
    rec = audit_graph(gen_cycle(2 * k + 1))
    expected = UNSOUND if k <= 3 else set()
    assert {c.id for c in rec.mandatory_violations} == expected


def test_odd_girth_preserved_by_generalized_mycielski():
    assert odd_girth(gen_general_mycielski(gen_cycle(7), 3)) == 7
    assert math.isinf(odd_girth(gen_cycle(8)))
