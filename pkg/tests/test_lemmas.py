import pytest

from polytutte import enumerate_bases, lemma_property_suite, make_random_coverage_polymatroid, validate_rank_function
from polytutte.corpus import coverage_instances, graphic_instances, uniform_instances
from polytutte.lemmas import ACTIVITY_TABLES, CLASS_FACTOR, LEMMA_NAMES, ROWS

U12 = enumerate_bases(validate_rank_function(2, [0, 1, 1, 1]))


def _assert_all_pass(P):
    report = lemma_property_suite(P)
    assert set(report) == set(LEMMA_NAMES)
    failed = {k: r.counterexample for k, r in report.items() if not r.passed}
    assert not failed
    return report


def test_uniform_all_pass():
    report = _assert_all_pass(U12)
    assert report["tight_set_activity"].instances > 0
    assert report["chain_end_activities"].instances > 0


@pytest.mark.parametrize("seed", range(20))
def test_random_n3(seed):
    _assert_all_pass(enumerate_bases(make_random_coverage_polymatroid(3, seed, 4, 2, 2)))


def test_single_element_vacuous():
    report = _assert_all_pass(enumerate_bases(validate_rank_function(1, [0, 3])))
    for name in ("exchange_transitivity", "swap_fixes_outside", "chain_end_activities", "activity_tables"):
        assert report[name].instances == 0


def test_name_selection():
    assert list(lemma_property_suite(U12, names={"tight_set_lattice"})) == ["tight_set_lattice"]


@pytest.mark.parametrize("inst", uniform_instances(4) + graphic_instances(3) + coverage_instances(30),
                         ids=lambda i: i.name)
def test_corpus(inst):
    _assert_all_pass(enumerate_bases(inst.rank))


def test_low_index_hypotheses_are_never_met():
    # the paired membership hypotheses contradict the exchange property
    total = 0
    for inst in coverage_instances(30):
        report = lemma_property_suite(enumerate_bases(inst.rank),
                                      names={"low_index_given_internal", "low_index_given_external"})
        total += sum(r.instances for r in report.values())
    assert total == 0


class TestTables:
    @pytest.mark.parametrize("key", sorted(ACTIVITY_TABLES))
    def test_rows_determine_quotients(self, key):
        # each quotient is the product of the class factors of h and h+1 in its context
        table = ACTIVITY_TABLES[key]
        contexts = {"A": ("a", "P"), "B": ("a*", "P"), "C": ("w(a)", "w(P)"), "D": ("w(a*)", "w(P)")}
        for col in range(len(table["columns"])):
            for name, ctx in contexts.items():
                prod = CLASS_FACTOR[table["rows"][("h",) + ctx][col]] * \
                    CLASS_FACTOR[table["rows"][("h+1",) + ctx][col]]
                assert prod == table["quotients"][name][col], (key, col, name)

    @pytest.mark.parametrize("key", sorted(ACTIVITY_TABLES))
    def test_columns_balance(self, key):
        q = ACTIVITY_TABLES[key]["quotients"]
        for col in range(len(ACTIVITY_TABLES[key]["columns"])):
            assert q["A"][col] + q["B"][col] == q["C"][col] + q["D"][col]

    def test_row_keys(self):
        for table in ACTIVITY_TABLES.values():
            assert set(table["rows"]) == set(ROWS)

    def test_columns_are_realized(self):
        # two columns need a richer instance than the standard corpus provides
        extra = [make_random_coverage_polymatroid(3, seed, 5, 3, 2) for seed in (26, 32)]
        seen = set()
        for f in [i.rank for i in uniform_instances(5) + graphic_instances(4) + coverage_instances(50)] + extra:
            res = lemma_property_suite(enumerate_bases(f), names={"activity_tables"})["activity_tables"]
            assert res.passed
            seen.update(res.extra["realized"])
        for key, table in ACTIVITY_TABLES.items():
            for col in range(len(table["columns"])):
                assert (key, col) in seen, (key, col)
