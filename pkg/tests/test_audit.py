"""The axiom-audit harness: corpora, verdict matrices, counterexamples."""

import random
from fractions import Fraction

import pytest

from menulearn import (
    AuditConfig,
    Axiom,
    BmlComparator,
    Collection,
    CredalSet,
    HmlComparator,
    InfoStructure,
    JmlComparator,
    Posterior,
    REQUIRED_AXIOMS,
    ValidationError,
    audit,
    cross_audit,
    dominates,
    generate_corpus,
)
from menulearn.audit import random_instance

from conftest import menu_of


class TestGenerateCorpus:
    def test_deterministic(self, two_state_instance):
        config = AuditConfig(corpus_size=8, seed=123)
        assert generate_corpus(two_state_instance, config) == generate_corpus(
            two_state_instance, config
        )

    def test_exact_size(self, two_state_instance):
        for size in (1, 3, 6, 10):
            config = AuditConfig(corpus_size=size, seed=1)
            assert len(generate_corpus(two_state_instance, config)) == size

    def test_contains_strict_dominance_pair(self, two_state_instance):
        config = AuditConfig(corpus_size=4, seed=9)
        corpus = generate_corpus(two_state_instance, config)
        assert any(
            dominates(F, G, two_state_instance, strict=True)
            for F in corpus
            for G in corpus
            if F != G
        )

    def test_config_validation(self):
        with pytest.raises(ValidationError):
            AuditConfig(axioms=frozenset())
        with pytest.raises(ValidationError):
            AuditConfig(alpha_grid=(Fraction(0),))
        with pytest.raises(ValidationError):
            AuditConfig(axioms=frozenset({Axiom.CONTINUITY}))


class TestAuditVerdicts:
    def test_bml_satisfies_transitivity(self, example1):
        inst = example1.instance
        cmp = BmlComparator(inst, example1.credal_set("both"))
        config = AuditConfig(axioms=frozenset({Axiom.TRANSITIVITY}), corpus_size=6, seed=2)
        corpus = generate_corpus(inst, config) + [example1.menu("f"), example1.menu("gh")]
        report = audit(cmp, corpus, config)
        assert report.result_for(Axiom.TRANSITIVITY).status == "pass"

    def test_jml_transitivity_fails_on_cycle_triple(self, example2):
        inst = example2.instance
        cmp = JmlComparator(inst, example2.credal_set("both"))
        triple = [example2.menu("fstar"), example2.menu("gh"), example2.menu("f")]
        config = AuditConfig(axioms=frozenset({Axiom.TRANSITIVITY}), corpus_size=3)
        report = audit(cmp, triple, config)
        result = report.result_for(Axiom.TRANSITIVITY)
        assert result.status == "fail"
        assert set(result.counterexample) == set(triple)

    def test_bml_completeness_fails_on_incomparable_pair(self, example1):
        inst = example1.instance
        cmp = BmlComparator(inst, example1.credal_set("both"))
        pair = [example1.menu("f"), example1.menu("gh")]
        config = AuditConfig(axioms=frozenset({Axiom.COMPLETENESS}), corpus_size=2)
        report = audit(cmp, pair, config)
        result = report.result_for(Axiom.COMPLETENESS)
        assert result.status == "fail"
        assert set(result.counterexample) == set(pair)

    def test_failures_replay(self, example2):
        inst = example2.instance
        cmp = JmlComparator(inst, example2.credal_set("both"))
        corpus = [example2.menu("fstar"), example2.menu("gh"), example2.menu("f")]
        config = AuditConfig(axioms=frozenset({Axiom.TRANSITIVITY}), corpus_size=3)
        first = audit(cmp, corpus, config).result_for(Axiom.TRANSITIVITY)
        replay = audit(cmp, list(first.counterexample), config)
        assert replay.result_for(Axiom.TRANSITIVITY).status == "fail"

    def test_vacuous_when_antecedent_never_fires(self, two_state_instance):
        # Two crossing singletons: no subset pair, so flexibility is vacuous.
        inst = two_state_instance
        uniform = Posterior({"w1": Fraction(1, 2), "w2": Fraction(1, 2)})
        cmp = BmlComparator(inst, CredalSet.singleton(InfoStructure.point_mass(uniform)))
        corpus = [menu_of(inst, (3, 0)), menu_of(inst, (0, 3))]
        config = AuditConfig(
            axioms=frozenset({Axiom.PREFERENCE_FOR_FLEXIBILITY}), corpus_size=2
        )
        report = audit(cmp, corpus, config)
        assert report.result_for(Axiom.PREFERENCE_FOR_FLEXIBILITY).status == "vacuous"

    def test_continuity_reported_not_audited(self, example1):
        inst = example1.instance
        cmp = BmlComparator(inst, example1.credal_set("both"))
        config = AuditConfig(axioms=frozenset({Axiom.REFLEXIVITY}), corpus_size=2)
        report = audit(cmp, generate_corpus(inst, config), config)
        assert report.result_for(Axiom.CONTINUITY).status == "not-audited"

    def test_independence_reports_pass_on_grid(self, example1):
        inst = example1.instance
        cmp = BmlComparator(inst, example1.credal_set("both"))
        config = AuditConfig(axioms=frozenset({Axiom.INDEPENDENCE}), corpus_size=4, seed=3)
        report = audit(cmp, generate_corpus(inst, config), config)
        assert report.result_for(Axiom.INDEPENDENCE).status == "pass-on-grid"

    def test_nontriviality_vacuous_without_strict_pair(self, example1):
        inst = example1.instance
        cmp = BmlComparator(inst, example1.credal_set("both"))
        config = AuditConfig(axioms=frozenset({Axiom.NONTRIVIALITY}), corpus_size=1)
        report = audit(cmp, [example1.menu("f")], config)
        assert report.result_for(Axiom.NONTRIVIALITY).status == "vacuous"

    def test_counterexamples_are_shrunk(self, example2):
        # Audit a padded corpus; the reported witness menus should not be
        # larger than the original cycle menus.
        inst = example2.instance
        cmp = JmlComparator(inst, example2.credal_set("both"))
        fat = example2.menu("gh").union(example2.menu("f"))
        corpus = [example2.menu("fstar"), fat, example2.menu("f")]
        config = AuditConfig(axioms=frozenset({Axiom.TRANSITIVITY}), corpus_size=3)
        result = audit(cmp, corpus, config).result_for(Axiom.TRANSITIVITY)
        if result.status == "fail":
            assert all(len(menu) <= len(fat) for menu in result.counterexample)


class TestCrossAudit:
    def test_matrix_passes_on_seeded_instances(self):
        rng = random.Random(31)
        for seed in range(3):
            inst = random_instance(rng)
            report = cross_audit(inst, seed=seed)
            assert report.all_passed, report.to_records()

    def test_required_axiom_sets(self):
        assert Axiom.TRANSITIVITY in REQUIRED_AXIOMS["bml"]
        assert Axiom.TRANSITIVITY not in REQUIRED_AXIOMS["jml"]
        assert Axiom.COMPLETENESS in REQUIRED_AXIOMS["jml"]
        assert Axiom.REFLEXIVITY in REQUIRED_AXIOMS["hml"]

    def test_hml_single_member_passes_unanimity_column(self, example1):
        inst = example1.instance
        coll = Collection.of_credal_set(example1.credal_set("both"))
        cmp = HmlComparator(inst, coll)
        config = AuditConfig(axioms=REQUIRED_AXIOMS["bml"], corpus_size=5, seed=4)
        corpus = generate_corpus(inst, config)
        assert audit(cmp, corpus, config).passed

    def test_hml_all_singletons_passes_veto_column(self, example1):
        inst = example1.instance
        coll = Collection.of_singletons(example1.credal_set("both"))
        cmp = HmlComparator(inst, coll)
        config = AuditConfig(axioms=REQUIRED_AXIOMS["jml"], corpus_size=5, seed=4)
        corpus = generate_corpus(inst, config)
        assert audit(cmp, corpus, config).passed
