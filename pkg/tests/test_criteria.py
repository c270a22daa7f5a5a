"""The four criteria: worked-example verdicts, reductions, and axial properties."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from menulearn import (
    Collection,
    CredalSet,
    Menu,
    Verdict,
    alpha_maxmin_collection,
    bml_compare,
    combine_structures,
    credal_max_gap,
    credal_min_gap,
    dominates,
    hml_compare,
    jml_compare,
    mix_menus,
    singleton_reduction,
    sl_compare,
)
from menulearn.audit import random_act, random_credal_set, random_instance

from conftest import credal_sets, instances, menu_of, menus, scenarios


class TestCredalGaps:
    def test_example_min_and_max(self, example1):
        inst = example1.instance
        f, gh = example1.menu("f"), example1.menu("gh")
        both = example1.credal_set("both")
        assert credal_min_gap(f, gh, both, inst) == -1
        assert credal_max_gap(f, gh, both, inst) == Fraction(1, 2)

    def test_singleton_credal_set_gives_plain_gap(self, example1):
        inst = example1.instance
        f, gh = example1.menu("f"), example1.menu("gh")
        single = CredalSet.singleton(example1.info_structure("delta_p"))
        assert credal_min_gap(f, gh, single, inst) == Fraction(1, 2)
        assert credal_max_gap(f, gh, single, inst) == Fraction(1, 2)

    def test_redundant_midpoint_generator_changes_nothing(self, example1):
        inst = example1.instance
        f, gh = example1.menu("f"), example1.menu("gh")
        both = example1.credal_set("both")
        midpoint = combine_structures(both.generators, (Fraction(1, 2), Fraction(1, 2)))
        padded = CredalSet(both.generators + (midpoint,))
        for F, G in ((f, gh), (gh, f)):
            assert credal_min_gap(F, G, padded, inst) == credal_min_gap(F, G, both, inst)
            assert credal_max_gap(F, G, padded, inst) == credal_max_gap(F, G, both, inst)


class TestWorkedExampleVerdicts:
    def test_bml_incomparable_pair(self, example1):
        inst = example1.instance
        verdict = bml_compare(
            example1.menu("f"), example1.menu("gh"), inst, example1.credal_set("both")
        )
        assert verdict is Verdict.INCOMPARABLE

    def test_bml_reflexive(self, example1):
        inst = example1.instance
        gh = example1.menu("gh")
        assert bml_compare(gh, gh, inst, example1.credal_set("both")) is Verdict.INDIFFERENT

    def test_bml_strict_under_strict_dominance(self):
        rng = random.Random(7)
        for _ in range(20):
            inst = random_instance(rng)
            credal = random_credal_set(rng, inst)
            best = menu_of(inst, tuple([inst.utility_range()[1]] * len(inst.states)))
            worst_value = inst.utility_range()[0]
            F = best
            G = mix_menus(
                F, menu_of(inst, tuple([worst_value] * len(inst.states))), Fraction(1, 2)
            )
            if not dominates(F, G, inst, strict=True):
                continue  # degenerate draw: F already contains the mixture
            assert bml_compare(F, G, inst, credal) is Verdict.STRICT_BETTER

    def test_jml_cycle_verdicts(self, example2):
        inst = example2.instance
        both = example2.credal_set("both")
        f, gh, fstar = example2.menu("f"), example2.menu("gh"), example2.menu("fstar")
        assert jml_compare(fstar, gh, inst, both) is Verdict.INDIFFERENT
        assert jml_compare(f, gh, inst, both) is Verdict.INDIFFERENT
        assert jml_compare(fstar, f, inst, both) is Verdict.STRICT_BETTER

    def test_jml_equals_bml_on_singleton_set(self, example1):
        inst = example1.instance
        single = CredalSet.singleton(example1.info_structure("pi"))
        for left, right in (("f", "gh"), ("gh", "f"), ("f", "f")):
            F, G = example1.menu(left), example1.menu(right)
            assert jml_compare(F, G, inst, single) == bml_compare(F, G, inst, single)

    def test_sl_flips_with_the_structure(self, example1):
        inst = example1.instance
        f, gh = example1.menu("f"), example1.menu("gh")
        assert sl_compare(f, gh, inst, example1.info_structure("delta_p")) is Verdict.STRICT_BETTER
        assert sl_compare(f, gh, inst, example1.info_structure("pi")) is Verdict.STRICT_WORSE
        assert sl_compare(f, f, inst, example1.info_structure("pi")) is Verdict.INDIFFERENT


class TestHmlReductions:
    def test_single_member_collection_is_unanimity(self, example1):
        inst = example1.instance
        both = example1.credal_set("both")
        coll = Collection.of_credal_set(both)
        f, gh = example1.menu("f"), example1.menu("gh")
        for F, G in ((f, gh), (gh, f), (f, f)):
            assert hml_compare(F, G, inst, coll) == bml_compare(F, G, inst, both)

    def test_all_singleton_collection_is_veto(self, example2):
        inst = example2.instance
        both = example2.credal_set("both")
        coll = Collection.of_singletons(both)
        menus_ = [example2.menu(n) for n in ("f", "gh", "fstar")]
        for F in menus_:
            for G in menus_:
                assert hml_compare(F, G, inst, coll) == jml_compare(F, G, inst, both)

    def test_alpha_maxmin_matches_weighted_gap_sign(self, example1):
        inst = example1.instance
        both = example1.credal_set("both")
        f, gh = example1.menu("f"), example1.menu("gh")
        alpha = Fraction(1, 2)
        coll = alpha_maxmin_collection(both, alpha)
        for F, G in ((f, gh), (gh, f), (f, f), (gh, gh)):
            blended_forward = alpha * credal_min_gap(F, G, both, inst) + (
                1 - alpha
            ) * credal_max_gap(F, G, both, inst)
            blended_backward = alpha * credal_min_gap(G, F, both, inst) + (
                1 - alpha
            ) * credal_max_gap(G, F, both, inst)
            expected = Verdict.from_directions(blended_forward >= 0, blended_backward >= 0)
            assert hml_compare(F, G, inst, coll) is expected

    @given(data=st.data())
    @settings(max_examples=40, deadline=None)
    def test_reductions_on_random_scenarios(self, data):
        inst = data.draw(instances())
        credal = data.draw(credal_sets(inst))
        F = data.draw(menus(inst))
        G = data.draw(menus(inst))
        assert hml_compare(F, G, inst, Collection.of_credal_set(credal)) == bml_compare(
            F, G, inst, credal
        )
        assert hml_compare(F, G, inst, Collection.of_singletons(credal)) == jml_compare(
            F, G, inst, credal
        )


class TestCriterionShapes:
    @given(data=st.data())
    @settings(max_examples=50, deadline=None)
    def test_jml_is_complete(self, data):
        bundle = data.draw(scenarios())
        F, G = bundle.menus
        assert jml_compare(F, G, bundle.inst, bundle.credal) is not Verdict.INCOMPARABLE

    @given(data=st.data())
    @settings(max_examples=50, deadline=None)
    def test_hml_is_reflexive(self, data):
        bundle = data.draw(scenarios(n_menus=1))
        (F,) = bundle.menus
        assert hml_compare(F, F, bundle.inst, bundle.collection) is Verdict.INDIFFERENT

    @given(data=st.data())
    @settings(max_examples=40, deadline=None)
    def test_verdicts_are_antisymmetric_pairs(self, data):
        bundle = data.draw(scenarios())
        F, G = bundle.menus
        forward = hml_compare(F, G, bundle.inst, bundle.collection)
        backward = hml_compare(G, F, bundle.inst, bundle.collection)
        assert backward is forward.flipped()


class TestSingletonReduction:
    def test_agreement_with_menu_criteria(self):
        rng = random.Random(11)
        agreements = 0
        while agreements < 100:
            inst = random_instance(rng)
            credal = random_credal_set(rng, inst)
            f, g = random_act(rng, inst), random_act(rng, inst)
            F, G = Menu((f,)), Menu((g,))
            assert singleton_reduction(f, g, credal, "bml", inst) == bml_compare(
                F, G, inst, credal
            )
            assert singleton_reduction(f, g, credal, "jml", inst) == jml_compare(
                F, G, inst, credal
            )
            agreements += 1

    def test_identical_acts_are_indifferent(self, example1):
        inst = example1.instance
        act = example1.menu("f").acts[0]
        both = example1.credal_set("both")
        assert singleton_reduction(act, act, both, "bml", inst) is Verdict.INDIFFERENT

    def test_shared_mean_posterior_matches_static_comparison(self, example1):
        # Both generators average to the uniform prior, so on single acts the
        # whole credal set behaves like the point mass at that prior.
        inst = example1.instance
        both = example1.credal_set("both")
        delta_p = example1.info_structure("delta_p")
        f = example1.menu("f").acts[0]
        g = example1.menu("gh").acts[0]
        for left, right in ((f, g), (g, f), (f, f)):
            expected = sl_compare(Menu((left,)), Menu((right,)), inst, delta_p)
            assert singleton_reduction(left, right, both, "bml", inst) is expected
            assert singleton_reduction(left, right, both, "jml", inst) is expected
        # The equivalence is a singleton-only fact: on a two-act menu the
        # same credal set disagrees with the implied-prior comparison.
        f_menu, gh_menu = example1.menu("f"), example1.menu("gh")
        assert bml_compare(f_menu, gh_menu, inst, both) != sl_compare(
            f_menu, gh_menu, inst, delta_p
        )

    def test_rejects_unknown_mode(self, example1):
        inst = example1.instance
        act = example1.menu("f").acts[0]
        with pytest.raises(ValueError):
            singleton_reduction(act, act, example1.credal_set("both"), "sl", inst)
