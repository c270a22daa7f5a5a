"""The four menu-preference criteria: SL, BML, JML, and HML.

All four rank menus through the benefit-of-information gap
``b_F(pi) - b_G(pi)``:

* SL  (subjective learning): one structure decides; complete and transitive.
* BML (Bewley multiple learning): unanimity over a credal set; the gap must
  be nonnegative at every structure.  Transitive but possibly incomplete.
* JML (justifiable multiple learning): a single structure can justify the
  ranking; the gap must be nonnegative somewhere.  Complete but possibly
  intransitive.
* HML (hierarchical multiple learning): members are split into sub-groups
  (one credal set each); a menu wins if some sub-group prefers it
  unanimously.  Generalizes both BML (one group) and JML (all singleton
  groups).

Since the gap is linear in the structure, its extrema over a credal
polytope are attained at generators, so every min/max below enumerates
generators only.  That keeps the whole pipeline exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .core import (
    Act,
    Collection,
    CredalSet,
    Instance,
    InfoStructure,
    Menu,
    RationalLike,
    Value,
    Verdict,
    as_fraction,
    combine_structures,
    mean_posterior,
)
from .evaluation import act_value, benefit_of_information


def benefit_gap(F: Menu, G: Menu, pi: InfoStructure, inst: Instance) -> Value:
    """``b_F(pi) - b_G(pi)``."""
    return benefit_of_information(F, pi, inst) - benefit_of_information(G, pi, inst)


def credal_min_gap(F: Menu, G: Menu, credal: CredalSet, inst: Instance) -> Value:
    """Worst-case benefit gap over the credal set (attained at a generator)."""
    return min(benefit_gap(F, G, gen, inst) for gen in credal)


def credal_max_gap(F: Menu, G: Menu, credal: CredalSet, inst: Instance) -> Value:
    """Best-case benefit gap over the credal set (attained at a generator)."""
    return max(benefit_gap(F, G, gen, inst) for gen in credal)


def collection_maxmin_gap(F: Menu, G: Menu, coll: Collection, inst: Instance) -> Value:
    """Best sub-group's worst-case gap: max over members of the min over generators."""
    return max(credal_min_gap(F, G, member, inst) for member in coll)


def sl_compare(F: Menu, G: Menu, inst: Instance, pi: InfoStructure) -> Verdict:
    """Rank two menus by the benefit of information of a single structure."""
    gap = benefit_gap(F, G, pi, inst)
    return Verdict.from_directions(gap >= 0, gap <= 0)


def bml_compare(F: Menu, G: Menu, inst: Instance, credal: CredalSet) -> Verdict:
    """Unanimity rule: F is weakly preferred iff the gap is >= 0 at every structure.

    Both directions are evaluated; disagreement inside the credal set shows
    up as ``Verdict.INCOMPARABLE``.
    """
    forward = credal_min_gap(F, G, credal, inst) >= 0
    backward = credal_min_gap(G, F, credal, inst) >= 0
    return Verdict.from_directions(forward, backward)


def jml_compare(F: Menu, G: Menu, inst: Instance, credal: CredalSet) -> Verdict:
    """Veto rule: F is weakly preferred iff the gap is >= 0 at some structure.

    Complete by construction (a negative max in one direction forces a
    positive max in the other), but transitivity can fail.
    """
    forward = credal_max_gap(F, G, credal, inst) >= 0
    backward = credal_max_gap(G, F, credal, inst) >= 0
    return Verdict.from_directions(forward, backward)


def hml_compare(F: Menu, G: Menu, inst: Instance, coll: Collection) -> Verdict:
    """Hierarchical rule: F wins if some sub-group unanimously ranks it higher."""
    forward = collection_maxmin_gap(F, G, coll, inst) >= 0
    backward = collection_maxmin_gap(G, F, coll, inst) >= 0
    return Verdict.from_directions(forward, backward)


def singleton_reduction(
    f: Act,
    g: Act,
    credal: CredalSet,
    mode: Literal["bml", "jml"],
    inst: Instance,
) -> Verdict:
    """Compare two single acts through the priors implied by each generator.

    On singleton menus the learning criteria collapse to their static
    multiple-prior counterparts: each structure matters only through its
    mean posterior.  Must agree with `bml_compare` / `jml_compare` on the
    corresponding singleton menus.
    """
    if mode not in ("bml", "jml"):
        raise ValueError(f"mode must be 'bml' or 'jml', got {mode!r}")
    gaps = []
    for gen in credal:
        prior = mean_posterior(gen)
        gaps.append(act_value(f, prior, inst) - act_value(g, prior, inst))
    if mode == "bml":
        forward = all(gap >= 0 for gap in gaps)
        backward = all(gap <= 0 for gap in gaps)
    else:
        forward = any(gap >= 0 for gap in gaps)
        backward = any(gap <= 0 for gap in gaps)
    return Verdict.from_directions(forward, backward)


def alpha_maxmin_collection(credal: CredalSet, alpha: RationalLike) -> Collection:
    """The collection whose hierarchical rule weighs worst and best cases.

    Mixing the whole credal set toward each of its generators,
    ``{alpha * Pi + (1 - alpha) * {pi} : pi generator of Pi}``, yields a
    hierarchical criterion whose decision value is exactly
    ``alpha * min-gap + (1 - alpha) * max-gap``.
    """
    alpha = as_fraction(alpha)
    if not 0 <= alpha <= 1:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    members = []
    for anchor in credal:
        mixed = [
            combine_structures((gen, anchor), (alpha, 1 - alpha)) for gen in credal
        ]
        members.append(CredalSet(mixed))
    return Collection(members)


# ---------------------------------------------------------------------------
# Comparator objects: a uniform handle on (criterion, parameters) pairs for
# the audit and comparative-statics machinery.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SlComparator:
    instance: Instance
    structure: InfoStructure

    kind = "sl"

    def compare(self, F: Menu, G: Menu) -> Verdict:
        return sl_compare(F, G, self.instance, self.structure)

    def weakly_prefers(self, F: Menu, G: Menu) -> bool:
        return self.compare(F, G).weakly_prefers

    def strictly_prefers(self, F: Menu, G: Menu) -> bool:
        return self.compare(F, G) is Verdict.STRICT_BETTER


@dataclass(frozen=True)
class BmlComparator:
    instance: Instance
    credal: CredalSet

    kind = "bml"

    def compare(self, F: Menu, G: Menu) -> Verdict:
        return bml_compare(F, G, self.instance, self.credal)

    def weakly_prefers(self, F: Menu, G: Menu) -> bool:
        return credal_min_gap(F, G, self.credal, self.instance) >= 0

    def strictly_prefers(self, F: Menu, G: Menu) -> bool:
        return self.compare(F, G) is Verdict.STRICT_BETTER


@dataclass(frozen=True)
class JmlComparator:
    instance: Instance
    credal: CredalSet

    kind = "jml"

    def compare(self, F: Menu, G: Menu) -> Verdict:
        return jml_compare(F, G, self.instance, self.credal)

    def weakly_prefers(self, F: Menu, G: Menu) -> bool:
        return credal_max_gap(F, G, self.credal, self.instance) >= 0

    def strictly_prefers(self, F: Menu, G: Menu) -> bool:
        return self.compare(F, G) is Verdict.STRICT_BETTER


@dataclass(frozen=True)
class HmlComparator:
    instance: Instance
    collection: Collection

    kind = "hml"

    def compare(self, F: Menu, G: Menu) -> Verdict:
        return hml_compare(F, G, self.instance, self.collection)

    def weakly_prefers(self, F: Menu, G: Menu) -> bool:
        return collection_maxmin_gap(F, G, self.collection, self.instance) >= 0

    def strictly_prefers(self, F: Menu, G: Menu) -> bool:
        return self.compare(F, G) is Verdict.STRICT_BETTER


Comparator = SlComparator | BmlComparator | JmlComparator | HmlComparator
