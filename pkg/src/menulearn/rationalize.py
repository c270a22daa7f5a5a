"""Building complete, transitive rankings from the hierarchical criterion.

A hierarchical criterion may stay silent or cycle.  A committee that has to
act anyway can score each menu by blending two dual aggregates of the
benefit of information: the best sub-group's worst case (max of min) and
the most cautious sub-group's best case (min of max).  Any menu-dependent
blend weight in [0, 1] produces a complete transitive ranking that agrees
with the original criterion on lotteries and respects every comparison
that is robust to small perturbations of the data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Optional, Sequence

from .core import (
    Collection,
    Instance,
    Lottery,
    Menu,
    RationalLike,
    Value,
    as_fraction,
    constant_menu,
)
from .comparative import CheckReport
from .criteria import HmlComparator, collection_maxmin_gap
from .errors import BadWeightError
from .evaluation import benefit_of_information, mix_lotteries


@dataclass(frozen=True)
class ScenarioBand:
    """The two dual aggregates of a menu's benefit, ordered as an interval.

    ``maxmin`` is the best sub-group's guaranteed value; ``minmax`` the
    most cautious sub-group's optimistic value.  Either may be the larger
    one, so the band endpoints are ``low = min`` and ``high = max``.
    """

    maxmin: Value
    minmax: Value

    @property
    def low(self) -> Value:
        return min(self.maxmin, self.minmax)

    @property
    def high(self) -> Value:
        return max(self.maxmin, self.minmax)

    @property
    def degenerate(self) -> bool:
        return self.maxmin == self.minmax


def scenario_band(F: Menu, coll: Collection, inst: Instance) -> ScenarioBand:
    """Compute both aggregates of ``b_F`` over the collection."""
    maxmin = max(
        min(benefit_of_information(F, gen, inst) for gen in member) for member in coll
    )
    minmax = min(
        max(benefit_of_information(F, gen, inst) for gen in member) for member in coll
    )
    return ScenarioBand(maxmin=maxmin, minmax=minmax)


def robust_strict(F: Menu, G: Menu, coll: Collection, inst: Instance) -> bool:
    """Strict preference that survives small mixtures with arbitrary lotteries.

    Computed in closed form: some sub-group must be unanimously strictly
    for *F*, and no sub-group may weakly favor *G*.
    """
    if collection_maxmin_gap(F, G, coll, inst) <= 0:
        return False
    return collection_maxmin_gap(G, F, coll, inst) < 0


@dataclass(frozen=True)
class AlphaPolicy:
    """How to choose the blend weight ``alpha(F)`` on the maxmin aggregate.

    Modes:
      * ``constant``: one fixed weight for every menu.
      * ``cautious``: resolve to the band's low endpoint, whichever
        aggregate that is for the menu at hand.
      * ``optimistic``: resolve to the band's high endpoint.
      * ``custom``: a caller-supplied map or function from menus to weights.
    """

    mode: str
    value: Optional[Fraction] = None
    chooser: Optional[Callable[[Menu], RationalLike]] = None

    @classmethod
    def constant(cls, value: RationalLike) -> "AlphaPolicy":
        value = as_fraction(value)
        if not 0 <= value <= 1:
            raise BadWeightError(f"constant weight must lie in [0, 1], got {value}")
        return cls(mode="constant", value=value)

    @classmethod
    def cautious(cls) -> "AlphaPolicy":
        return cls(mode="cautious")

    @classmethod
    def optimistic(cls) -> "AlphaPolicy":
        return cls(mode="optimistic")

    @classmethod
    def custom(cls, chooser: Callable[[Menu], RationalLike] | Mapping[Menu, RationalLike]) -> "AlphaPolicy":
        if isinstance(chooser, Mapping):
            mapping = chooser
            return cls(mode="custom", chooser=lambda menu: mapping[menu])
        return cls(mode="custom", chooser=chooser)

    def weight_for(self, menu: Menu, band: ScenarioBand) -> Fraction:
        if self.mode == "constant":
            assert self.value is not None
            return self.value
        if self.mode == "cautious":
            # Full weight on whichever aggregate is the band's low endpoint.
            return Fraction(1) if band.maxmin <= band.minmax else Fraction(0)
        if self.mode == "optimistic":
            return Fraction(0) if band.maxmin <= band.minmax else Fraction(1)
        if self.mode == "custom":
            assert self.chooser is not None
            weight = as_fraction(self.chooser(menu))
            if not 0 <= weight <= 1:
                raise BadWeightError(f"policy produced weight {weight} outside [0, 1]")
            return weight
        raise BadWeightError(f"unknown policy mode {self.mode!r}")


def rationalized_value(
    F: Menu,
    coll: Collection,
    policy: AlphaPolicy,
    inst: Instance,
) -> Value:
    """Score a menu by the policy's blend of its two scenario aggregates."""
    band = scenario_band(F, coll, inst)
    alpha = policy.weight_for(F, band)
    return alpha * band.maxmin + (1 - alpha) * band.minmax


@dataclass(frozen=True)
class RankEntry:
    """One row of a ranking: menus sorted by score, ties sharing a rank."""

    name: str
    menu: Menu
    value: Value
    band: ScenarioBand
    rank: int

    def to_record(self) -> dict:
        return {
            "name": self.name,
            "rank": self.rank,
            "value": str(self.value),
            "value_approx": float(self.value),
            "band_low": str(self.band.low),
            "band_high": str(self.band.high),
        }


def rank_menus(
    corpus: Sequence[Menu],
    coll: Collection,
    policy: AlphaPolicy,
    inst: Instance,
    names: Optional[Sequence[str]] = None,
) -> list[RankEntry]:
    """Rank menus by rationalized value, descending; equal values share a rank."""
    if not corpus:
        raise ValueError("ranking needs at least one menu")
    if names is None:
        names = [f"menu{i + 1}" for i in range(len(corpus))]
    if len(names) != len(corpus):
        raise ValueError("need exactly one name per menu")
    scored = []
    for name, menu in zip(names, corpus):
        band = scenario_band(menu, coll, inst)
        alpha = policy.weight_for(menu, band)
        value = alpha * band.maxmin + (1 - alpha) * band.minmax
        scored.append((name, menu, value, band))
    scored.sort(key=lambda item: (-item[2], item[0]))
    entries: list[RankEntry] = []
    rank = 0
    previous_value: Optional[Fraction] = None
    for position, (name, menu, value, band) in enumerate(scored, start=1):
        if previous_value is None or value != previous_value:
            rank = position
            previous_value = value
        entries.append(RankEntry(name=name, menu=menu, value=value, band=band, rank=rank))
    return entries


def utility_grid_lotteries(inst: Instance, steps: int = 8) -> list[Lottery]:
    """Lotteries whose utilities form an even rational grid over the utility range.

    Used as witness outcomes when checking consistency of a ranking: the
    grid spans from the worst to the best prize utility in ``steps`` equal
    increments.
    """
    if steps < 1:
        raise ValueError("need at least one grid step")
    worst = Lottery.degenerate(inst.worst_prize())
    best = Lottery.degenerate(inst.best_prize())
    return [mix_lotteries(best, worst, Fraction(k, steps)) for k in range(steps + 1)]


@dataclass(frozen=True)
class ConsistencyReport:
    """Joint result of the two consistency conditions for a ranking."""

    lottery_consistency: CheckReport
    robust_strict_consistency: CheckReport

    @property
    def passed(self) -> bool:
        return self.lottery_consistency.passed and self.robust_strict_consistency.passed


def check_consistency(
    value_of: Callable[[Menu], Value],
    comparator: HmlComparator,
    corpus: Sequence[Menu],
    lotteries: Sequence[Lottery],
) -> ConsistencyReport:
    """Verify that a menu score respects the first criterion where it must.

    Two conditions:

    * lottery consistency: whenever the criterion weakly ranks lottery x
      over lottery y, the score of their constant menus agrees.
    * robustly strict consistency: whenever some grid lottery x separates
      two menus robustly (F above x above G), the score must put F
      strictly above G.

    The lottery grid is a sound partial check: it can miss separating
    outcomes but never reports a spurious failure.
    """
    inst = comparator.instance
    coll = comparator.collection

    lottery_checked = 0
    lottery_fired = 0
    lottery_witness = None
    constant_menus = [constant_menu(inst, x) for x in lotteries]
    for i, x in enumerate(lotteries):
        for j, y in enumerate(lotteries):
            if i == j:
                continue
            lottery_checked += 1
            if inst.lottery_utility(x) >= inst.lottery_utility(y):
                lottery_fired += 1
                if not value_of(constant_menus[i]) >= value_of(constant_menus[j]):
                    lottery_witness = (constant_menus[i], constant_menus[j])
                    break
        if lottery_witness:
            break
    if lottery_witness:
        lottery_report = CheckReport(
            "lottery_consistency", "fail", lottery_witness, lottery_checked, lottery_fired
        )
    else:
        status = "pass" if lottery_fired else "vacuous"
        lottery_report = CheckReport(
            "lottery_consistency", status, None, lottery_checked, lottery_fired
        )

    strict_checked = 0
    strict_fired = 0
    strict_witness = None
    for F in corpus:
        for G in corpus:
            if F == G:
                continue
            strict_checked += 1
            separated = any(
                robust_strict(F, xm, coll, inst) and robust_strict(xm, G, coll, inst)
                for xm in constant_menus
            )
            if separated:
                strict_fired += 1
                if not value_of(F) > value_of(G):
                    strict_witness = (F, G)
                    break
        if strict_witness:
            break
    if strict_witness:
        strict_report = CheckReport(
            "robust_strict_consistency", "fail", strict_witness, strict_checked, strict_fired
        )
    else:
        status = "pass" if strict_fired else "vacuous"
        strict_report = CheckReport(
            "robust_strict_consistency", status, None, strict_checked, strict_fired
        )
    return ConsistencyReport(lottery_report, strict_report)
