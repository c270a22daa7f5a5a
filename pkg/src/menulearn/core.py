"""Domain types for menu choice under uncertain future information.

Everything is exact: probabilities, weights, and utilities are
:class:`fractions.Fraction` values, so the weak inequalities that decide
preference verdicts never hinge on floating-point ties.  All types are
immutable and hashable after construction and canonicalize their contents
(sorted label order, zero entries dropped, duplicates merged), which makes
structural equality order-insensitive.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

from .errors import (
    BadProbabilityError,
    ConstantUtilityError,
    EmptyStateSpaceError,
    ValidationError,
)

#: Exact rational payoff (in utils); the result type of every evaluation.
Value = Fraction

#: Anything `as_fraction` accepts: an exact rational, an int, or a "p/q" string.
RationalLike = Union[Fraction, int, str]


def as_fraction(value: RationalLike) -> Fraction:
    """Convert *value* to an exact Fraction.

    Floats are rejected on purpose: silently converting 0.1 to
    3602879701896397/36028797018963968 would corrupt every downstream
    comparison.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected an exact rational (Fraction, int, or 'p/q' string), got {value!r}")


def _canonical_distribution(
    entries: Mapping[str, RationalLike] | Iterable[tuple[str, RationalLike]],
    what: str,
) -> tuple[tuple[str, Fraction], ...]:
    """Normalize a probability map: Fractions, sorted labels, zeros dropped.

    Raises BadProbabilityError unless all entries are >= 0 and sum to exactly 1.
    """
    if isinstance(entries, Mapping):
        pairs = list(entries.items())
    else:
        pairs = list(entries)
    seen: dict[str, Fraction] = {}
    for label, raw in pairs:
        if not isinstance(label, str):
            raise TypeError(f"{what} labels must be strings, got {label!r}")
        prob = as_fraction(raw)
        if prob < 0:
            raise BadProbabilityError(f"{what} probability for {label!r} is negative: {prob}")
        if label in seen:
            raise BadProbabilityError(f"duplicate {what} label {label!r}")
        seen[label] = prob
    total = sum(seen.values(), Fraction(0))
    if total != 1:
        raise BadProbabilityError(f"{what} probabilities sum to {total}, expected exactly 1")
    return tuple(sorted((label, p) for label, p in seen.items() if p != 0))


@dataclass(frozen=True)
class Lottery:
    """A lottery over deterministic prizes with exact probabilities.

    ``probs`` may be given as any mapping from prize label to rational; it is
    stored as a sorted tuple of (prize, Fraction) pairs with zero-probability
    prizes removed, so two lotteries are equal iff they assign the same
    probability to every prize.
    """

    probs: Mapping[str, RationalLike]

    def __post_init__(self) -> None:
        object.__setattr__(self, "probs", _canonical_distribution(self.probs, "prize"))

    @classmethod
    def degenerate(cls, prize: str) -> "Lottery":
        """The point mass on a single prize."""
        return cls({prize: Fraction(1)})

    @property
    def support(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.probs)

    def prob(self, prize: str) -> Fraction:
        for label, p in self.probs:
            if label == prize:
                return p
        return Fraction(0)

    def as_dict(self) -> dict[str, Fraction]:
        return dict(self.probs)


@dataclass(frozen=True)
class Posterior:
    """A probability distribution over states (a belief after learning)."""

    probs: Mapping[str, RationalLike]

    def __post_init__(self) -> None:
        object.__setattr__(self, "probs", _canonical_distribution(self.probs, "state"))

    @classmethod
    def degenerate(cls, state: str) -> "Posterior":
        return cls({state: Fraction(1)})

    @property
    def support(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.probs)

    def prob(self, state: str) -> Fraction:
        for label, p in self.probs:
            if label == state:
                return p
        return Fraction(0)

    def as_dict(self) -> dict[str, Fraction]:
        return dict(self.probs)


@dataclass(frozen=True)
class Act:
    """A state-contingent assignment of lotteries.

    The mapping must cover every state of the instance it is used with;
    that is checked where instances are available (see `validate_act`).
    """

    outcomes: Mapping[str, Lottery]

    def __post_init__(self) -> None:
        if isinstance(self.outcomes, Mapping):
            pairs = list(self.outcomes.items())
        else:
            pairs = list(self.outcomes)
        canonical = []
        seen = set()
        for state, lottery in pairs:
            if not isinstance(state, str):
                raise TypeError(f"state labels must be strings, got {state!r}")
            if not isinstance(lottery, Lottery):
                raise TypeError(f"act outcome for {state!r} must be a Lottery, got {lottery!r}")
            if state in seen:
                raise ValidationError(f"duplicate state {state!r} in act")
            seen.add(state)
            canonical.append((state, lottery))
        if not canonical:
            raise ValidationError("act must assign an outcome to at least one state")
        object.__setattr__(self, "outcomes", tuple(sorted(canonical)))

    @property
    def states(self) -> tuple[str, ...]:
        return tuple(state for state, _ in self.outcomes)

    def lottery(self, state: str) -> Lottery:
        for label, lot in self.outcomes:
            if label == state:
                return lot
        raise KeyError(state)

    def is_constant(self) -> bool:
        lotteries = {lot for _, lot in self.outcomes}
        return len(lotteries) == 1

    def as_dict(self) -> dict[str, Lottery]:
        return dict(self.outcomes)


def _act_sort_key(act: Act):
    return tuple((state, lottery.probs) for state, lottery in act.outcomes)


@dataclass(frozen=True)
class Menu:
    """A nonempty finite set of acts (duplicates removed, order canonical)."""

    acts: Iterable[Act]

    def __post_init__(self) -> None:
        unique = sorted(set(self.acts), key=_act_sort_key)
        if not unique:
            raise ValidationError("menu must contain at least one act")
        object.__setattr__(self, "acts", tuple(unique))

    def __iter__(self):
        return iter(self.acts)

    def __len__(self) -> int:
        return len(self.acts)

    def __contains__(self, act: object) -> bool:
        return act in self.acts

    def issubset(self, other: "Menu") -> bool:
        return set(self.acts) <= set(other.acts)

    def union(self, other: "Menu | Iterable[Act]") -> "Menu":
        extra = other.acts if isinstance(other, Menu) else tuple(other)
        return Menu(self.acts + tuple(extra))

    def is_constant(self) -> bool:
        """True when every act pays the same lottery in every state."""
        return all(act.is_constant() for act in self.acts)


@dataclass(frozen=True)
class InfoStructure:
    """A finitely supported distribution over posteriors.

    Models a member's prediction of what she will believe after learning:
    posterior ``p`` arrives with probability ``weight``.  Duplicate
    posteriors are merged, zero weights dropped; weights must be positive
    and sum to exactly one.
    """

    support: Iterable[tuple[Posterior, RationalLike]]

    def __post_init__(self) -> None:
        merged: dict[Posterior, Fraction] = {}
        for posterior, raw in self.support:
            if not isinstance(posterior, Posterior):
                raise TypeError(f"expected a Posterior, got {posterior!r}")
            weight = as_fraction(raw)
            if weight < 0:
                raise BadProbabilityError(f"information-structure weight is negative: {weight}")
            if weight == 0:
                continue
            merged[posterior] = merged.get(posterior, Fraction(0)) + weight
        total = sum(merged.values(), Fraction(0))
        if total != 1:
            raise BadProbabilityError(
                f"information-structure weights sum to {total}, expected exactly 1"
            )
        canonical = tuple(sorted(merged.items(), key=lambda item: item[0].probs))
        object.__setattr__(self, "support", canonical)

    @classmethod
    def point_mass(cls, posterior: Posterior) -> "InfoStructure":
        """The structure that predicts posterior ``p`` with certainty."""
        return cls(((posterior, Fraction(1)),))

    @property
    def posteriors(self) -> tuple[Posterior, ...]:
        return tuple(p for p, _ in self.support)

    def weight(self, posterior: Posterior) -> Fraction:
        for p, w in self.support:
            if p == posterior:
                return w
        return Fraction(0)


@dataclass(frozen=True)
class CredalSet:
    """A polytope of information structures, given by its generators.

    The represented set is the convex hull of ``generators``; exact
    duplicates are removed but generator order is preserved (it is the
    order used in printed gap tables).
    """

    generators: Iterable[InfoStructure]

    def __post_init__(self) -> None:
        unique: list[InfoStructure] = []
        for gen in self.generators:
            if not isinstance(gen, InfoStructure):
                raise TypeError(f"expected an InfoStructure, got {gen!r}")
            if gen not in unique:
                unique.append(gen)
        if not unique:
            raise ValidationError("credal set needs at least one generator")
        object.__setattr__(self, "generators", tuple(unique))

    @classmethod
    def singleton(cls, structure: InfoStructure) -> "CredalSet":
        return cls((structure,))

    def __iter__(self):
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)


@dataclass(frozen=True)
class Collection:
    """A nonempty finite family of credal sets (one per sub-group)."""

    members: Iterable[CredalSet]

    def __post_init__(self) -> None:
        unique: list[CredalSet] = []
        for member in self.members:
            if not isinstance(member, CredalSet):
                raise TypeError(f"expected a CredalSet, got {member!r}")
            if member not in unique:
                unique.append(member)
        if not unique:
            raise ValidationError("collection needs at least one credal set")
        object.__setattr__(self, "members", tuple(unique))

    @classmethod
    def of_credal_set(cls, credal: CredalSet) -> "Collection":
        """The one-member collection; the unanimity criterion over it."""
        return cls((credal,))

    @classmethod
    def of_singletons(cls, credal: CredalSet) -> "Collection":
        """One singleton member per generator; the veto criterion over it."""
        return cls(tuple(CredalSet.singleton(gen) for gen in credal))

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


class Verdict(Enum):
    """Outcome of comparing two menus under a (possibly partial) criterion."""

    STRICT_BETTER = "StrictBetter"
    INDIFFERENT = "Indifferent"
    STRICT_WORSE = "StrictWorse"
    INCOMPARABLE = "Incomparable"

    @staticmethod
    def from_directions(forward: bool, backward: bool) -> "Verdict":
        """Assemble a verdict from the two weak-preference directions."""
        if forward and backward:
            return Verdict.INDIFFERENT
        if forward:
            return Verdict.STRICT_BETTER
        if backward:
            return Verdict.STRICT_WORSE
        return Verdict.INCOMPARABLE

    @property
    def weakly_prefers(self) -> bool:
        """True when the left menu is at least as good as the right one."""
        return self in (Verdict.STRICT_BETTER, Verdict.INDIFFERENT)

    @property
    def weakly_preferred(self) -> bool:
        """True when the right menu is at least as good as the left one."""
        return self in (Verdict.STRICT_WORSE, Verdict.INDIFFERENT)

    def flipped(self) -> "Verdict":
        """The verdict for the same pair compared in the opposite order."""
        if self is Verdict.STRICT_BETTER:
            return Verdict.STRICT_WORSE
        if self is Verdict.STRICT_WORSE:
            return Verdict.STRICT_BETTER
        return self


@dataclass(frozen=True)
class Instance:
    """The ambient decision environment: states, prizes, and a vNM utility.

    Attributes:
        states: ordered state labels; at least one.
        prizes: ordered prize labels; at least two.
        utility: prize -> exact rational utility, given for every prize and
            nonconstant (two prizes must differ, otherwise every comparison
            would degenerate to indifference).
    """

    states: tuple[str, ...]
    prizes: tuple[str, ...]
    utility: Mapping[str, RationalLike]

    def __post_init__(self) -> None:
        states = tuple(self.states)
        prizes = tuple(self.prizes)
        if isinstance(self.utility, Mapping):
            utility_pairs = list(self.utility.items())
        else:
            utility_pairs = list(self.utility)
        utility = tuple((prize, as_fraction(value)) for prize, value in utility_pairs)
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "prizes", prizes)
        object.__setattr__(self, "utility", utility)
        validate_instance(self)

    def utility_of(self, prize: str) -> Fraction:
        for label, value in self.utility:
            if label == prize:
                return value
        raise KeyError(prize)

    def lottery_utility(self, lottery: Lottery) -> Fraction:
        """Expected utility of a lottery (the affine extension of the prize utility)."""
        total = Fraction(0)
        for prize, prob in lottery.probs:
            total += prob * self.utility_of(prize)
        return total

    def best_prize(self) -> str:
        return max(self.prizes, key=self.utility_of)

    def worst_prize(self) -> str:
        return min(self.prizes, key=self.utility_of)

    def utility_range(self) -> tuple[Fraction, Fraction]:
        values = [self.utility_of(z) for z in self.prizes]
        return min(values), max(values)

    def rescaled(self, scale: RationalLike, shift: RationalLike) -> "Instance":
        """The instance with utility replaced by ``scale * u + shift``."""
        scale = as_fraction(scale)
        shift = as_fraction(shift)
        if scale <= 0:
            raise ValidationError("utility rescaling requires a positive scale")
        return Instance(
            states=self.states,
            prizes=self.prizes,
            utility={z: scale * u + shift for z, u in self.utility},
        )


def validate_instance(inst: Instance) -> None:
    """Check all structural invariants of an instance.

    Raises EmptyStateSpaceError, ConstantUtilityError, or ValidationError;
    returns None when the instance is well formed.
    """
    if not inst.states:
        raise EmptyStateSpaceError("instance needs at least one state")
    if len(set(inst.states)) != len(inst.states):
        raise ValidationError("duplicate state labels")
    if len(set(inst.prizes)) != len(inst.prizes):
        raise ValidationError("duplicate prize labels")
    if any(not isinstance(s, str) for s in inst.states):
        raise TypeError("state labels must be strings")
    if any(not isinstance(z, str) for z in inst.prizes):
        raise TypeError("prize labels must be strings")
    declared = {label for label, _ in inst.utility}
    if declared != set(inst.prizes):
        missing = set(inst.prizes) - declared
        extra = declared - set(inst.prizes)
        raise ValidationError(
            f"utility must be given for exactly the prizes (missing {sorted(missing)}, unknown {sorted(extra)})"
        )
    if len(inst.prizes) < 2:
        raise ConstantUtilityError("at least two prizes are required for a nonconstant utility")
    values = {value for _, value in inst.utility}
    if len(values) < 2:
        raise ConstantUtilityError("utility assigns the same value to every prize")


def validate_lottery(lottery: Lottery, inst: Instance) -> None:
    """Check that the lottery only uses prizes of the instance."""
    unknown = set(lottery.support) - set(inst.prizes)
    if unknown:
        raise ValidationError(f"lottery uses prizes not in the instance: {sorted(unknown)}")


def validate_posterior(posterior: Posterior, inst: Instance) -> None:
    unknown = set(posterior.support) - set(inst.states)
    if unknown:
        raise ValidationError(f"posterior uses states not in the instance: {sorted(unknown)}")


def validate_act(act: Act, inst: Instance) -> None:
    """Check that the act is total over the instance's states."""
    if set(act.states) != set(inst.states):
        raise ValidationError(
            f"act must assign a lottery to every state: has {sorted(act.states)}, "
            f"instance has {sorted(inst.states)}"
        )
    for _, lottery in act.outcomes:
        validate_lottery(lottery, inst)


def validate_menu(menu: Menu, inst: Instance) -> None:
    for act in menu:
        validate_act(act, inst)


def constant_act(inst: Instance, x: Lottery) -> Act:
    """The act that pays the lottery *x* in every state."""
    validate_lottery(x, inst)
    return Act({state: x for state in inst.states})


def constant_menu(inst: Instance, x: Lottery) -> Menu:
    """The singleton menu of the constant act on *x* (an outcome viewed as a menu)."""
    return Menu((constant_act(inst, x),))


def mean_posterior(pi: InfoStructure) -> Posterior:
    """The prior implied by an information structure: the weighted average posterior."""
    accumulated: dict[str, Fraction] = {}
    for posterior, weight in pi.support:
        for state, prob in posterior.probs:
            accumulated[state] = accumulated.get(state, Fraction(0)) + weight * prob
    return Posterior(accumulated)


def combine_structures(
    structures: Iterable[InfoStructure],
    weights: Iterable[RationalLike],
) -> InfoStructure:
    """The convex combination of information structures as measures over posteriors."""
    structures = tuple(structures)
    weights = tuple(as_fraction(w) for w in weights)
    if len(structures) != len(weights) or not structures:
        raise ValidationError("need one weight per structure and at least one structure")
    if any(w < 0 for w in weights) or sum(weights) != 1:
        raise BadProbabilityError("combination weights must be nonnegative and sum to 1")
    accumulated: dict[Posterior, Fraction] = {}
    for structure, w in zip(structures, weights):
        if w == 0:
            continue
        for posterior, weight in structure.support:
            accumulated[posterior] = accumulated.get(posterior, Fraction(0)) + w * weight
    return InfoStructure(tuple(accumulated.items()))


def mix_structures(a: InfoStructure, b: InfoStructure, alpha: RationalLike) -> InfoStructure:
    """``alpha * a + (1 - alpha) * b`` as measures over posteriors."""
    alpha = as_fraction(alpha)
    if not 0 <= alpha <= 1:
        raise BadProbabilityError(f"mixture weight must lie in [0, 1], got {alpha}")
    return combine_structures((a, b), (alpha, 1 - alpha))
