"""Numeric substrate: menu values under posteriors and information structures.

The central quantity is the benefit of information ``b_F(pi)``: the expected
utility of a member who will observe her posterior (drawn according to
``pi``), then pick the best act from the menu ``F``.  Everything here is a
pure function of immutable inputs, so results are cached by value.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .core import (
    Act,
    Instance,
    InfoStructure,
    Lottery,
    Menu,
    Posterior,
    RationalLike,
    Value,
    as_fraction,
)
from .errors import BadWeightsError, ValidationError


def act_value(f: Act, p: Posterior, inst: Instance) -> Value:
    """Expected utility of act *f* under posterior *p*."""
    total = Fraction(0)
    for state, prob in p.probs:
        total += prob * inst.lottery_utility(f.lottery(state))
    return total


def support_value(menu: Menu, p: Posterior, inst: Instance) -> Value:
    """Value of the menu once posterior *p* is known: the best act's expected utility."""
    return max(act_value(f, p, inst) for f in menu)


@lru_cache(maxsize=None)
def _benefit(menu: Menu, pi: InfoStructure, inst: Instance) -> Fraction:
    total = Fraction(0)
    for posterior, weight in pi.support:
        total += weight * support_value(menu, posterior, inst)
    return total


def benefit_of_information(menu: Menu, pi: InfoStructure, inst: Instance) -> Value:
    """Expected value of the menu before learning, for the prediction *pi*.

    Averages the post-learning menu value over the posteriors that *pi*
    anticipates.  A singleton menu yields the expected utility of its act
    under the implied prior; a larger menu can only do better.
    """
    return _benefit(menu, pi, inst)


def mix_lotteries(x: Lottery, y: Lottery, alpha: RationalLike) -> Lottery:
    alpha = as_fraction(alpha)
    combined: dict[str, Fraction] = {}
    for prize, prob in x.probs:
        combined[prize] = combined.get(prize, Fraction(0)) + alpha * prob
    for prize, prob in y.probs:
        combined[prize] = combined.get(prize, Fraction(0)) + (1 - alpha) * prob
    return Lottery(combined)


def mix_acts(f: Act, g: Act, alpha: RationalLike) -> Act:
    """Statewise lottery mixture of two acts over the same states."""
    if set(f.states) != set(g.states):
        raise ValidationError("cannot mix acts defined over different state spaces")
    return Act({state: mix_lotteries(f.lottery(state), g.lottery(state), alpha) for state in f.states})


@lru_cache(maxsize=None)
def _mix_menus(F: Menu, G: Menu, alpha: Fraction) -> Menu:
    return Menu(tuple(mix_acts(f, g, alpha) for f in F for g in G))


def mix_menus(F: Menu, G: Menu, alpha: RationalLike) -> Menu:
    """The menu ``alpha F + (1 - alpha) G``: all pairwise act mixtures, deduplicated."""
    alpha = as_fraction(alpha)
    if not 0 <= alpha <= 1:
        raise BadWeightsError(f"mixture weight must lie in [0, 1], got {alpha}")
    return _mix_menus(F, G, alpha)


def randomize(F: Menu, betas: Sequence[RationalLike]) -> Menu:
    """The ex-post randomization of a menu over itself with the given weights.

    Builds the menu of all acts of the form ``sum_i beta_i f_i`` with each
    ``f_i`` drawn from *F*, by iterated pairwise mixing.  Members who
    maximize expected utility never need such randomizations, which is why
    criteria are expected to rank the result indifferent to *F*.
    """
    weights = [as_fraction(b) for b in betas]
    if not weights:
        raise BadWeightsError("randomization needs at least one weight")
    if any(w < 0 for w in weights):
        raise BadWeightsError(f"randomization weights must be nonnegative, got {weights}")
    if sum(weights) != 1:
        raise BadWeightsError(f"randomization weights sum to {sum(weights)}, expected exactly 1")
    # Right fold: tail holds the renormalized mixture of the components
    # processed so far, tail_weight their total mass.
    tail = F
    tail_weight = weights[-1]
    for w in reversed(weights[:-1]):
        new_weight = w + tail_weight
        if new_weight == 0:
            continue
        tail = mix_menus(F, tail, w / new_weight)
        tail_weight = new_weight
    return tail


def dominates(F: Menu, G: Menu, inst: Instance, *, strict: bool = False) -> bool:
    """Statewise dominance of menus.

    True when every act of *G* is covered by some act of *F* that is at
    least as good (``strict=True``: strictly better) in every single state.
    Dominance is decided on utilities, which is the outcome order once
    lotteries are ranked completely.
    """
    f_profiles = [
        tuple(inst.lottery_utility(f.lottery(state)) for state in inst.states) for f in F
    ]
    for g in G:
        g_profile = tuple(inst.lottery_utility(g.lottery(state)) for state in inst.states)
        covered = False
        for f_profile in f_profiles:
            if strict:
                ok = all(fv > gv for fv, gv in zip(f_profile, g_profile))
            else:
                ok = all(fv >= gv for fv, gv in zip(f_profile, g_profile))
            if ok:
                covered = True
                break
        if not covered:
            return False
    return True
