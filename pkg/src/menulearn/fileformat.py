"""Instance documents: a JSON schema for decision environments.

A document carries one instance plus named menus, information structures,
credal sets, and collections:

.. code-block:: json

    {
      "states": ["w1", "w2"],
      "prizes": ["win", "lose"],
      "utility": {"win": "3", "lose": "0"},
      "menus": {"f": [{"w1": {"win": "2/3", "lose": "1/3"}, "w2": {...}}]},
      "info_structures": {
        "pi": [{"posterior": {"w1": "1"}, "weight": "1/2"},
               {"posterior": {"w2": "1"}, "weight": "1/2"}]
      },
      "credal_sets": {"Pi": ["delta_p", "pi"]},
      "collections": {"split": [["delta_p"], ["pi"]], "hull": ["Pi"]}
    }

All rationals are "p/q" strings (or plain integer strings), never floats,
so a parse -> serialize -> parse round trip reproduces the document's
objects exactly.  Collection members may name a credal set or inline a
list of information-structure names.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Mapping

from .core import (
    Act,
    Collection,
    CredalSet,
    Instance,
    InfoStructure,
    Lottery,
    Menu,
    Posterior,
)
from .errors import MenuLearnError, ParseError, UnknownNameError


def parse_fraction(text: object, where: str) -> Fraction:
    """Parse an exact rational from a "p/q" or integer string."""
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"{where}: expected a rational string like '3/4', got {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"{where}: malformed rational {text!r} ({exc})") from None


def format_fraction(value: Fraction) -> str:
    return str(value)


@dataclass
class Workspace:
    """A parsed instance document with name lookups for every object kind."""

    instance: Instance
    menus: dict[str, Menu] = field(default_factory=dict)
    info_structures: dict[str, InfoStructure] = field(default_factory=dict)
    credal_sets: dict[str, CredalSet] = field(default_factory=dict)
    collections: dict[str, Collection] = field(default_factory=dict)

    def menu(self, name: str) -> Menu:
        return _lookup(self.menus, name, "menu")

    def info_structure(self, name: str) -> InfoStructure:
        return _lookup(self.info_structures, name, "information structure")

    def credal_set(self, name: str) -> CredalSet:
        return _lookup(self.credal_sets, name, "credal set")

    def collection(self, name: str) -> Collection:
        return _lookup(self.collections, name, "collection")

    def structure_label(self, structure: InfoStructure) -> str:
        """The document name of a structure, or a compact inline rendering."""
        for name, candidate in self.info_structures.items():
            if candidate == structure:
                return name
        parts = [f"{dict(p.probs)}@{w}" for p, w in structure.support]
        return "{" + ", ".join(parts) + "}"


def _lookup(table: Mapping[str, object], name: str, kind: str):
    if name not in table:
        known = ", ".join(sorted(table)) or "none defined"
        raise UnknownNameError(f"unknown {kind} {name!r} (known: {known})")
    return table[name]


def _parse_distribution(data: object, where: str) -> dict[str, Fraction]:
    if not isinstance(data, dict):
        raise ParseError(f"{where}: expected an object mapping labels to rationals")
    return {label: parse_fraction(raw, f"{where}.{label}") for label, raw in data.items()}


def _parse_act(data: object, states: tuple[str, ...], where: str) -> Act:
    if not isinstance(data, dict):
        raise ParseError(f"{where}: expected an object mapping states to lotteries")
    unknown = set(data) - set(states)
    if unknown:
        raise ParseError(f"{where}: unknown states {sorted(unknown)}")
    missing = set(states) - set(data)
    if missing:
        raise ParseError(f"{where}: missing states {sorted(missing)}")
    outcomes = {}
    for state, lottery_data in data.items():
        probs = _parse_distribution(lottery_data, f"{where}.{state}")
        outcomes[state] = _wrap(Lottery, probs, f"{where}.{state}")
    return _wrap(Act, outcomes, where)


def _wrap(ctor, payload, where: str):
    try:
        return ctor(payload)
    except MenuLearnError as exc:
        raise ParseError(f"{where}: {exc}") from None


def load_document(data: object) -> Workspace:
    """Build a workspace from a parsed JSON document, validating everything."""
    if not isinstance(data, dict):
        raise ParseError("document root must be a JSON object")
    for key in ("states", "prizes", "utility"):
        if key not in data:
            raise ParseError(f"document is missing the required section {key!r}")
    states = _parse_labels(data["states"], "states")
    prizes = _parse_labels(data["prizes"], "prizes")
    utility = {
        prize: parse_fraction(raw, f"utility.{prize}")
        for prize, raw in _expect_object(data["utility"], "utility").items()
    }
    try:
        instance = Instance(states=states, prizes=prizes, utility=utility)
    except MenuLearnError as exc:
        raise ParseError(f"invalid instance: {exc}") from None

    workspace = Workspace(instance=instance)

    for name, acts_data in _expect_object(data.get("menus", {}), "menus").items():
        if not isinstance(acts_data, list):
            raise ParseError(f"menus.{name}: expected a list of acts")
        acts = [
            _parse_act(act_data, instance.states, f"menus.{name}[{i}]")
            for i, act_data in enumerate(acts_data)
        ]
        workspace.menus[name] = _wrap(Menu, tuple(acts), f"menus.{name}")
        for act in workspace.menus[name]:
            for _, lottery in act.outcomes:
                _check_prizes(lottery, instance, f"menus.{name}")

    for name, support_data in _expect_object(
        data.get("info_structures", {}), "info_structures"
    ).items():
        if not isinstance(support_data, list):
            raise ParseError(f"info_structures.{name}: expected a list of support points")
        support = []
        for i, point in enumerate(support_data):
            where = f"info_structures.{name}[{i}]"
            if not isinstance(point, dict) or "posterior" not in point or "weight" not in point:
                raise ParseError(f"{where}: expected an object with 'posterior' and 'weight'")
            probs = _parse_distribution(point["posterior"], f"{where}.posterior")
            unknown = set(probs) - set(instance.states)
            if unknown:
                raise ParseError(f"{where}: posterior over unknown states {sorted(unknown)}")
            posterior = _wrap(Posterior, probs, f"{where}.posterior")
            weight = parse_fraction(point["weight"], f"{where}.weight")
            support.append((posterior, weight))
        workspace.info_structures[name] = _wrap(
            InfoStructure, tuple(support), f"info_structures.{name}"
        )

    for name, generator_names in _expect_object(
        data.get("credal_sets", {}), "credal_sets"
    ).items():
        if not isinstance(generator_names, list):
            raise ParseError(f"credal_sets.{name}: expected a list of structure names")
        generators = [
            _resolve_structure(workspace, gen_name, f"credal_sets.{name}")
            for gen_name in generator_names
        ]
        workspace.credal_sets[name] = _wrap(CredalSet, tuple(generators), f"credal_sets.{name}")

    for name, member_list in _expect_object(
        data.get("collections", {}), "collections"
    ).items():
        if not isinstance(member_list, list):
            raise ParseError(f"collections.{name}: expected a list of members")
        members = []
        for i, member in enumerate(member_list):
            where = f"collections.{name}[{i}]"
            if isinstance(member, str):
                if member not in workspace.credal_sets:
                    raise ParseError(f"{where}: unknown credal set {member!r}")
                members.append(workspace.credal_sets[member])
            elif isinstance(member, list):
                generators = [
                    _resolve_structure(workspace, gen_name, where) for gen_name in member
                ]
                members.append(_wrap(CredalSet, tuple(generators), where))
            else:
                raise ParseError(
                    f"{where}: member must be a credal-set name or a list of structure names"
                )
        workspace.collections[name] = _wrap(Collection, tuple(members), f"collections.{name}")

    return workspace


def _resolve_structure(workspace: Workspace, name: object, where: str) -> InfoStructure:
    if not isinstance(name, str):
        raise ParseError(f"{where}: expected an information-structure name, got {name!r}")
    if name not in workspace.info_structures:
        raise ParseError(f"{where}: unknown information structure {name!r}")
    return workspace.info_structures[name]


def _parse_labels(data: object, where: str) -> tuple[str, ...]:
    if not isinstance(data, list) or not all(isinstance(x, str) for x in data):
        raise ParseError(f"{where}: expected a list of strings")
    return tuple(data)


def _expect_object(data: object, where: str) -> dict:
    if not isinstance(data, dict):
        raise ParseError(f"{where}: expected a JSON object")
    return data


def _check_prizes(lottery: Lottery, instance: Instance, where: str) -> None:
    unknown = set(lottery.support) - set(instance.prizes)
    if unknown:
        raise ParseError(f"{where}: lottery over unknown prizes {sorted(unknown)}")


def loads(text: str) -> Workspace:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return load_document(data)


def load_path(path: str | Path) -> Workspace:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return loads(text)


def dump_document(workspace: Workspace) -> dict:
    """Serialize a workspace back to the document schema (exact rationals)."""
    inst = workspace.instance
    document: dict = {
        "states": list(inst.states),
        "prizes": list(inst.prizes),
        "utility": {prize: format_fraction(value) for prize, value in inst.utility},
    }
    if workspace.menus:
        document["menus"] = {
            name: [
                {
                    state: {z: format_fraction(p) for z, p in lottery.probs}
                    for state, lottery in act.outcomes
                }
                for act in menu
            ]
            for name, menu in workspace.menus.items()
        }
    if workspace.info_structures:
        document["info_structures"] = {
            name: [
                {
                    "posterior": {s: format_fraction(p) for s, p in posterior.probs},
                    "weight": format_fraction(weight),
                }
                for posterior, weight in structure.support
            ]
            for name, structure in workspace.info_structures.items()
        }
    if workspace.credal_sets:
        document["credal_sets"] = {
            name: [workspace.structure_label(gen) for gen in credal]
            for name, credal in workspace.credal_sets.items()
        }
    if workspace.collections:
        named_sets = {credal: name for name, credal in workspace.credal_sets.items()}
        document["collections"] = {
            name: [
                named_sets[member]
                if member in named_sets
                else [workspace.structure_label(gen) for gen in member]
                for member in collection
            ]
            for name, collection in workspace.collections.items()
        }
    return document


def dumps(workspace: Workspace) -> str:
    return json.dumps(dump_document(workspace), indent=2)
