"""Rule catalogs for listing and explaining transformations."""

from __future__ import annotations

from typing import Any

from src.base.exceptions import UnknownRuleError
from src.hyper3f2.transforms import restricted_group
from src.kernel.params import GaussParams, HeunParams, Restricted3F2Params
from src.transforms.gauss import kummer_group
from src.transforms.heun import generate_hl_group
from src.transforms.render import explain_rule, render_rule
from src.transforms.rule import TransformRule
from src.transforms.signed_permutation import SignedPermutation

CATALOGS = ("gauss", "heun", "3f2")

PROBES: dict[str, Any] = {
    "gauss": GaussParams(0.3 + 0.1j, -0.7 + 0.2j, 1.4 - 0.3j),
    "heun": HeunParams(2.1 + 0.4j, 0.5 - 0.2j, 0.3 + 0.1j, -0.7 + 0.2j, 1.4 - 0.3j, 0.6 + 0.5j),
    "3f2": Restricted3F2Params(0.3 + 0.1j, -0.7 + 0.2j, 1.4 - 0.3j, 0.8 + 0.6j),
}
"""Generic parameters at which --explain prints P-symbols."""


def catalog(name: str, full: bool = False) -> list[TransformRule]:
    """Rules of a catalog; ``full`` adds the upper-parameter swap (B-type groups).

    Raises:
        UnknownRuleError: ``name`` is not a catalog.
    """
    if name == "gauss":
        return kummer_group(include_swap=True)
    if name == "heun":
        return generate_hl_group(include_swap=full)
    if name == "3f2":
        return restricted_group(include_swap=True)
    raise UnknownRuleError(f"unknown catalog {name!r}; choose from {list(CATALOGS)}", label=name)


def list_rules(name: str) -> str:
    """Label, generator word and formula of every rule in a catalog."""
    blocks = []
    for rule in catalog(name):
        word = " * ".join(rule.word) if rule.word else "identity"
        blocks.append(f"{rule.name}  [{word}]\n{render_rule(rule)}")
    return "\n\n".join(blocks)


def find_rule(text: str) -> tuple[str, TransformRule]:
    """Resolve ``[family:]label`` to (family, rule).

    Without a family prefix, labels mentioning ``a`` are Heun labels and the
    rest are Gauss labels.

    Raises:
        UnknownRuleError: The label is malformed or names no catalog rule.
    """
    family, _, label = text.rpartition(":")
    if not family:
        family = "heun" if "a" in label else "gauss"
    rules = catalog(family, full=True)
    wanted = SignedPermutation.parse(label, rules[0].family.points)
    for rule in rules:
        if rule.label == wanted:
            return family, rule
    raise UnknownRuleError(f"no {family} rule with label {label}", label=text)


def explain(text: str) -> str:
    family, rule = find_rule(text)
    return explain_rule(rule, PROBES[family])
