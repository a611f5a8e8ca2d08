"""Unit tests for the rule catalogs."""

import pytest

from src.base.exceptions import UnknownRuleError
from src.verifier.catalog import catalog, explain, find_rule, list_rules


@pytest.mark.unit
class TestCatalog:
    """Tests for catalog and list_rules."""

    @pytest.mark.parametrize(
        ("name", "full", "size"),
        [("gauss", False, 8), ("heun", False, 24), ("heun", True, 48), ("3f2", False, 8)],
    )
    def test_sizes(self, name: str, full: bool, size: int) -> None:
        assert len(catalog(name, full=full)) == size

    def test_unknown(self) -> None:
        with pytest.raises(UnknownRuleError):
            catalog("4f3")

    def test_list_gauss(self) -> None:
        text = list_rules("gauss")
        blocks = text.split("\n\n")
        assert len(blocks) == 8
        assert blocks[0].startswith("[1+][inf+]  [identity]")
        assert "[1+inf+]  [pfaff]" in text


@pytest.mark.unit
class TestFindRule:
    """Tests for find_rule and explain."""

    def test_gauss_default(self) -> None:
        family, rule = find_rule("[1+inf+]")
        assert family == "gauss"
        assert rule.word == ("pfaff",)

    def test_heun_by_letter(self) -> None:
        family, rule = find_rule("[1+][a+][inf+]")
        assert family == "heun"
        assert rule.label.is_identity

    def test_family_prefix(self) -> None:
        family, rule = find_rule("3f2:[1+inf+]")
        assert family == "3f2"
        assert rule.family.name == "3f2"

    def test_incomplete_label(self) -> None:
        with pytest.raises(UnknownRuleError):
            find_rule("[1+a+]")

    def test_explain(self) -> None:
        text = explain("[1+inf+]")
        assert text.splitlines()[0] == "rule [1+inf+] (gauss)"
        assert "source P-symbol:" in text
