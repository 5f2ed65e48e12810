"""Tests for the persistent constant store."""

from __future__ import annotations

import pytest

from mahlerzeta.store import STORE_ENV_VAR, ConstantStore


def test_round_trip(tmp_path) -> None:
    path = tmp_path / "constants.txt"
    store = ConstantStore(path)
    assert len(store) == 0
    store.put("zeta", 3, 30, "1.202056903159594285399738161511")
    store.put("l3_ii", 1, 16, "2.827116561355353848")
    store.save()
    reloaded = ConstantStore(path)
    assert len(reloaded) == 2
    assert reloaded.get("zeta", 3, 30) == "1.202056903159594285399738161511"
    assert reloaded.get("l3_ii", 1, 10) == "2.827116561355353848"
    assert reloaded.entries() == [
        ("l3_ii", 1, 16, "2.827116561355353848"),
        ("zeta", 3, 30, "1.202056903159594285399738161511"),
    ]


def test_get_requires_enough_digits(tmp_path) -> None:
    store = ConstantStore(tmp_path / "c.txt")
    store.put("zeta", 5, 20, "1.03692775514336993")
    assert store.get("zeta", 5, 20) is not None
    assert store.get("zeta", 5, 21) is None
    assert store.get("zeta", 7, 5) is None


def test_put_keeps_higher_precision(tmp_path) -> None:
    store = ConstantStore(tmp_path / "c.txt")
    store.put("zeta", 3, 30, "high-precision")
    store.put("zeta", 3, 10, "low-precision")
    assert store.get("zeta", 3, 10) == "high-precision"
    store.put("zeta", 3, 40, "higher")
    assert store.get("zeta", 3, 40) == "higher"


def test_rejects_foreign_format(tmp_path) -> None:
    path = tmp_path / "c.txt"
    path.write_text("some-other-format 7\nzeta 3 10 1.2\n")
    with pytest.raises(ValueError):
        ConstantStore(path)
    path.write_text("mahlerzeta-constants 1\nzeta 3 10\n")
    with pytest.raises(ValueError):
        ConstantStore(path)


def test_env_var_overrides_default_path(tmp_path, monkeypatch) -> None:
    target = tmp_path / "via-env.txt"
    monkeypatch.setenv(STORE_ENV_VAR, str(target))
    assert ConstantStore.default_path() == target
    store = ConstantStore()
    store.put("log2", 0, 10, "0.6931471806")
    store.save()
    assert target.exists()
    monkeypatch.delenv(STORE_ENV_VAR)
    assert ConstantStore.default_path().name == "constants.txt"
