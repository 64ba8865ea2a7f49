import pytest

from relkit.core.config import Limits, LimitsConfig, Settings
from relkit.core.config.general_config import load_settings
from relkit.core.errors import ConfigError


def test_defaults(monkeypatch):
    monkeypatch.delenv("RELKIT_LIMIT", raising=False)
    limits = Settings().limits
    assert limits == Limits()
    assert limits.powerset == 20 and limits.cart == 10**6


@pytest.mark.parametrize("raw, expected", [("1000", 1000), ("1e6", 10**6), ("10**4", 10**4), ("1_000", 1000)])
def test_limit_override_replaces_element_count_limits(monkeypatch, raw, expected):
    monkeypatch.setenv("RELKIT_LIMIT", raw)
    limits = Settings().limits
    assert limits.cart == limits.relation == limits.functions == expected
    assert limits.powerset == 20 and limits.ordinal == 10


def test_output_format_from_environment(monkeypatch):
    monkeypatch.setenv("RELKIT_OUTPUT_FORMAT", "csv")
    assert Settings().OUTPUT_FORMAT == "csv"


def test_limits_validation():
    LimitsConfig.validate(Limits())
    LimitsConfig.validate(Limits(powerset=30))
    with pytest.raises(ValueError):
        LimitsConfig.validate(Limits(powerset=30), strict=True)
    with pytest.raises(ValueError):
        LimitsConfig.validate(Limits(cart=-1))


@pytest.mark.parametrize("raw", ["abc", "10**x", "inf"])
def test_malformed_limit_is_reported_not_raised(monkeypatch, raw):
    monkeypatch.setenv("RELKIT_LIMIT", raw)
    loaded, error = load_settings()
    assert isinstance(error, ConfigError)
    assert "RELKIT_LIMIT" in str(error) and raw in str(error)
    assert loaded.limits == Limits()


def test_wellformed_settings_have_no_error(monkeypatch):
    monkeypatch.setenv("RELKIT_LIMIT", "500")
    loaded, error = load_settings()
    assert error is None
    assert loaded.limits.cart == 500
