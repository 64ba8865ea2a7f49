"""Configuration modules."""
from relkit.core.config.general_config import Limits, Settings, settings
from relkit.core.config.limits_config import LimitsConfig

__all__ = ["Limits", "LimitsConfig", "Settings", "settings"]
