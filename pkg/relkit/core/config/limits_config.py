"""Sanity checks for the configured materialization limits."""
import logfire

from relkit.core.config.general_config import Limits

# 2**POWERSET_LIMIT subsets are materialized, keep it modest
MAX_SENSIBLE_POWERSET = 24
# the von Neumann tower doubles in size per step
MAX_SENSIBLE_ORDINAL = 16


class LimitsConfig:
    """Validation of a resolved Limits object."""

    @classmethod
    def validate(cls, limits: Limits, strict: bool = False) -> None:
        """
        Validate that the limits are usable.

        Args:
            limits: The limits to check.
            strict: If True, raise on problems. If False, only log warnings.
        """
        errors = []

        for name in ("powerset", "ordinal", "functions", "cart", "relation"):
            value = getattr(limits, name)
            if value < 0:
                errors.append(f"{name} limit must not be negative (got {value})")

        if limits.powerset > MAX_SENSIBLE_POWERSET:
            msg = (
                f"Powerset limit {limits.powerset} allows 2^{limits.powerset} subsets. "
                f"Consider RELKIT_POWERSET_LIMIT <= {MAX_SENSIBLE_POWERSET}."
            )
            if strict:
                errors.append(msg)
            else:
                logfire.warning(f"Warning: {msg}")

        if limits.ordinal > MAX_SENSIBLE_ORDINAL:
            msg = f"Ordinal limit {limits.ordinal} builds sets of size 2^{limits.ordinal}."
            if strict:
                errors.append(msg)
            else:
                logfire.warning(f"Warning: {msg}")

        if errors:
            for e in errors:
                logfire.error(f"Invalid limit configuration: {e}")
            if strict or any("negative" in e for e in errors):
                raise ValueError(f"Invalid relkit limit configuration: {', '.join(errors)}")
