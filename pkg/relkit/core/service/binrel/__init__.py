"""Binary relations."""
