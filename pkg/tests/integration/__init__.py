"""Integration tests for heunkit."""
