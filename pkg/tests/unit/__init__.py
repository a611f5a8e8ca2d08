"""Unit tests for heunkit."""
