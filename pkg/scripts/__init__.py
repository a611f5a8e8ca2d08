"""Developer scripts for heunkit."""
