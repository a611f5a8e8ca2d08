"""End-to-end tests of the heunkit command line."""
