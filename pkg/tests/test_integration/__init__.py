"""Integration tests for thermodarboux."""
