"""Identity verification suites."""
