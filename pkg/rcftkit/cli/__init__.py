"""Command-line front end, client of the application layer."""
