"""CLI package: argument parsing, configuration, command handlers and output rendering."""
