"""Entry point for ``python -m fourfree``."""

from .cli import main_entry

main_entry()
