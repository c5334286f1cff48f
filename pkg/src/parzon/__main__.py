"""python -m parzon delegates to the CLI."""

from .cli import entry

if __name__ == "__main__":
    entry()
