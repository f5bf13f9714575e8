"""Allow `python -m absub`."""

from .cli import entry

if __name__ == "__main__":
    entry()
