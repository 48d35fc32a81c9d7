"""Allow ``python -m instanton3``."""

from .cli import entry

if __name__ == "__main__":
    entry()
