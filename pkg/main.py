"""
Entry point for running crcartan from a checkout.

    python main.py verify --suite all --seed 42
"""

import sys

from cli.main import main

if __name__ == "__main__":
    sys.exit(main())
