"""Entry point for python -m blockweyl."""
import sys

from .cli import main

raise SystemExit(main(sys.argv[1:]))
