"""Print one PASS/FAIL line per acceptance criterion; exit 1 if any fails."""
import sys

from cablecalc.acceptance import main

if __name__ == "__main__":
    sys.exit(main())
