#!/usr/bin/env python3
"""
Run the inducedym command-line toolkit.

Usage:
    python run.py --help                          # List commands
    python run.py oneplaq --nc 3 --nb 2 --alpha-b 0.4
    python run.py dual --complex torus2x2.json --alpha 0.3 --nmax 12
    python run.py --check                         # Validate configuration only
"""

import sys
from pathlib import Path

# Add project root to path for imports
sys.path.insert(0, str(Path(__file__).parent))


def main() -> int:
    if "--check" in sys.argv[1:]:
        from inducedym.config import Config

        errors = Config.validate()
        for err in errors:
            print(f"Config error: {err}", file=sys.stderr)
        if not errors:
            Config.ensure_data_dir()
            print(f"Configuration OK (precision {Config.PRECISION} digits, {Config.THREADS} threads)")
        return 1 if errors else 0

    try:
        from inducedym.cli import main as cli_main
    except ImportError as e:
        print(f"Missing dependency: {e}", file=sys.stderr)
        print("Run: pip install -r requirements.txt", file=sys.stderr)
        return 1
    return cli_main(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
