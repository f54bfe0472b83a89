#!/usr/bin/env python3
"""
Regenerate the bundled complex description files in data/complexes/.

Usage:
    python scripts/build_complexes.py            # Write the standard set
    python scripts/build_complexes.py --list     # Show what would be written
    python scripts/build_complexes.py --extra    # Also write the oracle-suite complexes
"""

import argparse
import sys
from pathlib import Path

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from inducedym.cellcomplex import build_closed_surface, build_hypercubic, build_polygon, save_complex
from inducedym.config import Config
from inducedym.logging import get_logger, setup_logging

logger = get_logger(__name__)

STANDARD = {
    "plaquette": lambda: build_hypercubic((1, 1), False, name="plaquette"),
    "torus2x2": lambda: build_hypercubic((2, 2), True, name="torus2x2"),
}

EXTRA = {
    "shared_pair": lambda: build_hypercubic((2, 1), False, name="shared_pair"),
    "open2x2": lambda: build_hypercubic((2, 2), False, name="open2x2"),
    "cube": lambda: build_hypercubic((1, 1, 1), False, name="cube"),
    "monogon": lambda: build_polygon(1, name="monogon"),
    "sphere": lambda: build_closed_surface(0, name="sphere"),
    "genus1": lambda: build_closed_surface(1, name="genus1"),
}


def main():
    parser = argparse.ArgumentParser(description="Regenerate bundled complex files")
    parser.add_argument("--list", action="store_true", help="List files without writing")
    parser.add_argument("--extra", action="store_true", help="Include the oracle-suite complexes")
    parser.add_argument("--out-dir", type=Path, default=Config.COMPLEX_DIR, help="Target directory")
    args = parser.parse_args()

    setup_logging(Config.LOG_LEVEL)
    builders = dict(STANDARD)
    if args.extra:
        builders.update(EXTRA)

    for name, build in builders.items():
        target = args.out_dir / f"{name}.json"
        if args.list:
            print(target)
            continue
        complex_ = build()
        save_complex(complex_, target)
        logger.info(
            "Wrote %s (%d sites, %d links, %d plaquettes)",
            target, complex_.n_sites, complex_.n_links, complex_.n_plaquettes,
        )


if __name__ == "__main__":
    main()
