#!/usr/bin/env python3
"""
bunch: two-photon bunching parameter simulator.

Thin launcher so the CLI runs from a checkout without installing anything.
See bunchkit/cli.py for the commands.
"""

import sys
from pathlib import Path

# Ensure project root is on path
PROJECT_ROOT = Path(__file__).parent.resolve()
sys.path.insert(0, str(PROJECT_ROOT))

from bunchkit.cli import main  # noqa: E402

if __name__ == '__main__':
    sys.exit(main())
