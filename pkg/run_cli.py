#!/usr/bin/env python3
"""
Run the Command-Line Front End
Entry script for homology, transfer and verification runs

Examples:
    python run_cli.py homology --dim-v 3
    python run_cli.py --json transfer --dim-v 3 --op m3 --args e1,e2,e3
    python run_cli.py verify --suite stasheff --dim-v 2 --up-to 4
"""

import os
import sys

# Add project root to Python path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from cli import main  # noqa: E402

if __name__ == '__main__':
    sys.exit(main())
