"""
Entry point for running cubiq from a source checkout
"""

import os
import sys

# Add src directory to path
sys.path.append(os.path.join(os.path.dirname(__file__), "src"))

from cubiq.cli import main  # noqa: E402

if __name__ == "__main__":
    main()
