"""
Development runner.

This file is only for running from a source checkout.
When installed, use: cohphase <command> [options]
"""

import sys

from cohphase.main import main


if __name__ == "__main__":
    sys.exit(main())
