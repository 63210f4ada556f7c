#!/usr/bin/env python3
"""
Entry point for running rigidity as a module: python -m rigidity
"""

import sys
from .rigidity import main

if __name__ == "__main__":
    sys.exit(main())
