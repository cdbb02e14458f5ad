#!/usr/bin/env python3
"""
Simple entry point for non-Lefschetz locus analysis
"""

import sys
import os

# Add the current directory to Python path
sys.path.append(os.path.dirname(__file__))

from leflab.run_locus_analysis import main

if __name__ == "__main__":
    sys.exit(main())
