#!/usr/bin/env python3
"""
thermodarboux - thermodynamic actions and their Darboux families
Main entry point for the command-line tool.
"""

import sys

from thermodarboux.cli import main

if __name__ == "__main__":
    sys.exit(main())
