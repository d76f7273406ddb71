#!/usr/bin/env python
"""
K3 Syzygy Toolkit
Main entry point for the application
"""

from k3_syzygy.cli import main

if __name__ == "__main__":
    raise SystemExit(main())
