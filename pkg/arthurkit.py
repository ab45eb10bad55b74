#!/usr/bin/env python3
"""
Command-line entry point for the arthurkit calculator.
"""

from src.cli import main

if __name__ == "__main__":
    main()
