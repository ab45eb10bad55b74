from .app import Commands, build_parser, configure_logging, run, main

__all__ = ['Commands', 'build_parser', 'configure_logging', 'run', 'main']
