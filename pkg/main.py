"""
Point d'entrée principal : python main.py <verbe> [options]
"""
import sys

from cli import run
from setup_encoding import setup_utf8_encoding

if __name__ == "__main__":
    setup_utf8_encoding()
    sys.exit(run(sys.argv[1:]))
