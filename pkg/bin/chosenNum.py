"""
Runs the chosennum command line without installing the package, e.g.

    python bin/chosenNum.py seq build --method greedy --bound 100 --c 1/2 --out g.json
    python bin/chosenNum.py coverage --seq g.json --x 1 --y 100
"""
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), ".."))

from DiophTools.bin.cli import main

if __name__ == "__main__":
    sys.exit(main())
