"""Run every reproduction check and print one line per criterion."""
import sys

from latpoly.cli import main

if __name__ == "__main__":
    sys.exit(main(["verify"] + sys.argv[1:]))
