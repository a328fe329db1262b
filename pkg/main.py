import os
import sys

# Add the project root to the path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from src.cli import run

if __name__ == "__main__":
    raise SystemExit(run(sys.argv[1:]))
