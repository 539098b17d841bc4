import os
import sys

ROOT_DIR = os.path.dirname(os.path.abspath(__file__))
if ROOT_DIR not in sys.path:
    sys.path.append(ROOT_DIR)

from ybmaps.app import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
