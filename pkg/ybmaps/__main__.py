import sys

from ybmaps.app import main

sys.exit(main())
