import sys

from netlevels.cli import main

sys.exit(main())
