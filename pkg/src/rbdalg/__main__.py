import sys

from rbdalg.cli import main

sys.exit(main())
