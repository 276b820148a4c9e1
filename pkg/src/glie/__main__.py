import sys

from glie.cli import main

sys.exit(main())
