import sys

from blore.cli import main

sys.exit(main())
