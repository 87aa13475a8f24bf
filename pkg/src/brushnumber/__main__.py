import sys

from brushnumber.cli import main

sys.exit(main())
