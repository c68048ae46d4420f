import sys

from lieschur.cli import main

sys.exit(main())
