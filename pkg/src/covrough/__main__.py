import sys

from covrough.cli import main

sys.exit(main())
