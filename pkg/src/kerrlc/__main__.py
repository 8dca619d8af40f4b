import sys

from kerrlc.cli import main

sys.exit(main())
