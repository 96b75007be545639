import sys

from deephole.cli import main

sys.exit(main())
