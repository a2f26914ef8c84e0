import sys

from tropreal.cli import main

sys.exit(main())
