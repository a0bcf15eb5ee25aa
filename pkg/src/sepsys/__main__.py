import sys

from sepsys.cli import main

sys.exit(main())
