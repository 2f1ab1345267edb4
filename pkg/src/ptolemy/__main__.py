import sys

from ptolemy.cli import main

sys.exit(main())
