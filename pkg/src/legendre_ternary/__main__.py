import sys

from legendre_ternary.cli import main

sys.exit(main())
