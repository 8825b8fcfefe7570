"""Allow ``python -m tca_lab`` alongside the ``tca-lab`` script."""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
