import sys

from digit_ecc.cli import main

if __name__ == "__main__":
    sys.exit(main())
