import sys

from pseudo_lindley.cli import main


if __name__ == "__main__":
    sys.exit(main())
