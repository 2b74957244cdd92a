import sys

from minorder.cli import main

sys.exit(main())
