import sys

from trisum.cli import main

sys.exit(main())
