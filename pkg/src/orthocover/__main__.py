import sys

from orthocover.cli import main

sys.exit(main())
