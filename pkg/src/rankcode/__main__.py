import sys
from rankcode.cli import main

sys.exit(main())
