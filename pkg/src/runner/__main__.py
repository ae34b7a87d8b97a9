import sys

from src.runner.cli import main

sys.exit(main())
