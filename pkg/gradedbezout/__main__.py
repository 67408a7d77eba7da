import sys

from gradedbezout.cli import main

sys.exit(main())
