import sys

from prefdist.main import main

sys.exit(main())
