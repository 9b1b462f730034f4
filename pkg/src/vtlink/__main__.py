# MIT License: Copyright (c) 2026, the vtlink developers.
# See the LICENSE file in the root directory for full license text.

import sys

from .cli import main

sys.exit(main())
