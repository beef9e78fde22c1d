# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Run the ``rotorchain`` command with ``python -m rotorchain``."""

import sys

from rotorchain.cli.main import main

sys.exit(main())
