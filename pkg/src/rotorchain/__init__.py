# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""rotorchain simulates dissipative chains of quantum clock rotors."""

# Version
# ------------------------------------------------------------------------------

import importlib.metadata as importlib_metadata

__version__ = importlib_metadata.version(__name__)
"""rotorchain version."""

# Ease import statements
# ------------------------------------------------------------------------------

from rotorchain.clockops import ClockParams, ManyBodyOperator
from rotorchain.groundstate import ground_state, lowest_eigenpairs
from rotorchain.infotheory import global_discord, information_measures
from rotorchain.lindblad import BathConfig, build_liouvillian, build_ness, steady_state
from rotorchain.logger import LOG
from rotorchain.model import CCMParams, Variant, build_hamiltonian
from rotorchain.observables import heat_currents, steady_currents
