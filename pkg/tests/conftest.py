# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
""""General testing fixtures."""
import logging as deflogging  # Default logging

import numpy as np
import pytest

# Define default pytest logging level to DEBUG and stdout
from rotorchain import LOG
from rotorchain.clockops import ClockParams
from rotorchain.lindblad import BathConfig
from rotorchain.model import CCMParams, Variant

LOG.setLevel(level="DEBUG")
LOG.log_to_stdout()


def random_density_matrix(dimension: int, seed: int = 0, rank: int = None) -> np.ndarray:
    """Return a random full-rank (or given-rank) density matrix."""
    rng = np.random.default_rng(seed)
    rank = rank or dimension
    ginibre = rng.standard_normal((dimension, rank)) + 1j * rng.standard_normal((dimension, rank))
    rho = ginibre @ ginibre.conj().T
    return rho / np.trace(rho)


@pytest.fixture
def random_rho():
    """Factory of random density matrices."""
    return random_density_matrix


@pytest.fixture
def clock2() -> ClockParams:
    return ClockParams(2)


@pytest.fixture
def clock3() -> ClockParams:
    return ClockParams(3)


@pytest.fixture
def chain4() -> CCMParams:
    """Standard chain of four rotors with staggered phases pi/2."""
    return CCMParams.staggered(4, 0.5, np.pi / 2)


@pytest.fixture
def chain2() -> CCMParams:
    return CCMParams.staggered(2, 0.5, np.pi / 2)


@pytest.fixture
def rotated4() -> CCMParams:
    return CCMParams.staggered(4, 0.5, np.pi / 2, Variant.ROTATED)


@pytest.fixture
def baths4() -> BathConfig:
    return BathConfig.staggered(4, 1.0, 1.1, 0.2)


@pytest.fixture
def baths2() -> BathConfig:
    return BathConfig.staggered(2, 1.0, 1.1, 0.2)


@pytest.fixture
def fake_record():
    def inner_fake_record(
        logger,
        msg="This is a message",
        run_name="currents-f:ness-sweep",
        handler_index=0,
        name_logger=None,
        level=deflogging.DEBUG,
        filename="fn",
        lno=0,
        args=(),
        exc_info=None,
        extra={},
    ):
        """Function to fake log records using the format from the logger.

        Parameters
        ----------
        logger : logging.Logger
            A logger object with at least a handler.
        msg : str, default: "This is a message"
            Message to include in the log record.
        run_name : str, default: "currents-f:ness-sweep"
            Name of the run.
        handler_index : int, default: 0
            Index of the selected handler in case you want to test a handler different than
            the first one.
        level : int, default: deflogging.DEBUG
            Logging level.
        filename : str, default: fn
            Name of the file name. [FAKE].
        lno : int, default: 0
            Line where the fake log is recorded [FAKE].
        args : tuple, default: ()
            Other arguments.
        exc_info : [type], default: None
            Exception information.
        extra : dict, default: {}
            Extra arguments, one of them should be 'run_name'.

        Returns
        -------
        str
            The formatted message according to the handler.
        """
        sinfo = None
        if not name_logger:
            name_logger = logger.name

        extra = dict(extra)
        if "run_name" not in extra.keys():
            extra["run_name"] = run_name

        record = logger.makeRecord(
            name_logger,
            level,
            filename,
            lno,
            msg,
            args=args,
            exc_info=exc_info,
            extra=extra,
            sinfo=sinfo,
        )
        handler = logger.handlers[handler_index]
        return handler.format(record)

    return inner_fake_record
