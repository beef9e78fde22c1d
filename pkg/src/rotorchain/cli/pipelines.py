# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides the per-point pipelines of the sweeps and their parallel orchestration."""

from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from functools import reduce
from operator import add
import time

from beartype.typing import Callable, Optional
import numpy as np

from rotorchain.cli.config import PointParams, SweepConfig
from rotorchain.cli.records import SweepRecord
from rotorchain.errors import RotorChainError
from rotorchain.groundstate.currents import ground_state_currents
from rotorchain.groundstate.order import binder_cumulant, order_parameter_moments
from rotorchain.groundstate.spectrum import ground_state
from rotorchain.infotheory.discord import global_discord
from rotorchain.infotheory.measures import information_measures
from rotorchain.lindblad.steady import DensityMatrix, build_ness
from rotorchain.logger import LOG
from rotorchain.misc.defaults import DEFAULT_WORKERS
from rotorchain.model.hamiltonian import build_hamiltonian
from rotorchain.model.params import Variant
from rotorchain.observables.currents import (
    mean_square_current,
    steady_currents,
    thermal_current_operator,
    tunneling_current_operator,
)
from rotorchain.observables.heat import heat_currents, sublattice_sums
from rotorchain.observables.susceptibility import current_susceptibility

NESS_SWEEP = "ness-sweep"
GROUND_SWEEP = "ground-sweep"
DISCORD = "discord"

POINT_ERRORS = (RotorChainError, ValueError, ArithmeticError, MemoryError)
"""Failures recorded per point without stopping the sweep."""


@dataclass
class SweepRun:
    """Named sweep run, stamped into the records of its logger."""

    name: str
    command: str

    def get_name(self) -> str:
        """Return the run name."""
        return f"{self.name}:{self.command}"


def _information_values(rho, point: PointParams, config: SweepConfig) -> dict:
    values = {}
    clock = point.model().clock
    if config.measures.information:
        partition = config.measures.partition_for(point.M)
        values.update(information_measures(rho, clock, partition).to_dict())
    if config.measures.discord:
        values["G"] = global_discord(rho, clock, config.anneal).value
    return values


def _total_operator(operators: list):
    return reduce(add, operators)


def evaluate_ness_point(point: PointParams, config: SweepConfig) -> tuple:
    """Solve the steady state of one point and evaluate its observables.

    Returns
    -------
    tuple
        ``(values, details)`` dictionaries of the :class:`SweepRecord`.
    """
    params, baths = point.model(), point.baths()
    solution = build_ness(params, baths, config.solver)
    rho = solution.rho
    currents = steady_currents(
        rho,
        solution.split,
        solution.transitions,
        check_independence=params.variant is Variant.STANDARD,
    )
    heat = heat_currents(rho, solution.split, solution.liouvillian, baths)
    sites = range(1, params.M + 1)
    total_tun = _total_operator(
        [tunneling_current_operator(solution.split, m, 0, 1) for m in sites]
    )
    total_th = _total_operator(
        [thermal_current_operator(solution.transitions, m, 0, 1) for m in sites]
    )
    tun_even, tun_odd = sublattice_sums(currents.per_rotor_tun)
    th_even, th_odd = sublattice_sums(currents.per_rotor_th)
    qd_even, qd_odd = heat.qdot_d_sublattices
    qnd_even, qnd_odd = heat.qdot_nd_sublattices
    q_even, q_odd = sublattice_sums(heat.qdot_standard)

    values = {
        "J_tun_total": currents.total_tun,
        "J_th_total": currents.total_th,
        "J_tun_even": tun_even,
        "J_tun_odd": tun_odd,
        "J_th_even": th_even,
        "J_th_odd": th_odd,
        "J2_tun": mean_square_current(rho, total_tun),
        "J2_th": mean_square_current(rho, total_th),
        "Qd_even": qd_even,
        "Qd_odd": qd_odd,
        "Qnd_even": qnd_even,
        "Qnd_odd": qnd_odd,
        "Q_even": q_even,
        "Q_odd": q_odd,
        "entropy_production": heat.entropy_production,
        "residual": solution.result.residual,
        "method": solution.result.method,
    }
    values.update(_information_values(rho, point, config))
    if config.measures.susceptibility:
        response = current_susceptibility(
            params,
            baths,
            config.measures.susceptibility_step,
            config.measures.partition_for(params.M),
            config.solver,
        )
        values.update({"chi_J": response.current, "chi_I": response.mutual_information})
    details = {"currents": currents.to_dict(), "heat": heat.to_dict()}
    return values, details


def evaluate_ground_point(point: PointParams, config: SweepConfig) -> tuple:
    """Diagonalize one point and evaluate its ground-state observables."""
    params = point.model()
    split = build_hamiltonian(params)
    spectrum = ground_state(split, k=config.eigenpairs)
    state = spectrum.ground_state
    m2, m4 = order_parameter_moments(state, params)
    values = {
        "sector": spectrum.sector.value,
        "E0": spectrum.ground_energy,
        "gap": spectrum.gap if spectrum.energies.size > 1 else None,
        "degeneracy": spectrum.degeneracy,
        "m2": m2,
        "m4": m4,
        "B": binder_cumulant(m2, m4) if m2 > 0 else None,
    }
    details = {"energies": spectrum.energies.tolist()}
    if params.variant is Variant.ROTATED:
        per_rotor = ground_state_currents(split)
        even, odd = sublattice_sums(per_rotor)
        values.update({"J_tun_even": even, "J_tun_odd": odd})
        details["per_rotor_tun"] = list(per_rotor)
    if config.measures.information or config.measures.discord:
        values.update(_information_values(DensityMatrix.from_pure(state), point, config))
    return values, details


def evaluate_discord_point(point: PointParams, config: SweepConfig) -> tuple:
    """Minimize the global discord of the steady state or of the ground state of one point."""
    if config.discord_state == "ness":
        rho = build_ness(point.model(), point.baths(), config.solver).rho
    else:
        rho = DensityMatrix.from_pure(ground_state(point.model(), k=1).ground_state)
    result = global_discord(rho, point.model().clock, config.anneal)
    restarts = np.asarray(result.restart_values)
    values = {
        "state": config.discord_state,
        "G": result.value,
        "G_restart_mean": float(restarts.mean()),
        "G_restart_max": float(restarts.max()),
        "converged": result.converged,
    }
    return values, {"discord": result.to_dict()}


EVALUATORS = {
    NESS_SWEEP: evaluate_ness_point,
    GROUND_SWEEP: evaluate_ground_point,
    DISCORD: evaluate_discord_point,
}


def run_point(command: str, index: int, point: PointParams, config: SweepConfig) -> SweepRecord:
    """Evaluate one grid point, turning a numerical failure into a failed record."""
    start = time.perf_counter()
    try:
        values, details = EVALUATORS[command](point, config)
    except POINT_ERRORS as error:
        LOG.error(f"Point {index} of '{config.name}' failed: {type(error).__name__}: {error}")
        message = f"{type(error).__name__}: {error}"
        return SweepRecord(index, point, error=message, wall_time=time.perf_counter() - start)
    return SweepRecord(index, point, values, details, wall_time=time.perf_counter() - start)


def run_sweep(
    command: str,
    config: SweepConfig,
    workers: Optional[int] = None,
    progress: Optional[Callable[[SweepRecord], None]] = None,
) -> list:
    """Evaluate every grid point of a sweep, serially or on a process pool.

    Workers share only the immutable configuration. The records are returned in
    grid order whatever the completion order.

    Parameters
    ----------
    command : str
        ``"ness-sweep"``, ``"ground-sweep"`` or ``"discord"``.
    config : SweepConfig
        Sweep configuration.
    workers : int, default: None
        Number of worker processes. ``ROTORCHAIN_WORKERS`` or 1 when ``None``.
    progress : Callable, default: None
        Called with every record as it completes.
    """
    if command not in EVALUATORS:
        raise ValueError(f"Unknown sweep command '{command}'.")
    workers = workers or DEFAULT_WORKERS
    points = config.points()
    run = SweepRun(config.name, command)
    logger = LOG.add_run_logger(f"rotorchain.{command}", run)
    logger.info(f"Running {len(points)} points on {workers} worker(s)")

    records = [None] * len(points)
    if workers == 1:
        for index, point in enumerate(points):
            records[index] = run_point(command, index, point, config)
            _report(logger, records[index], len(points), progress)
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = {
                executor.submit(run_point, command, index, point, config): index
                for index, point in enumerate(points)
            }
            for future in as_completed(futures):
                record = future.result()
                records[futures[future]] = record
                _report(logger, record, len(points), progress)

    failed = sum(record.failed for record in records)
    logger.info(f"Finished {len(points)} points, {failed} failed")
    return records


def _report(logger, record: SweepRecord, total: int, progress):
    status = "failed" if record.failed else f"done in {record.wall_time:.2f} s"
    logger.info(f"Point {record.index + 1}/{total} {status}")
    if progress is not None:
        progress(record)


def run_ness_sweep(config: SweepConfig, workers: Optional[int] = None) -> list:
    """Run the steady-state pipeline on every grid point."""
    return run_sweep(NESS_SWEEP, config, workers)


def run_ground_sweep(config: SweepConfig, workers: Optional[int] = None) -> list:
    """Run the ground-state pipeline on every grid point."""
    return run_sweep(GROUND_SWEEP, config, workers)


def run_discord(config: SweepConfig, workers: Optional[int] = None) -> list:
    """Run the global-discord pipeline on every grid point."""
    return run_sweep(DISCORD, config, workers)
