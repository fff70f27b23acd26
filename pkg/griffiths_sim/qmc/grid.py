# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Fan-out of chains over an (instance, β, Γ) grid."""

from collections.abc import Iterator, Sequence
from pathlib import Path
from typing import Literal

import numpy as np
from joblib import Parallel, delayed
from pydantic import NonNegativeInt
from tqdm import tqdm

from griffiths_sim._models._base_model import BaseModel
from griffiths_sim.errors import CheckpointError
from griffiths_sim.lattice.disorder import MAX_SEED, DisorderInstance
from griffiths_sim.logging import logger
from griffiths_sim.persistence.checkpoints import CheckpointStore
from griffiths_sim.qmc.chain import ChainParams, run_chain
from griffiths_sim.qmc.records import MomentRecord


def cell_seed(master_seed: int, L: int, instance_id: int, beta_index: int, gamma_index: int) -> int:
    """
    The seed of one cell's chain, derived from the master seed and the cell's grid position only.

    >>> cell_seed(7, 4, 0, 0, 0) == cell_seed(7, 4, 0, 0, 0)
    True
    """
    sequence = np.random.SeedSequence(master_seed, spawn_key=(L, instance_id, beta_index, gamma_index))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


class GridCell(BaseModel):
    """One (instance, β, Γ) point of a grid."""

    instance_index: NonNegativeInt
    instance_label: str
    beta_index: NonNegativeInt
    gamma_index: NonNegativeInt
    beta: float
    gamma: float
    seed: int

    @property
    def checkpoint_name(self) -> str:
        return f"b{self.beta_index}_g{self.gamma_index}"


class CellFailure(BaseModel):
    """A cell that produced no record."""

    instance: str
    beta_index: NonNegativeInt
    gamma_index: NonNegativeInt
    kind: Literal["error", "checkpoint"]
    message: str


def _run_cell(instance: DisorderInstance, cell: GridCell, params: ChainParams) -> MomentRecord | CellFailure:
    try:
        return run_chain(instance, cell.beta, cell.gamma, seed=cell.seed, **params.chain_kwargs())
    except Exception as e:  # noqa: BLE001
        return CellFailure(
            instance=cell.instance_label,
            beta_index=cell.beta_index,
            gamma_index=cell.gamma_index,
            kind="error",
            message=f"{type(e).__name__}: {e}",
        )


class GridRunner:
    """
    Runs one chain per (instance, β, Γ) cell.

    Records are yielded in canonical order (instance, β index, Γ index) whatever the number of
    workers, and every completed cell is checkpointed so an interrupted run resumes without
    redoing it. With ``resume`` off, existing checkpoints are ignored and overwritten. A failing
    cell is recorded in ``failures`` instead of stopping the grid.
    """

    def __init__(
        self,
        instances: Sequence[DisorderInstance],
        betas: Sequence[float],
        gammas: Sequence[float],
        params: ChainParams,
        *,
        master_seed: int,
        workers: int = 1,
        checkpoint_dir: Path | None = None,
        progress: bool = False,
        resume: bool = True,
    ) -> None:
        if not instances or not betas or not gammas:
            err_msg = "instance set, β grid and Γ grid must all be non-empty."
            raise ValueError(err_msg)
        if not 0 <= master_seed <= MAX_SEED:
            err_msg = f"master seed must be a 64-bit unsigned integer, got {master_seed}."
            raise ValueError(err_msg)
        self.instances = list(instances)
        self.betas = [float(beta) for beta in betas]
        self.gammas = [float(gamma) for gamma in gammas]
        self.params = params
        self.master_seed = master_seed
        self.workers = workers
        self.store = CheckpointStore(checkpoint_dir) if checkpoint_dir is not None else None
        self.progress = progress
        self.resume = resume
        self.failures: list[CellFailure] = []
        self.recovered: list[str] = []

    def cells(self) -> list[GridCell]:
        """All cells in canonical order."""
        return [
            GridCell(
                instance_index=k,
                instance_label=instance.label,
                beta_index=bi,
                gamma_index=gi,
                beta=beta,
                gamma=gamma,
                seed=cell_seed(self.master_seed, instance.graph.L, instance.instance_id, bi, gi),
            )
            for k, instance in enumerate(self.instances)
            for bi, beta in enumerate(self.betas)
            for gi, gamma in enumerate(self.gammas)
        ]

    def _cached(self, cell: GridCell) -> MomentRecord | None:
        if self.store is None or not self.resume:
            return None
        try:
            record = self.store.load(cell.instance_label, cell.checkpoint_name, MomentRecord)
        except CheckpointError:
            self.recovered.append(f"{cell.instance_label}/{cell.checkpoint_name}")
            self.store.discard(cell.instance_label, cell.checkpoint_name)
            return None
        if record is not None and not self._matches(cell, record):
            logger.warning("QMC - stale checkpoint for %s/%s, recomputing", cell.instance_label, cell.checkpoint_name)
            return None
        return record

    def _matches(self, cell: GridCell, record: MomentRecord) -> bool:
        """Whether a checkpointed record was produced by this cell with the current chain parameters."""
        return (
            record.instance_id == cell.instance_label
            and record.beta == cell.beta
            and record.gamma == cell.gamma
            and record.seed == cell.seed
            and record.M == self.params.M
            and record.n_meas == self.params.n_measurements
        )

    def _save(self, cell: GridCell, record: MomentRecord) -> None:
        if self.store is None:
            return
        try:
            self.store.save(cell.instance_label, cell.checkpoint_name, record)
        except OSError as e:
            # The record is still emitted; only resumability of this cell is lost.
            logger.warning("QMC - cannot checkpoint %s/%s: %s", cell.instance_label, cell.checkpoint_name, e)
            self.failures.append(
                CellFailure(
                    instance=cell.instance_label,
                    beta_index=cell.beta_index,
                    gamma_index=cell.gamma_index,
                    kind="checkpoint",
                    message=str(e),
                ),
            )

    def run(self) -> Iterator[MomentRecord]:
        """Yield one record per successful cell, in canonical order."""
        self.failures = []
        cells = self.cells()
        cached = {index: record for index, cell in enumerate(cells) if (record := self._cached(cell)) is not None}
        pending = [cell for index, cell in enumerate(cells) if index not in cached]
        logger.info("QMC - grid of %d cells, %d from checkpoints, %d to run on %d workers", len(cells), len(cached), len(pending), self.workers)

        computed: Iterator[MomentRecord | CellFailure] = iter(())
        if pending:
            computed = Parallel(n_jobs=self.workers, backend="loky", return_as="generator")(
                delayed(_run_cell)(self.instances[cell.instance_index], cell, self.params) for cell in pending
            )

        with tqdm(total=len(cells), disable=not self.progress, desc="cells") as bar:
            for index, cell in enumerate(cells):
                result = cached.get(index)
                if result is None:
                    result = next(computed)
                    if isinstance(result, CellFailure):
                        logger.error("QMC - cell %s/%s failed: %s", cell.instance_label, cell.checkpoint_name, result.message)
                        self.failures.append(result)
                        bar.update()
                        continue
                    if self.store is not None:
                        self._save(cell, result)
                bar.update()
                yield result


def run_grid(
    instances: Sequence[DisorderInstance],
    betas: Sequence[float],
    gammas: Sequence[float],
    params: ChainParams,
    *,
    master_seed: int,
    workers: int = 1,
    checkpoint_dir: Path | None = None,
) -> Iterator[MomentRecord]:
    """Stream one record per (instance, β, Γ) cell; see ``GridRunner`` for failure reporting."""
    return GridRunner(instances, betas, gammas, params, master_seed=master_seed, workers=workers, checkpoint_dir=checkpoint_dir).run()
