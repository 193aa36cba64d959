"""Replacing a cocycle by a cohomologous normalized one.

Stage ``i`` kills the values on ``s_{i-1}`` of every word:

    χ_i = (-1)^(i-1) ψ_{i-1} ∘ s_{i-1},    ψ_i = ψ_{i-1} - δχ_i,

so ``ψ_i`` vanishes on ``s_j`` for all ``j < i`` and ``ψ_n`` is normalized.
The scheme works whenever ``δψ`` is itself normalized.
"""

from dataclasses import dataclass
from typing import List, Optional

from loguru import logger

from parcoh.cohomology.actions import Cochain, PGAction
from parcoh.cohomology.complexes import apply_coboundary
from parcoh.core.table import UNIT, Word
from parcoh.errors import InvariantError, NormalizationError, TruncationError


@dataclass(frozen=True)
class NormalizationResult:
    """Output of :func:`normalize_cocycle`.

    Attributes:
        normalized: ``ψ_n``.
        chis: ``χ_1, ..., χ_n``, degree ``n - 1``.
        stages: ``ψ_0 = ψ, ψ_1, ..., ψ_n``.
    """

    normalized: Cochain
    chis: List[Cochain]
    stages: List[Cochain]

    def correction(self) -> Optional[Cochain]:
        """``Σ χ_i``, whose coboundary is ``ψ - ψ_n``; ``None`` in degree 0."""
        if not self.chis:
            return None
        total = self.chis[0]
        for chi in self.chis[1:]:
            total = total + chi
        return total


def _insert_unit(word: Word, position: int) -> Word:
    return word[:position] + (UNIT,) + word[position:]


def normalize_cocycle(action: PGAction, psi: Cochain) -> NormalizationResult:
    """Normalize ``psi`` stage by stage.

    Raises:
        TruncationError: ``δψ`` cannot be formed below the truncation degree.
        NormalizationError: ``δψ`` is nonzero on a degenerate word; the
            exception carries that word.
        InvariantError: a stage fails to be normalized as far as it should.
    """
    table = action.table
    n = psi.degree
    if n + 1 > table.max_degree:
        raise TruncationError(n + 1, table.max_degree, "normalization")
    witness = apply_coboundary(action, psi).degenerate_support()
    if witness is not None:
        logger.error(f"coboundary is not normalized at {table.name_word(witness)}")
        raise NormalizationError(table.name_word(witness))

    stages = [psi]
    chis: List[Cochain] = []
    current = psi
    for i in range(1, n + 1):
        values = current.as_dict()
        sign = (-1) ** (i - 1)
        chi = Cochain.from_function(
            table,
            action.coeffs,
            n - 1,
            lambda v: [sign * x for x in values[_insert_unit(v, i - 1)]],
        )
        current = current - apply_coboundary(action, chi)
        if not current.is_normalized(i):
            raise InvariantError(
                f"stage {i} of the normalization is not {i}-normalized"
            )
        chis.append(chi)
        stages.append(current)
    logger.debug(f"normalized a degree-{n} cochain in {n} stage(s)")
    return NormalizationResult(normalized=current, chis=chis, stages=stages)
