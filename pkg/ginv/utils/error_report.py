import logging
from typing import TYPE_CHECKING

from ginv.models import FailureRecord
from ginv.store import format_matrix
from ginv.utils.formatting import trim

if TYPE_CHECKING:
    from ginv.tasks.generators import Instance

logger = logging.getLogger(__name__)


def failure_record(instance: "Instance", check: str, detail: str) -> FailureRecord:
    """Log a CRIT line for a failed check and build its reproducer record.

    The matrix is dumped in the canonical text format with the generator
    provenance as its comment, so ``ginv`` can be rerun on it directly.
    """
    text = f"[CRIT] instance {instance.index} failed {check}: {detail}"
    logger.error(trim(text, 500))
    return FailureRecord(
        index=instance.index,
        check=check,
        detail=trim(detail),
        matrix=format_matrix(instance.matrix, [instance.provenance]),
    )
