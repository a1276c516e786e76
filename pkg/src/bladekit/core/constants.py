"""Limits and exit codes used throughout bladekit.

.. list-table:: Constants
   :header-rows: 1

   * - Name
     - Value
     - Meaning
   * - ``MAX_DIMENSION``
     - 64
     - Largest ambient dimension (an index set fits one 64-bit mask)
   * - ``MAX_TRIAL_DIMENSION``
     - 12
     - Largest ambient dimension accepted by equivalence trials
   * - ``COMPACT_NOTATION_MAX``
     - 9
     - Largest dimension for which ``e123`` digit notation is used
"""

from __future__ import annotations

MAX_DIMENSION: int = 64
"""Largest supported ambient dimension n."""

MAX_TRIAL_DIMENSION: int = 12
"""Largest ambient dimension for randomized equivalence trials."""

COMPACT_NOTATION_MAX: int = 9
"""Dimensions up to this value use single-digit blade names (``e123``)."""

EXIT_BLADE: int = 0
"""Exit status: input is a blade, or all trial criteria agreed."""

EXIT_INPUT_ERROR: int = 1
"""Exit status: usage or input error."""

EXIT_NOT_A_BLADE: int = 2
"""Exit status: input is not a blade."""

EXIT_DISAGREEMENT: int = 3
"""Exit status: decomposability criteria disagreed."""

EXIT_INTERNAL_FAULT: int = 4
"""Exit status: an internal verification failed."""
