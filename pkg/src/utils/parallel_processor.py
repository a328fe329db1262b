"""
Parallel evaluation of verify cells
"""
import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..verify.invariants import DEFAULT_SAMPLES, calculate_cell_checks
from .check_counter import ALL_CHECKS, count_checks, evaluate_checks

logger = logging.getLogger(__name__)

DEFAULT_MAX_WORKERS = 4

Cell = Tuple[int, int]


def verify_cells(max_r: int, max_n: int) -> List[Cell]:
    """All (r, n) with 0 <= r <= min(max_r, n) and 0 <= n <= max_n, ordered by n then r"""
    if max_r < 0 or max_n < 0:
        raise ValueError(f"Verify ranges must be non-negative, got max_r={max_r}, max_n={max_n}")
    return [(r, n) for n in range(max_n + 1) for r in range(min(max_r, n) + 1)]


def _error_row(r: int, n: int, message: str) -> Dict:
    row = {'r': r, 'n': n, 'Passed': 0, 'Failed': 0, 'Skipped': 0}
    row.update({name: 'Skip' for name in ALL_CHECKS})
    row['error'] = message
    return row


def verify_single_cell(r: int, n: int, seed: int, samples: int = DEFAULT_SAMPLES) -> Dict:
    """
    Run the invariant suite on one cell

    Args:
        r: Half rank
        n: Ambient half rank
        seed: Base seed of the cell's random stream
        samples: Random samples per sampled check

    Returns:
        Row with counts, one Pass/Fail/Skip entry per check and an error field
    """
    try:
        statuses = evaluate_checks(calculate_cell_checks(r, n, seed, samples))
        passed, failed, skipped = count_checks(statuses)

        row = {'r': r, 'n': n, 'Passed': passed, 'Failed': failed, 'Skipped': skipped}
        row.update(statuses)
        row['error'] = None
        return row

    except Exception as e:
        # Return row with error
        logger.warning("Cell (%d, %d) raised %s: %s", r, n, type(e).__name__, e)
        return _error_row(r, n, f"{type(e).__name__}: {str(e)}")


def verify_cells_parallel(cells: Sequence[Cell], seed: int = 0, samples: int = DEFAULT_SAMPLES,
                          max_workers: int = DEFAULT_MAX_WORKERS,
                          progress_callback: Optional[Callable[[int, int, Cell], None]] = None
                          ) -> Tuple[List[Dict], List[str]]:
    """
    Verify multiple cells in parallel using ThreadPoolExecutor

    Args:
        cells: (r, n) pairs to verify
        seed: Base seed; each cell derives its own stream from (seed, r, n)
        samples: Random samples per sampled check
        max_workers: Maximum number of parallel workers
        progress_callback: Optional callback function(completed, total, cell)

    Returns:
        Tuple of (result rows in the order of cells, errors list)
    """
    if max_workers < 1:
        raise ValueError(f"max_workers must be at least 1, got {max_workers}")

    results = []
    errors = []
    total_tasks = len(cells)
    completed_count = 0

    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        future_to_cell = {
            executor.submit(verify_single_cell, r, n, seed, samples): (r, n)
            for r, n in cells
        }

        # Collect results as they complete
        for future in as_completed(future_to_cell):
            r, n = future_to_cell[future]
            try:
                result = future.result()
            except Exception as e:
                result = _error_row(r, n, str(e))
            results.append(result)

            if result.get('error'):
                errors.append(f"({r}, {n}): {result['error']}")

            completed_count += 1
            if progress_callback:
                progress_callback(completed_count, total_tasks, (r, n))

    # Sort results by original order
    cell_order = {cell: idx for idx, cell in enumerate(cells)}
    results.sort(key=lambda row: cell_order.get((row['r'], row['n']), len(cells)))

    return results, errors


def log_progress(completed: int, total: int, cell: Cell) -> None:
    logger.info("Verified cell (%d, %d) (%d/%d)", cell[0], cell[1], completed, total)
