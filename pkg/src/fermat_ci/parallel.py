import os
from concurrent.futures import ProcessPoolExecutor

WORKERS_ENV = "FERMAT_CI_WORKERS"


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def pool_map(func, items, workers=1):
    """``list(map(func, items))``, optionally across processes.  Order is kept."""
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [func(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(func, items))
