"""Counting kernels: numba-jitted loops with a pure-numpy fallback.

Both backends implement the same three operations over a boolean
item-presence matrix (rows = transactions, columns = items):

  count_contains(presence, flat, offsets)  -> int64[n_sets]
  contains_matrix(presence, flat, offsets) -> bool[n_sets, n_rows]

Itemsets are passed flattened: `flat` holds column indices and
`offsets[i]:offsets[i+1]` delimits itemset i. The third operation,

  scan_window(window_part, before, cov, size, lo, ts_num, ts_den, tt_num, tt_den)

walks each pattern's occurrences inside a window slice of the containment
matrix and keeps the milestones passing the support gate and the shift
threshold. All predicates are evaluated by integer cross-multiplication, so
the filter is exact as long as size^2 * max(ts_den, tt_den) fits in int64
(the caller checks). It returns (pattern_index, occurrence_index, position,
side) arrays, in ascending position order per pattern, side being +1 for an
upward shift and -1 for a downward one.

The active backend is numba when importable, unless the TRANSMINE_NO_NUMBA
environment variable is set to 1/true/yes; `use()` switches at runtime
(benchmarks and tests).
"""

import os

import numpy as np


def _count_contains_numpy(presence: np.ndarray, flat: np.ndarray, offsets: np.ndarray) -> np.ndarray:
    return _contains_matrix_numpy(presence, flat, offsets).sum(axis=1, dtype=np.int64)


def _contains_matrix_numpy(presence: np.ndarray, flat: np.ndarray, offsets: np.ndarray) -> np.ndarray:
    n_sets = offsets.shape[0] - 1
    lengths = np.diff(offsets)
    # indicator (n_items x n_sets); a row contains itemset i iff it hits all lengths[i] columns
    indicator = np.zeros((presence.shape[1], n_sets), dtype=np.int32)
    for i in range(n_sets):
        indicator[flat[offsets[i] : offsets[i + 1]], i] = 1
    hits = presence.astype(np.int32) @ indicator
    return (hits == lengths[np.newaxis, :]).T


_EMPTY = tuple(np.zeros(0, dtype=np.int64) for _ in range(4))


def _scan_window_numpy(window_part, before, cov, size, lo, ts_num, ts_den, tt_num, tt_den):
    pats, cols = np.nonzero(window_part)
    if pats.size == 0:
        return _EMPTY
    starts = np.searchsorted(pats, np.arange(window_part.shape[0]))
    index = before[pats] + (np.arange(pats.size, dtype=np.int64) - starts[pats]) + 1
    position = (lo + cols).astype(np.int64)
    pattern_cov = cov[pats]
    # support gate; at position == size the suffix support is 0 and never passes
    ok = position < size
    ok &= index * ts_den >= ts_num * position
    ok &= (pattern_cov - index) * ts_den >= ts_num * (size - position)
    # cross-multiplied shift-ratio thresholds (suffix vs prefix support)
    left = (pattern_cov - index) * position
    right = index * (size - position)
    up = ok & (left >= right) & (left * (tt_den - tt_num) >= right * tt_den)
    down = ok & (left < right) & (right * (tt_den - tt_num) >= left * tt_den)
    keep = up | down
    side = np.where(up, np.int64(1), np.int64(-1))[keep]
    return pats[keep].astype(np.int64), index[keep], position[keep], side


_IMPLS: dict[str, tuple] = {
    "numpy": (_count_contains_numpy, _contains_matrix_numpy, _scan_window_numpy)
}

try:
    from numba import njit

    @njit(cache=True)
    def _count_contains_jit(presence, flat, offsets):
        n_sets = offsets.shape[0] - 1
        n_rows = presence.shape[0]
        out = np.zeros(n_sets, dtype=np.int64)
        for i in range(n_sets):
            lo, hi = offsets[i], offsets[i + 1]
            count = 0
            for r in range(n_rows):
                ok = True
                for j in range(lo, hi):
                    if not presence[r, flat[j]]:
                        ok = False
                        break
                if ok:
                    count += 1
            out[i] = count
        return out

    @njit(cache=True)
    def _contains_matrix_jit(presence, flat, offsets):
        n_sets = offsets.shape[0] - 1
        n_rows = presence.shape[0]
        out = np.zeros((n_sets, n_rows), dtype=np.bool_)
        for i in range(n_sets):
            lo, hi = offsets[i], offsets[i + 1]
            for r in range(n_rows):
                ok = True
                for j in range(lo, hi):
                    if not presence[r, flat[j]]:
                        ok = False
                        break
                out[i, r] = ok
        return out

    @njit(cache=True)
    def _scan_window_jit(window_part, before, cov, size, lo, ts_num, ts_den, tt_num, tt_den):
        n_patterns, width = window_part.shape
        cap = 0
        for p in range(n_patterns):
            for c in range(width):
                if window_part[p, c]:
                    cap += 1
        out_pat = np.empty(cap, dtype=np.int64)
        out_idx = np.empty(cap, dtype=np.int64)
        out_pos = np.empty(cap, dtype=np.int64)
        out_side = np.empty(cap, dtype=np.int64)
        k = 0
        for p in range(n_patterns):
            count = before[p]
            pattern_cov = cov[p]
            for c in range(width):
                if not window_part[p, c]:
                    continue
                count += 1
                position = lo + c
                if position >= size:  # suffix support 0 never passes the gate
                    continue
                index = count
                if index * ts_den < ts_num * position:
                    continue
                if (pattern_cov - index) * ts_den < ts_num * (size - position):
                    continue
                left = (pattern_cov - index) * position
                right = index * (size - position)
                if left >= right:
                    if left * (tt_den - tt_num) < right * tt_den:
                        continue
                    side = 1
                else:
                    if right * (tt_den - tt_num) < left * tt_den:
                        continue
                    side = -1
                out_pat[k] = p
                out_idx[k] = index
                out_pos[k] = position
                out_side[k] = side
                k += 1
        return out_pat, out_idx, out_pos, out_side, k

    def _scan_window_numba(window_part, before, cov, size, lo, ts_num, ts_den, tt_num, tt_den):
        pat, idx, pos, side, k = _scan_window_jit(
            np.ascontiguousarray(window_part), before, cov, size, lo,
            ts_num, ts_den, tt_num, tt_den,
        )
        return pat[:k], idx[:k], pos[:k], side[:k]

    _IMPLS["numba"] = (_count_contains_jit, _contains_matrix_jit, _scan_window_numba)
except ImportError:
    pass


def _initial_backend() -> str:
    if os.environ.get("TRANSMINE_NO_NUMBA", "").strip().lower() in ("1", "true", "yes"):
        return "numpy"
    return "numba" if "numba" in _IMPLS else "numpy"


_ACTIVE = _initial_backend()


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_IMPLS))


def active_backend() -> str:
    return _ACTIVE


def use(name: str) -> None:
    """Select the counting backend by name ("numba" or "numpy")."""
    global _ACTIVE
    if name not in _IMPLS:
        raise ValueError(f"backend {name!r} not available; have {available_backends()}")
    _ACTIVE = name


def count_contains(presence: np.ndarray, flat: np.ndarray, offsets: np.ndarray) -> np.ndarray:
    return _IMPLS[_ACTIVE][0](presence, flat, offsets)


def contains_matrix(presence: np.ndarray, flat: np.ndarray, offsets: np.ndarray) -> np.ndarray:
    return _IMPLS[_ACTIVE][1](presence, flat, offsets)


def scan_window(window_part, before, cov, size, lo, ts_num, ts_den, tt_num, tt_den):
    return _IMPLS[_ACTIVE][2](
        window_part, before, cov, size, lo, ts_num, ts_den, tt_num, tt_den
    )
