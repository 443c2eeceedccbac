"""Pure-numpy fallbacks for the compiled dynamic-programming kernels.

Same contracts as ``ttslab.kernels._core``; used when the extension is not
built (or when ``TTSLAB_NO_EXT`` is set).
"""

import numpy as np

NEG_INF = -np.inf


def viterbi_path(log_probs: np.ndarray) -> np.ndarray:
    """Best monotonic complete alignment path through a (n_text, n_frames) grid.

    Each frame is assigned one text index; the index starts at 0, ends at
    n_text - 1 and advances by 0 or 1 per frame. Returns the per-frame text
    index of the path maximizing the sum of log_probs along it.
    """
    lp = np.asarray(log_probs, dtype=np.float64)
    n_text, n_frames = lp.shape
    if n_frames < n_text:
        raise ValueError(f"infeasible alignment: {n_frames} frames < {n_text} tokens")

    score = np.full(n_text, NEG_INF)
    score[0] = lp[0, 0]
    came_from_prev = np.zeros((n_frames, n_text), dtype=np.uint8)
    shifted = np.empty(n_text)
    for t in range(1, n_frames):
        shifted[0] = NEG_INF
        shifted[1:] = score[:-1]
        take = shifted > score
        came_from_prev[t] = take
        score = np.where(take, shifted, score) + lp[:, t]

    path = np.empty(n_frames, dtype=np.int64)
    s = n_text - 1
    for t in range(n_frames - 1, -1, -1):
        path[t] = s
        if came_from_prev[t, s]:
            s -= 1
    return path


def dtw_path(cost: np.ndarray):
    """Exact DTW over a pairwise cost matrix with steps {(1,0),(0,1),(1,1)}.

    Returns (path, total_cost) where path is an (K, 2) int64 array of index
    pairs from (0, 0) to (n-1, m-1) and total_cost is the sum of cost cells
    visited along the path.
    """
    c = np.asarray(cost, dtype=np.float64)
    n, m = c.shape
    if n == 0 or m == 0:
        raise ValueError("empty sequence")

    acc = np.empty((n, m))
    acc[0, 0] = c[0, 0]
    acc[0, 1:] = c[0, 1:].cumsum() + c[0, 0]
    acc[1:, 0] = c[1:, 0].cumsum() + c[0, 0]
    for i in range(1, n):
        row = acc[i - 1]
        for j in range(1, m):
            acc[i, j] = c[i, j] + min(acc[i - 1, j], row[j - 1], acc[i, j - 1])
            row = acc[i - 1]
    # backtrack
    i, j = n - 1, m - 1
    rev = [(i, j)]
    while i > 0 or j > 0:
        if i == 0:
            j -= 1
        elif j == 0:
            i -= 1
        else:
            diag, up, left = acc[i - 1, j - 1], acc[i - 1, j], acc[i, j - 1]
            if diag <= up and diag <= left:
                i, j = i - 1, j - 1
            elif up <= left:
                i -= 1
            else:
                j -= 1
        rev.append((i, j))
    path = np.array(rev[::-1], dtype=np.int64)
    return path, float(acc[n - 1, m - 1])


def levenshtein(a: np.ndarray, b: np.ndarray) -> int:
    """Edit distance between two int sequences (insert/delete/substitute, unit costs)."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if len(a) == 0:
        return len(b)
    if len(b) == 0:
        return len(a)
    prev = np.arange(len(b) + 1, dtype=np.int64)
    cur = np.empty_like(prev)
    for i in range(1, len(a) + 1):
        cur[0] = i
        sub = prev[:-1] + (b != a[i - 1])
        # cur[j] = min(prev[j] + 1, cur[j-1] + 1, sub[j-1]); the cur[j-1]
        # dependency forces the inner loop.
        for j in range(1, len(b) + 1):
            cur[j] = min(prev[j] + 1, cur[j - 1] + 1, sub[j - 1])
        prev, cur = cur, prev
    return int(prev[-1])
