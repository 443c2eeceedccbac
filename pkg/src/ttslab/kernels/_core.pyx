# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled dynamic-programming kernels.

Mirrors ttslab.kernels._fallback; see that module for the contracts.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

cdef double NEG_INF = -np.inf


def viterbi_path(log_probs):
    cdef cnp.ndarray[cnp.float64_t, ndim=2] lp = np.ascontiguousarray(log_probs, dtype=np.float64)
    cdef Py_ssize_t n_text = lp.shape[0]
    cdef Py_ssize_t n_frames = lp.shape[1]
    if n_frames < n_text:
        raise ValueError(f"infeasible alignment: {n_frames} frames < {n_text} tokens")

    cdef cnp.ndarray[cnp.float64_t, ndim=1] score = np.full(n_text, NEG_INF)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] nxt = np.empty(n_text)
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] came = np.zeros((n_frames, n_text), dtype=np.uint8)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] path = np.empty(n_frames, dtype=np.int64)
    cdef Py_ssize_t t, s
    cdef double stay, move

    score[0] = lp[0, 0]
    for t in range(1, n_frames):
        for s in range(n_text - 1, -1, -1):
            stay = score[s]
            move = score[s - 1] if s > 0 else NEG_INF
            if move > stay:
                came[t, s] = 1
                nxt[s] = move + lp[s, t]
            else:
                nxt[s] = stay + lp[s, t]
        score, nxt = nxt, score

    s = n_text - 1
    for t in range(n_frames - 1, -1, -1):
        path[t] = s
        if came[t, s]:
            s -= 1
    return path


def dtw_path(cost):
    cdef cnp.ndarray[cnp.float64_t, ndim=2] c = np.ascontiguousarray(cost, dtype=np.float64)
    cdef Py_ssize_t n = c.shape[0]
    cdef Py_ssize_t m = c.shape[1]
    if n == 0 or m == 0:
        raise ValueError("empty sequence")

    cdef cnp.ndarray[cnp.float64_t, ndim=2] acc = np.empty((n, m))
    cdef Py_ssize_t i, j, k
    cdef double best, diag, up, left

    acc[0, 0] = c[0, 0]
    for j in range(1, m):
        acc[0, j] = acc[0, j - 1] + c[0, j]
    for i in range(1, n):
        acc[i, 0] = acc[i - 1, 0] + c[i, 0]
        for j in range(1, m):
            best = acc[i - 1, j - 1]
            if acc[i - 1, j] < best:
                best = acc[i - 1, j]
            if acc[i, j - 1] < best:
                best = acc[i, j - 1]
            acc[i, j] = c[i, j] + best

    cdef cnp.ndarray[cnp.int64_t, ndim=2] rev = np.empty((n + m - 1, 2), dtype=np.int64)
    i = n - 1
    j = m - 1
    k = 0
    rev[k, 0] = i
    rev[k, 1] = j
    while i > 0 or j > 0:
        if i == 0:
            j -= 1
        elif j == 0:
            i -= 1
        else:
            diag = acc[i - 1, j - 1]
            up = acc[i - 1, j]
            left = acc[i, j - 1]
            if diag <= up and diag <= left:
                i -= 1
                j -= 1
            elif up <= left:
                i -= 1
            else:
                j -= 1
        k += 1
        rev[k, 0] = i
        rev[k, 1] = j
    return np.ascontiguousarray(rev[:k + 1][::-1]), float(acc[n - 1, m - 1])


def levenshtein(a, b):
    cdef cnp.ndarray[cnp.int64_t, ndim=1] x = np.ascontiguousarray(a, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] y = np.ascontiguousarray(b, dtype=np.int64)
    cdef Py_ssize_t la = x.shape[0]
    cdef Py_ssize_t lb = y.shape[0]
    if la == 0:
        return lb
    if lb == 0:
        return la
    cdef cnp.ndarray[cnp.int64_t, ndim=1] prev = np.arange(lb + 1, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] cur = np.empty(lb + 1, dtype=np.int64)
    cdef Py_ssize_t i, j
    cdef cnp.int64_t best, cand
    for i in range(1, la + 1):
        cur[0] = i
        for j in range(1, lb + 1):
            best = prev[j] + 1
            cand = cur[j - 1] + 1
            if cand < best:
                best = cand
            cand = prev[j - 1] + (0 if x[i - 1] == y[j - 1] else 1)
            if cand < best:
                best = cand
            cur[j] = best
        prev, cur = cur, prev
    return int(prev[lb])
