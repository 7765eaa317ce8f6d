# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled confusion-count kernel over 0/1 label buffers."""


def count_confusion(const unsigned char[::1] gt, const unsigned char[::1] pred):
    """Count (tp, fp, tn, fn) between two equal-length 0/1 label buffers."""
    cdef Py_ssize_t n = gt.shape[0]
    if pred.shape[0] != n:
        raise ValueError(
            f"label buffers differ in length: {n} vs {pred.shape[0]}")
    cdef Py_ssize_t i
    cdef long long tp = 0, gt_fg = 0, pred_fg = 0
    cdef unsigned char g, p
    for i in range(n):
        g = gt[i]
        p = pred[i]
        tp += g & p
        gt_fg += g
        pred_fg += p
    cdef long long fp = pred_fg - tp
    cdef long long fn = gt_fg - tp
    cdef long long tn = n - tp - fp - fn
    return int(tp), int(fp), int(tn), int(fn)
