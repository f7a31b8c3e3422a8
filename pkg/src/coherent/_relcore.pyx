# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled relation kernels; same contract as ``_relcore_py``."""


def compose_pairs(tuple first, tuple second, Py_ssize_t mid):
    cdef list succ = [[] for _ in range(mid)]
    cdef Py_ssize_t i, j, k
    for j, k in second:
        (<list>succ[j]).append(k)
    cdef set out = set()
    for i, j in first:
        for k in <list>succ[j]:
            out.add((i, k))
    return tuple(sorted(out))


def tensor_pairs(tuple first, tuple second, Py_ssize_t dsrc, Py_ssize_t dtgt):
    cdef list out = list(first)
    cdef Py_ssize_t i, j
    for i, j in second:
        out.append((i + dsrc, j + dtgt))
    out.sort()
    return tuple(out)


def converse_pairs(tuple pairs):
    cdef list out = []
    cdef Py_ssize_t i, j
    for i, j in pairs:
        out.append((j, i))
    out.sort()
    return tuple(out)


def right_lex(tuple pairs):
    cdef list keyed = []
    cdef Py_ssize_t i, j
    for i, j in pairs:
        keyed.append((j, i))
    keyed.sort()
    return tuple([(i, j) for j, i in keyed])


def decompose_pairs(tuple left):
    cdef tuple right = right_lex(left)
    cdef dict where = {}
    cdef Py_ssize_t z
    for z in range(len(right)):
        where[right[z]] = z
    nu = tuple([p[0] for p in left])
    mu = tuple([p[1] for p in right])
    beta = tuple([where[p] for p in left])
    return nu, mu, beta


def recompose_pairs(tuple nu, tuple mu, tuple beta):
    cdef set out = set()
    cdef Py_ssize_t z
    for z in range(len(nu)):
        out.add((nu[z], mu[beta[z]]))
    return tuple(sorted(out))


def coordinated(tuple nu, tuple mu, tuple beta):
    cdef Py_ssize_t k = len(nu), z, u
    cdef list inv = [0] * k
    for z in range(k):
        inv[beta[z]] = z
    cdef long a0, a1, b0, b1
    for u in range(k - 1):
        a0 = nu[u]; a1 = mu[beta[u]]
        b0 = nu[u + 1]; b1 = mu[beta[u + 1]]
        if not (a0 < b0 or (a0 == b0 and a1 < b1)):
            return False
        a0 = nu[inv[u]]; a1 = mu[u]
        b0 = nu[inv[u + 1]]; b1 = mu[u + 1]
        if not (a1 < b1 or (a1 == b1 and a0 < b0)):
            return False
    return True
