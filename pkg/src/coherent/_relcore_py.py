"""Pure-Python relation kernels.

Pairs are passed as tuples of ``(i, j)`` tuples and returned sorted
lexicographically, which is the left-lexicographic order.
"""


def compose_pairs(first, second, mid):
    succ = [[] for _ in range(mid)]
    for j, k in second:
        succ[j].append(k)
    out = set()
    for i, j in first:
        for k in succ[j]:
            out.add((i, k))
    return tuple(sorted(out))


def tensor_pairs(first, second, dsrc, dtgt):
    return tuple(sorted(first + tuple((i + dsrc, j + dtgt) for i, j in second)))


def converse_pairs(pairs):
    return tuple(sorted((j, i) for i, j in pairs))


def right_lex(pairs):
    return tuple(sorted(pairs, key=lambda p: (p[1], p[0])))


def decompose_pairs(left):
    """(nu, mu, beta) for a relation given in left-lexicographic order."""
    right = right_lex(left)
    where = {p: z for z, p in enumerate(right)}
    nu = tuple(p[0] for p in left)
    mu = tuple(p[1] for p in right)
    beta = tuple(where[p] for p in left)
    return nu, mu, beta


def recompose_pairs(nu, mu, beta):
    return tuple(sorted({(nu[z], mu[beta[z]]) for z in range(len(nu))}))


def coordinated(nu, mu, beta):
    k = len(nu)
    inv = [0] * k
    for z, b in enumerate(beta):
        inv[b] = z
    lseq = [(nu[z], mu[beta[z]]) for z in range(k)]
    rseq = [(nu[inv[z]], mu[z]) for z in range(k)]
    for u in range(k - 1):
        # both orders are strict total orders, so adjacent checks suffice
        if not lseq[u] < lseq[u + 1]:
            return False
        ru, rv = rseq[u], rseq[u + 1]
        if not (ru[1], ru[0]) < (rv[1], rv[0]):
            return False
    return True
