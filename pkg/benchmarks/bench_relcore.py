"""Compare the compiled relation kernel with the pure-Python fallback.

    python3 benchmarks/bench_relcore.py [--repeat N] [--size N]
"""

import argparse
import random
import timeit

from coherent import relgraph as rg
from coherent.relgraph import Relation
from coherent.rewrite import sample_terms
from coherent.semantics import _graph, graph


def random_relation(rng, n, m, density=0.3):
    return Relation.of(n, m, [(i, j) for i in range(n) for j in range(m) if rng.random() < density])


def workloads(size, seed=0):
    rng = random.Random(seed)
    rels = [random_relation(rng, size, size) for _ in range(40)]
    terms = sample_terms("CS", 300, 14, seed=seed, depth=3)

    def compose():
        for R, S in zip(rels, rels[1:]):
            rg.compose(R, S)

    def tensor():
        for R, S in zip(rels, rels[1:]):
            rg.tensor(R, S)

    def decompose():
        for R in rels:
            rg.recompose(rg.decompose(R))

    def evaluate():
        _graph.cache_clear()
        for f in terms:
            graph(f, "CS")

    return {"compose": compose, "tensor": tensor, "decompose+recompose": decompose, "graph evaluation": evaluate}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--size", type=int, default=24, help="side of the random relations")
    args = ap.parse_args()
    if not rg.compiled_available():
        raise SystemExit("compiled kernel not built; run `pip install -e . --no-build-isolation` first")

    jobs = workloads(args.size)
    print(f"{'workload':<22}{'python ms':>12}{'compiled ms':>14}{'speedup':>10}")
    previous = rg.backend()
    try:
        for name, fn in jobs.items():
            times = {}
            for backend in ("python", "compiled"):
                rg.use_backend(backend)
                times[backend] = min(timeit.repeat(fn, number=1, repeat=args.repeat)) * 1e3
            print(f"{name:<22}{times['python']:>12.2f}{times['compiled']:>14.2f}{times['python'] / times['compiled']:>9.1f}x")
    finally:
        rg.use_backend(previous)


if __name__ == "__main__":
    main()
