"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--n 20000] [--block 1024] [--repeat 3]

The top-k benchmark runs one similarity block of ``block x n``; the CG
benchmark solves a 3-NN diffusion system on ``n`` random latent codes.
"""
import argparse
import timeit

import numpy as np

from tabmix import _fallback
from tabmix.labelprop import knn_graph, label_matrix, normalize_adjacency

try:
    from tabmix import _kernels
except ImportError:
    _kernels = None


def _best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=20000)
    ap.add_argument("--block", type=int, default=1024)
    ap.add_argument("--dim", type=int, default=32)
    ap.add_argument("--classes", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    rng = np.random.default_rng(0)

    Z = rng.normal(size=(args.n, args.dim))
    Zn = Z / np.linalg.norm(Z, axis=1, keepdims=True)
    S = np.ascontiguousarray(Zn[: args.block] @ Zn.T)
    A = normalize_adjacency(knn_graph(Z, 3))
    Y = label_matrix(rng.integers(0, args.classes, args.n // 10), args.n, args.classes)
    cg_args = (A.indptr.astype(np.int32), A.indices.astype(np.int32), A.data, 0.99, Y, 1e-6, 1000)

    impls = [("python", _fallback)] + ([("cython", _kernels)] if _kernels is not None else [])
    print(f"n={args.n} block={args.block} dim={args.dim} classes={args.classes} nnz(A)={A.nnz}")
    print(f"{'kernel':<10}{'impl':<8}{'seconds':>10}")
    times = {}
    for name, mod in impls:
        times["topk", name] = _best(lambda: mod.topk_rows(S, 3, 0), args.repeat)
        times["cg", name] = _best(lambda: mod.cg_solve_csr(*cg_args), args.repeat)
    for kernel in ("topk", "cg"):
        for name, _ in impls:
            print(f"{kernel:<10}{name:<8}{times[kernel, name]:>10.4f}")
        if _kernels is not None:
            print(f"{kernel:<10}{'speedup':<8}{times[kernel, 'python'] / times[kernel, 'cython']:>9.1f}x")
    if _kernels is None:
        print("compiled kernels not built; only the fallback was timed")


if __name__ == "__main__":
    main()
