"""Pure numpy fallback for the compiled enumeration kernels.

Must return bit-identical integers to ``_ckernels``; both sides are exact
integer arithmetic, so equality is testable directly.
"""

import numpy as np


def config_bond_sums(height: int, width: int):
    """Vectorized version of the exhaustive configuration sweep."""
    ns = height * width
    if ns > 24:
        raise ValueError(f"lattice with {ns} sites is too large to enumerate")
    ncfg = 1 << ns
    cfg = np.arange(ncfg, dtype=np.uint32)
    bits = (cfg[:, None] >> np.arange(ns, dtype=np.uint32)) & 1
    spins = (1 - 2 * bits.astype(np.int8)).astype(np.int8)
    sites = np.arange(ns).reshape(height, width)
    right = np.roll(sites, -1, axis=1).ravel()
    down = np.roll(sites, -1, axis=0).ravel()
    sx = (spins * spins[:, right]).sum(axis=1, dtype=np.int32)
    sy = (spins * spins[:, down]).sum(axis=1, dtype=np.int32)
    sm = spins.sum(axis=1, dtype=np.int32)
    return sx, sy, sm


def graph_automorphism_mask(adj: np.ndarray, perms: np.ndarray):
    """Batched permute-and-compare; no early abort but fully vectorized."""
    adj = np.asarray(adj, dtype=np.uint8)
    perms = np.asarray(perms, dtype=np.int32)
    n = perms.shape[1]
    if adj.shape != (n, n):
        raise ValueError("adjacency shape does not match permutation length")
    permuted = adj[perms[:, :, None], perms[:, None, :]]
    return (permuted == adj[None, :, :]).all(axis=(1, 2))
