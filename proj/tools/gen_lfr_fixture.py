#!/usr/bin/env python3
"""Seeded generator for small overlapping LFR-style benchmark fixtures.

Follows the Lancichinetti-Fortunato construction: power-law degrees and
community sizes, a mixing parameter mu, `on` overlapping nodes each holding
`om` memberships, per-community configuration models for internal edges and a
global configuration model for external edges.

Writes LFR-convention files:
  network.dat    "i<TAB>j" 1-indexed, each undirected edge listed in both directions
  community.dat  "i<TAB>c1 c2 ..."

Example:
  gen_lfr_fixture.py --n 1000 --k 20 --maxk 50 --mu 0.1 --minc 20 --maxc 100 \
      --on 50 --om 2 --seed 1 --out tests/fixtures/lfr_n1000_mu01
"""

import argparse
import os

import numpy as np


def power_law_sample(rng, exponent, lo, hi, size):
    """Continuous power law x^-exponent on [lo, hi], inverse-CDF sampling."""
    u = rng.random(size)
    if abs(exponent - 1.0) < 1e-12:
        return lo * (hi / lo) ** u
    a = 1.0 - exponent
    return (lo ** a + u * (hi ** a - lo ** a)) ** (1.0 / a)


def power_law_mean(exponent, lo, hi):
    xs = np.linspace(lo, hi, 20001)
    w = xs ** (-exponent)
    return float((xs * w).sum() / w.sum())


def degree_sequence(rng, n, k, maxk, tau1):
    lo, hi = 1.0, float(maxk)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if power_law_mean(tau1, mid, maxk) < k:
            lo = mid
        else:
            hi = mid
    kmin = 0.5 * (lo + hi)
    deg = np.rint(power_law_sample(rng, tau1, kmin, maxk, n)).astype(int)
    return np.clip(deg, 1, maxk)


def community_sizes(rng, total, minc, maxc, tau2):
    sizes = []
    while sum(sizes) < total:
        sizes.append(int(round(power_law_sample(rng, tau2, minc, maxc, 1)[0])))
    excess = sum(sizes) - total
    while excess > 0:
        i = int(np.argmax(sizes))
        take = min(excess, sizes[i] - minc)
        if take <= 0:
            sizes.pop(i)
            excess = sum(sizes) - total
            continue
        sizes[i] -= take
        excess -= take
    if sum(sizes) < total:
        sizes[int(np.argmin(sizes))] += total - sum(sizes)
    return sizes


def assign_memberships(rng, shares, sizes):
    """shares: list of (node, internal_degree_share). Fills communities exactly."""
    members = [set() for _ in sizes]
    queue = list(range(len(shares)))
    rng.shuffle(queue)
    queue.sort(key=lambda s: -shares[s][1])
    slot_of = [dict() for _ in sizes]
    steps = 0
    while queue:
        steps += 1
        if steps > 200 * len(shares):
            raise RuntimeError("membership assignment did not converge")
        s = queue.pop(0)
        node, share = shares[s]
        fits = [c for c in range(len(sizes))
                if sizes[c] - 1 >= share and node not in members[c]]
        if not fits:
            raise RuntimeError("internal degree larger than every community")
        free = [c for c in fits if len(members[c]) < sizes[c]]
        if free:
            c = free[rng.integers(len(free))]
        else:
            c = fits[rng.integers(len(fits))]
            victim_node = list(members[c])[rng.integers(len(members[c]))]
            members[c].discard(victim_node)
            queue.append(slot_of[c].pop(victim_node))
        members[c].add(node)
        slot_of[c][node] = s
    return members


def configuration_pairs(rng, stubs):
    """Random stub matching that avoids loops and multi-edges by rematching leftovers."""
    edges = set()
    pool = list(stubs)
    for _ in range(50):
        if len(pool) < 2:
            break
        rng.shuffle(pool)
        leftover = []
        for i in range(0, len(pool) - 1, 2):
            a, b = pool[i], pool[i + 1]
            e = (min(a, b), max(a, b))
            if a == b or e in edges:
                leftover.extend([a, b])
            else:
                edges.add(e)
        if len(pool) % 2:
            leftover.append(pool[-1])
        if len(leftover) == len(pool):
            break
        pool = leftover
    return edges


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=1000)
    ap.add_argument("--k", type=float, default=20)
    ap.add_argument("--maxk", type=int, default=50)
    ap.add_argument("--mu", type=float, default=0.1)
    ap.add_argument("--t1", type=float, default=2.0)
    ap.add_argument("--t2", type=float, default=1.0)
    ap.add_argument("--minc", type=int, default=20)
    ap.add_argument("--maxc", type=int, default=100)
    ap.add_argument("--on", type=int, default=50)
    ap.add_argument("--om", type=int, default=2)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--out", required=True)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    n = args.n
    deg = degree_sequence(rng, n, args.k, args.maxk, args.t1)
    overlapping = set(rng.choice(n, size=args.on, replace=False).tolist())
    n_memb = [args.om if v in overlapping else 1 for v in range(n)]

    shares = []
    for v in range(n):
        internal = int(round((1.0 - args.mu) * deg[v]))
        per = max(1, internal // n_memb[v])
        for _ in range(n_memb[v]):
            shares.append((v, per))

    sizes = community_sizes(rng, len(shares), args.minc, args.maxc, args.t2)
    members = assign_memberships(rng, shares, sizes)

    edges = set()
    comms_of = [set() for _ in range(n)]
    for c, mem in enumerate(members):
        for v in mem:
            comms_of[v].add(c)
    share_of = {}
    for v, per in shares:
        share_of[v] = per

    internal_realized = np.zeros(n, dtype=int)
    for c, mem in enumerate(members):
        stubs = []
        for v in sorted(mem):
            stubs.extend([v] * share_of[v])
        if len(stubs) % 2:
            stubs.pop()
        for e in configuration_pairs(rng, stubs):
            if e not in edges:
                edges.add(e)
                internal_realized[e[0]] += 1
                internal_realized[e[1]] += 1

    ext_stubs = []
    for v in range(n):
        ext = max(0, int(deg[v]) - int(internal_realized[v]))
        ext_stubs.extend([v] * ext)
    pool = ext_stubs
    for _ in range(50):
        if len(pool) < 2:
            break
        rng.shuffle(pool)
        leftover = []
        for i in range(0, len(pool) - 1, 2):
            a, b = pool[i], pool[i + 1]
            e = (min(a, b), max(a, b))
            if a == b or e in edges or comms_of[a] & comms_of[b]:
                leftover.extend([a, b])
            else:
                edges.add(e)
        if len(pool) % 2:
            leftover.append(pool[-1])
        if len(leftover) == len(pool):
            break
        pool = leftover

    touched = set()
    for a, b in edges:
        touched.add(a)
        touched.add(b)
    if len(touched) != n:
        raise RuntimeError("generator left isolated vertices; try another seed")

    os.makedirs(args.out, exist_ok=True)
    with open(os.path.join(args.out, "network.dat"), "w") as f:
        adj = [[] for _ in range(n)]
        for a, b in edges:
            adj[a].append(b)
            adj[b].append(a)
        for v in range(n):
            for u in sorted(adj[v]):
                f.write(f"{v + 1}\t{u + 1}\n")
    with open(os.path.join(args.out, "community.dat"), "w") as f:
        for v in range(n):
            cs = " ".join(str(c + 1) for c in sorted(comms_of[v]))
            f.write(f"{v + 1}\t{cs}\n")

    ext_edges = sum(1 for a, b in edges if not (comms_of[a] & comms_of[b]))
    with open(os.path.join(args.out, "params.txt"), "w") as f:
        f.write(f"generator\tgen_lfr_fixture.py\n")
        for key in ("n", "k", "maxk", "mu", "t1", "t2", "minc", "maxc", "on", "om", "seed"):
            f.write(f"{key}\t{getattr(args, key)}\n")
        f.write(f"edges\t{len(edges)}\n")
        f.write(f"communities\t{len(members)}\n")
        f.write(f"realized_mu\t{ext_edges / len(edges):.4f}\n")


if __name__ == "__main__":
    main()
