"""Pure-Python kernels for the exact graph verifiers.

Graphs enter as adjacency bitmasks: ``masks[v]`` has bit ``w`` set iff
``{v, w}`` is an edge.  A compiled twin of this module lives in
``_kernels_cy.pyx``; :mod:`planar_arena.kernels` picks whichever is
importable.  Keep both implementations behaviourally identical.
"""

from __future__ import annotations

BACKEND = "python"


def _lsb_index(x: int) -> int:
    return (x & -x).bit_length() - 1


def hamiltonian_cycle(masks: list[int]) -> bool:
    """Bitmask DP over vertex subsets, paths anchored at vertex 0."""
    n = len(masks)
    if n < 3:
        return False
    if any(m == 0 for m in masks):
        return False
    full = (1 << n) - 1
    # mask of visited vertices -> bitmask of reachable endpoints
    cur = {1: 1}
    for _ in range(n - 1):
        nxt: dict[int, int] = {}
        for mask, ends in cur.items():
            e = ends
            while e:
                v = _lsb_index(e)
                e &= e - 1
                cand = masks[v] & ~mask
                while cand:
                    w = _lsb_index(cand)
                    cand &= cand - 1
                    nm = mask | (1 << w)
                    nxt[nm] = nxt.get(nm, 0) | (1 << w)
        if not nxt:
            return False
        cur = nxt
    return bool(cur.get(full, 0) & masks[0])


def hamiltonian_path(masks: list[int], s: int, t: int) -> bool:
    """True iff a Hamiltonian path from s to t exists."""
    n = len(masks)
    if n == 1:
        return s == t
    if s == t:
        return False
    full = (1 << n) - 1
    cur = {1 << s: 1 << s}
    for _ in range(n - 1):
        nxt: dict[int, int] = {}
        for mask, ends in cur.items():
            e = ends
            while e:
                v = _lsb_index(e)
                e &= e - 1
                cand = masks[v] & ~mask
                while cand:
                    w = _lsb_index(cand)
                    cand &= cand - 1
                    nm = mask | (1 << w)
                    nxt[nm] = nxt.get(nm, 0) | (1 << w)
        if not nxt:
            return False
        cur = nxt
    return bool(cur.get(full, 0) & (1 << t))


def subgraph_isomorphism(host: list[int], pat: list[int]) -> bool:
    """Backtracking subgraph-isomorphism decision with degree pruning."""
    hn, pn = len(host), len(pat)
    if pn > hn:
        return False
    if pn == 0:
        return True
    hdeg = [m.bit_count() for m in host]
    pdeg = [m.bit_count() for m in pat]
    if sum(pdeg) > sum(hdeg):
        return False

    # order pattern vertices: each step maximally attached to the prefix
    order = [max(range(pn), key=lambda v: pdeg[v])]
    placed = 1 << order[0]
    while len(order) < pn:
        best, best_key = -1, (-1, -1)
        for v in range(pn):
            if placed >> v & 1:
                continue
            key = ((pat[v] & placed).bit_count(), pdeg[v])
            if key > best_key:
                best, best_key = v, key
        order.append(best)
        placed |= 1 << best

    assign = [-1] * pn

    def rec(i: int, used: int) -> bool:
        if i == pn:
            return True
        v = order[i]
        cand = ~used & ((1 << hn) - 1)
        for u in range(pn):
            if assign[u] >= 0 and pat[v] >> u & 1:
                cand &= host[assign[u]]
        dv = pdeg[v]
        while cand:
            h = _lsb_index(cand)
            cand &= cand - 1
            if hdeg[h] < dv:
                continue
            assign[v] = h
            if rec(i + 1, used | (1 << h)):
                return True
            assign[v] = -1
        return False

    return rec(0, 0)


def _neighborhood(masks: list[int], setmask: int) -> int:
    out = 0
    s = setmask
    while s:
        v = _lsb_index(s)
        s &= s - 1
        out |= masks[v]
    return out & ~setmask


def minor_contains(host: list[int], pat: list[int]) -> bool:
    """Branch-set search: is `pat` a minor of `host`?

    Intended for small fixed patterns with minimum degree >= 3 (the
    callers reduce the host first, see graphs.is_partial_3tree).
    Prunes: a candidate branch set must keep one free contact vertex per
    still-unplaced pattern neighbor (disjointness makes contacts
    distinct), and every placed branch with unplaced pattern neighbors
    must keep a nonempty free neighborhood.
    """
    hn, pn = len(host), len(pat)
    if pn > hn:
        return False
    hedges = sum(m.bit_count() for m in host) // 2
    pedges = sum(m.bit_count() for m in pat) // 2
    if pedges > hedges:
        return False

    # order pattern vertices greedily by attachment to the placed prefix
    order = [max(range(pn), key=lambda v: pat[v].bit_count())]
    placed = 1 << order[0]
    while len(order) < pn:
        best = max(
            (v for v in range(pn) if not placed >> v & 1),
            key=lambda v: ((pat[v] & placed).bit_count(), pat[v].bit_count()),
        )
        order.append(best)
        placed |= 1 << best
    pos = {v: i for i, v in enumerate(order)}
    branches = [0] * pn
    allmask = (1 << hn) - 1

    def connected_supersets(seed: int, free: int, limit: int):
        out = [(seed, 0)]
        while out:
            cur, banned = out.pop()
            yield cur
            if cur.bit_count() >= limit:
                continue
            cand = _neighborhood(host, cur) & free & ~banned
            taken = 0
            while cand:
                u = _lsb_index(cand)
                cand &= cand - 1
                out.append((cur | (1 << u), banned | taken))
                taken |= 1 << u
        return

    def rec(i: int, used: int) -> bool:
        if i == pn:
            return True
        v = order[i]
        free = allmask & ~used
        req = [branches[order[j]] for j in range(i) if pat[v] >> order[j] & 1]
        later = [w for w in range(pn) if pat[v] >> w & 1 and pos[w] > i]
        roots = free & (_neighborhood(host, req[0]) if req else allmask)
        limit = hn - used.bit_count() - (pn - i - 1)
        if limit < 1:
            return False
        tried_roots = 0
        while roots:
            r = _lsb_index(roots)
            roots &= roots - 1
            for S in connected_supersets(1 << r, free & ~tried_roots & ~(1 << r), limit):
                nb = _neighborhood(host, S)
                if any(not (nb & b) for b in req):
                    continue
                nfree = used | S
                if (nb & ~nfree).bit_count() < len(later):
                    continue
                # every placed branch still expecting neighbors needs contacts
                feasible = True
                for j in range(i):
                    w = order[j]
                    pending = sum(
                        1 for z in range(pn) if pat[w] >> z & 1 and pos[z] > i
                    )
                    if pending and not (_neighborhood(host, branches[w]) & ~nfree):
                        feasible = False
                        break
                if not feasible:
                    continue
                branches[v] = S
                if rec(i + 1, used | S):
                    return True
            tried_roots |= 1 << r
        branches[v] = 0
        return False

    return rec(0, 0)
