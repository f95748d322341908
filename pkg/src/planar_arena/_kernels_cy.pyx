# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of _kernels_py: identical signatures and behaviour.

Adjacency comes in as Python ints (bitmasks) and is unpacked into C
arrays; vertex counts are capped at 32 per side, enough for every
declared budget (Hamiltonicity 24, minor hosts 30, patterns 10).
"""

from libc.stdlib cimport calloc, free

cdef extern from *:
    int __builtin_ctz(unsigned int) nogil
    int __builtin_popcount(unsigned int) nogil

BACKEND = "cython"


def hamiltonian_cycle(masks):
    cdef int n = len(masks)
    if n < 3:
        return False
    cdef unsigned int adj[32]
    cdef int i
    for i in range(n):
        if masks[i] == 0:
            return False
        adj[i] = masks[i]
    cdef unsigned long total = 1UL << n
    cdef unsigned int *dp = <unsigned int *> calloc(total, sizeof(unsigned int))
    if dp == NULL:
        raise MemoryError()
    cdef unsigned long mask
    cdef unsigned int ends, cand, full = <unsigned int> (total - 1)
    cdef int v, w
    cdef bint found = False
    dp[1] = 1
    for mask in range(1, total):
        if not (mask & 1):
            continue
        ends = dp[mask]
        if ends == 0:
            continue
        for v in range(n):
            if not (ends >> v) & 1:
                continue
            cand = adj[v] & ~<unsigned int>mask
            while cand:
                w = __builtin_ctz(cand)
                cand &= cand - 1
                dp[mask | (1u << w)] |= 1u << w
    if dp[full] & adj[0]:
        found = True
    free(dp)
    return bool(found)


def hamiltonian_path(masks, int s, int t):
    cdef int n = len(masks)
    if n == 1:
        return s == t
    if s == t:
        return False
    cdef unsigned int adj[32]
    cdef int i
    for i in range(n):
        adj[i] = masks[i]
    cdef unsigned long total = 1UL << n
    cdef unsigned int *dp = <unsigned int *> calloc(total, sizeof(unsigned int))
    if dp == NULL:
        raise MemoryError()
    cdef unsigned long mask
    cdef unsigned long smask = 1UL << s
    cdef unsigned int ends, cand, full = <unsigned int> (total - 1)
    cdef int v, w
    dp[smask] = <unsigned int> smask
    cdef bint found = False
    for mask in range(smask, total):
        if not (mask & smask):
            continue
        ends = dp[mask]
        if ends == 0:
            continue
        for v in range(n):
            if not (ends >> v) & 1:
                continue
            cand = adj[v] & ~<unsigned int>mask
            while cand:
                w = __builtin_ctz(cand)
                cand &= cand - 1
                dp[mask | (1u << w)] |= 1u << w
    if dp[full] & (1u << t):
        found = True
    free(dp)
    return bool(found)


cdef bint _subiso_rec(int i, unsigned int used, int pn, int hn,
                      unsigned int *host, unsigned int *pat,
                      int *hdeg, int *pdeg, int *order, int *assign) nogil:
    if i == pn:
        return True
    cdef int v = order[i]
    cdef unsigned int cand = ~used & ((1u << hn) - 1 if hn < 32 else 0xFFFFFFFFu)
    cdef int u, h
    for u in range(pn):
        if assign[u] >= 0 and (pat[v] >> u) & 1:
            cand &= host[assign[u]]
    cdef int dv = pdeg[v]
    while cand:
        h = __builtin_ctz(cand)
        cand &= cand - 1
        if hdeg[h] < dv:
            continue
        assign[v] = h
        if _subiso_rec(i + 1, used | (1u << h), pn, hn, host, pat, hdeg, pdeg, order, assign):
            return True
        assign[v] = -1
    return False


def subgraph_isomorphism(host_masks, pat_masks):
    cdef int hn = len(host_masks), pn = len(pat_masks)
    if pn > hn:
        return False
    if pn == 0:
        return True
    cdef unsigned int host[32]
    cdef unsigned int pat[32]
    cdef int hdeg[32]
    cdef int pdeg[32]
    cdef int order[32]
    cdef int assign[32]
    cdef int i, v, best
    cdef unsigned int placed = 0
    cdef int hsum = 0, psum = 0
    for i in range(hn):
        host[i] = host_masks[i]
        hdeg[i] = __builtin_popcount(host[i])
        hsum += hdeg[i]
    for i in range(pn):
        pat[i] = pat_masks[i]
        pdeg[i] = __builtin_popcount(pat[i])
        psum += pdeg[i]
        assign[i] = -1
    if psum > hsum:
        return False
    best = 0
    for i in range(pn):
        if pdeg[i] > pdeg[best]:
            best = i
    order[0] = best
    placed = 1u << best
    cdef int k, cnt, bk, bc, bd
    for k in range(1, pn):
        bk = -1
        bc = -1
        bd = -1
        for v in range(pn):
            if (placed >> v) & 1:
                continue
            cnt = __builtin_popcount(pat[v] & placed)
            if cnt > bc or (cnt == bc and pdeg[v] > bd):
                bk, bc, bd = v, cnt, pdeg[v]
        order[k] = bk
        placed |= 1u << bk
    return bool(_subiso_rec(0, 0, pn, hn, host, pat, hdeg, pdeg, order, assign))


cdef unsigned int _nbhd(unsigned int *adj, unsigned int setmask) nogil:
    cdef unsigned int out = 0, s = setmask
    cdef int v
    while s:
        v = __builtin_ctz(s)
        s &= s - 1
        out |= adj[v]
    return out & ~setmask


cdef struct StackItem:
    unsigned int cur
    unsigned int banned

cdef bint _minor_rec(int i, unsigned int used, int pn, int hn,
                     unsigned int *host, unsigned int *pat,
                     int *order, int *pos, unsigned int *branches,
                     StackItem *stack) nogil:
    if i == pn:
        return True
    cdef int v = order[i]
    cdef unsigned int allmask = (1u << hn) - 1 if hn < 32 else 0xFFFFFFFFu
    cdef unsigned int free_ = allmask & ~used
    cdef unsigned int req[32]
    cdef int nreq = 0, j, z, w
    for j in range(i):
        if (pat[v] >> order[j]) & 1:
            req[nreq] = branches[order[j]]
            nreq += 1
    cdef int nlater = 0
    for w in range(pn):
        if (pat[v] >> w) & 1 and pos[w] > i:
            nlater += 1
    cdef unsigned int roots
    if nreq > 0:
        roots = free_ & _nbhd(host, req[0])
    else:
        roots = free_
    cdef int limit = hn - __builtin_popcount(used) - (pn - i - 1)
    if limit < 1:
        return False
    cdef unsigned int tried_roots = 0
    cdef int r, top, u, k, pending
    cdef unsigned int S, banned, cand, taken, nb, nfree
    cdef bint ok
    while roots:
        r = __builtin_ctz(roots)
        roots &= roots - 1
        # banned-frontier enumeration of connected supersets of {r}
        top = 0
        stack[top].cur = 1u << r
        stack[top].banned = 0
        top += 1
        while top > 0:
            top -= 1
            S = stack[top].cur
            banned = stack[top].banned
            nb = _nbhd(host, S)
            ok = True
            for k in range(nreq):
                if not (nb & req[k]):
                    ok = False
                    break
            if ok:
                nfree = used | S
                if __builtin_popcount(nb & ~nfree) < nlater:
                    ok = False
            if ok:
                # every placed branch still expecting neighbors needs contacts
                for j in range(i):
                    w = order[j]
                    pending = 0
                    for z in range(pn):
                        if (pat[w] >> z) & 1 and pos[z] > i:
                            pending = 1
                            break
                    if pending and not (_nbhd(host, branches[w]) & ~nfree):
                        ok = False
                        break
            if ok:
                branches[v] = S
                if _minor_rec(i + 1, used | S, pn, hn, host, pat, order,
                              pos, branches, stack + 4096):
                    return True
            if __builtin_popcount(S) < limit:
                cand = nb & free_ & ~(1u << r) & ~tried_roots & ~banned
                taken = 0
                while cand:
                    u = __builtin_ctz(cand)
                    cand &= cand - 1
                    stack[top].cur = S | (1u << u)
                    stack[top].banned = banned | taken
                    top += 1
                    taken |= 1u << u
        tried_roots |= 1u << r
    branches[v] = 0
    return False


def minor_contains(host_masks, pat_masks):
    cdef int hn = len(host_masks), pn = len(pat_masks)
    if pn > hn:
        return False
    cdef unsigned int host[32]
    cdef unsigned int pat[32]
    cdef int order[32]
    cdef unsigned int branches[32]
    cdef int i
    cdef int hsum = 0, psum = 0
    for i in range(hn):
        host[i] = host_masks[i]
        hsum += __builtin_popcount(host[i])
    for i in range(pn):
        pat[i] = pat_masks[i]
        psum += __builtin_popcount(pat[i])
        branches[i] = 0
    if psum > hsum:
        return False
    # order pattern vertices greedily by attachment to the placed prefix
    cdef int pdeg[32]
    cdef int pos[32]
    for i in range(pn):
        pdeg[i] = __builtin_popcount(pat[i])
    cdef unsigned int placed = 0
    cdef int best, v, cnt, bc, bd
    best = 0
    for v in range(pn):
        if pdeg[v] > pdeg[best]:
            best = v
    order[0] = best
    placed = 1u << best
    for i in range(1, pn):
        best = -1
        bc = -1
        bd = -1
        for v in range(pn):
            if (placed >> v) & 1:
                continue
            cnt = __builtin_popcount(pat[v] & placed)
            if cnt > bc or (cnt == bc and pdeg[v] > bd):
                best, bc, bd = v, cnt, pdeg[v]
        order[i] = best
        placed |= 1u << best
    for i in range(pn):
        pos[order[i]] = i
    cdef StackItem *stack = <StackItem *> calloc(4096 * (pn + 1), sizeof(StackItem))
    if stack == NULL:
        raise MemoryError()
    cdef bint res = _minor_rec(0, 0, pn, hn, host, pat, order, pos, branches, stack)
    free(stack)
    return bool(res)
