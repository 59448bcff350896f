# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled solver kernel: iterative retrograde evaluation over a dense
win/loss table indexed by the packed weight vector.

Table entries: 0 = unsolved, 1 = winning, 2 = losing (for the player to
move). The traversal keeps an explicit frame stack whose depth is bounded
by the total weight of the root state; per frame it stores the resumable
odometer over one vertex's removal vectors, so memory stays O(depth)
instead of O(edges of the game DAG).
"""

DEF MAXJ = 8  # max incident edges per vertex (4-edge catalog needs 4)


def max_incident_edges():
    return MAXJ


def solve_dense(signed char[::1] table,
                long long[::1] strides,
                int[::1] dims,
                int[::1] vert_off,
                int[::1] vert_edge,
                long long root,
                long long[::1] f_idx,
                long long[::1] f_succ,
                int[::1] f_v,
                int[::1] f_j,
                int[::1] f_n,
                int[::1] f_c):
    """Solve ``root`` (a packed state index), filling ``table`` along the way.

    ``vert_off``/``vert_edge`` give each vertex's incident edge indices in
    flattened CSR form. The f_* arrays are preallocated frame storage whose
    length must exceed the root's total weight.
    """
    cdef int nv = vert_off.shape[0] - 1
    cdef Py_ssize_t sp, fp, base
    cdef long long idx, succ, stride_e, cw
    cdef int v, j, p, e
    cdef signed char r
    cdef bint have

    if table[root]:
        return table[root]

    f_idx[0] = root
    f_v[0] = -1
    f_j[0] = 0
    f_succ[0] = root
    sp = 1

    while sp > 0:
        fp = sp - 1
        base = fp * MAXJ
        idx = f_idx[fp]
        v = f_v[fp]
        j = f_j[fp]
        succ = f_succ[fp]

        while True:
            if v >= 0:
                r = table[succ]
                if r == 2:
                    # Some move leaves the opponent losing.
                    table[idx] = 1
                    sp -= 1
                    break
                if r == 0:
                    # Unsolved child: save the cursor and descend. The child
                    # is re-checked from the saved cursor when we resume.
                    f_v[fp] = v
                    f_j[fp] = j
                    f_succ[fp] = succ
                    f_idx[sp] = succ
                    f_v[sp] = -1
                    f_j[sp] = 0
                    f_succ[sp] = succ
                    sp += 1
                    break
                # r == 1: child winning, fall through and advance the cursor.

            # --- advance cursor to the next legal successor ---
            have = False
            while True:
                if v >= 0:
                    p = 0
                    while p < j:
                        e = vert_edge[vert_off[v] + p]
                        stride_e = strides[e]
                        if f_n[base + p] < f_c[base + p]:
                            f_n[base + p] += 1
                            succ += stride_e
                            break
                        succ -= f_c[base + p] * stride_e
                        f_n[base + p] = 0
                        p += 1
                    if p < j:
                        if succ != idx:  # skip the zero-removal vector
                            have = True
                            break
                        continue
                # First vertex, or the current one is exhausted.
                v += 1
                while v < nv:
                    j = vert_off[v + 1] - vert_off[v]
                    succ = idx
                    for p in range(j):
                        e = vert_edge[vert_off[v] + p]
                        cw = (idx / strides[e]) % dims[e]
                        f_c[base + p] = <int> cw
                        f_n[base + p] = 0
                        succ -= cw * strides[e]
                    if succ != idx:
                        break
                    v += 1  # no removable weight at this vertex
                if v >= nv:
                    break
                have = True
                break

            if not have:
                # No move reaches a losing state (or no move exists at all).
                table[idx] = 2
                sp -= 1
                break

    return table[root]
