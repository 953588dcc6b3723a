"""Array kernels behind the permutation-group code.

Every kernel exists twice: a numba ``@njit`` version and a plain numpy/python
version with identical results (same element order included).  The active
pair is chosen once at import time from ``LABANSYM_BACKEND``:

* ``numba`` (default when numba imports cleanly)
* ``numpy`` (forced fallback, also used when numba is missing)

Permutations are int64 rows; ``row[i]`` is the image of point ``i``.
Composition ``p∘q`` is ``p[q]`` (apply ``q`` first).
"""

import os

import numpy as np

try:
    import numba
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

_REQUESTED = os.environ.get("LABANSYM_BACKEND", "numba").strip().lower()
if _REQUESTED not in ("numba", "numpy"):
    raise ImportError(f"LABANSYM_BACKEND must be 'numba' or 'numpy', got {_REQUESTED!r}")

# codes are base-n integers; 15**15 < 2**63 but 16**16 is not
MAX_CODED_DEGREE = 15


# ---------------------------------------------------------------- numpy path

def closure_np(gens):
    gens = np.asarray(gens, dtype=np.int64)
    n = gens.shape[1]
    ident = np.arange(n, dtype=np.int64)
    out = [ident]
    seen = {ident.tobytes()}
    frontier = ident[None, :]
    while len(frontier):
        # row order (frontier element, generator) == queue-BFS order
        cand = frontier[:, gens].reshape(-1, n)
        fresh = []
        for row in cand:
            key = row.tobytes()
            if key not in seen:
                seen.add(key)
                fresh.append(row)
        out.extend(fresh)
        frontier = np.array(fresh, dtype=np.int64).reshape(-1, n)
    return np.array(out, dtype=np.int64)


def orbit_labels_np(elements):
    # in a group the orbit of i is exactly the column elements[:, i]
    return np.asarray(elements).min(axis=0)


def match_points_np(mapped, coords, tol):
    mapped = np.asarray(mapped, dtype=np.float64)
    coords = np.asarray(coords, dtype=np.float64)
    n = len(coords)
    d2 = ((mapped[:, None, :] - coords[None, :, :]) ** 2).sum(axis=-1)
    hit = d2 < tol * tol
    if not (hit.sum(axis=1) == 1).all():
        return np.full(n, -1, dtype=np.int64)
    perm = hit.argmax(axis=1).astype(np.int64)
    if len(np.unique(perm)) != n:
        return np.full(n, -1, dtype=np.int64)
    return perm


def automorphisms_np(adj):
    adj = np.asarray(adj, dtype=np.bool_)
    n = len(adj)
    img = [-1] * n
    used = [False] * n
    found = []

    def extend(depth):
        if depth == n:
            found.append(list(img))
            return
        for c in range(n):
            if used[c]:
                continue
            if all(adj[depth, j] == adj[c, img[j]] for j in range(depth)):
                img[depth] = c
                used[c] = True
                extend(depth + 1)
                used[c] = False
                img[depth] = -1

    extend(0)
    return np.array(found, dtype=np.int64).reshape(-1, n)


def cayley_table_np(elements):
    elements = np.asarray(elements, dtype=np.int64)
    m, n = elements.shape
    index = {row.tobytes(): k for k, row in enumerate(elements)}
    table = np.empty((m, m), dtype=np.int64)
    for a in range(m):
        prods = elements[a][elements]  # row b is elements[a] ∘ elements[b]
        for b in range(m):
            table[a, b] = index.get(prods[b].tobytes(), -1)
    return table


# ---------------------------------------------------------------- numba path

if numba is not None:

    @njit(cache=True)
    def _code(row):
        n = row.shape[0]
        c = 0
        for i in range(n - 1, -1, -1):
            c = c * n + row[i]
        return c

    @njit(cache=True)
    def _closure_nb(gens):
        k, n = gens.shape
        cap = 64
        out = np.empty((cap, n), dtype=np.int64)
        for i in range(n):
            out[0, i] = i
        seen = set()
        seen.add(_code(out[0]))
        count = 1
        head = 0
        while head < count:
            for g in range(k):
                if count == cap:
                    cap *= 2
                    bigger = np.empty((cap, n), dtype=np.int64)
                    bigger[:count] = out[:count]
                    out = bigger
                for i in range(n):
                    out[count, i] = out[head, gens[g, i]]
                c = _code(out[count])
                if c not in seen:
                    seen.add(c)
                    count += 1
            head += 1
        return out[:count].copy()

    @njit(cache=True)
    def _orbit_labels_nb(elements):
        m, n = elements.shape
        labels = np.empty(n, dtype=np.int64)
        for i in range(n):
            best = elements[0, i]
            for r in range(1, m):
                if elements[r, i] < best:
                    best = elements[r, i]
            labels[i] = best
        return labels

    @njit(cache=True)
    def _match_points_nb(mapped, coords, tol):
        n = coords.shape[0]
        perm = np.full(n, -1, dtype=np.int64)
        used = np.zeros(n, dtype=np.bool_)
        tol2 = tol * tol
        for i in range(n):
            hit = -1
            for j in range(n):
                d = 0.0
                for a in range(3):
                    t = mapped[i, a] - coords[j, a]
                    d += t * t
                if d < tol2:
                    if hit >= 0:
                        return np.full(n, -1, dtype=np.int64)
                    hit = j
            if hit < 0 or used[hit]:
                return np.full(n, -1, dtype=np.int64)
            used[hit] = True
            perm[i] = hit
        return perm

    @njit(cache=True)
    def _automorphisms_nb(adj):
        n = adj.shape[0]
        img = np.full(n, -1, dtype=np.int64)
        used = np.zeros(n, dtype=np.bool_)
        nxt = np.zeros(n + 1, dtype=np.int64)
        cap = 64
        out = np.empty((cap, n), dtype=np.int64)
        count = 0
        depth = 0
        while depth >= 0:
            if depth == n:
                if count == cap:
                    cap *= 2
                    bigger = np.empty((cap, n), dtype=np.int64)
                    bigger[:count] = out[:count]
                    out = bigger
                out[count] = img
                count += 1
                depth -= 1
                used[img[depth]] = False
                img[depth] = -1
                continue
            c = nxt[depth]
            placed = False
            while c < n:
                if not used[c]:
                    ok = True
                    for j in range(depth):
                        if adj[depth, j] != adj[c, img[j]]:
                            ok = False
                            break
                    if ok:
                        placed = True
                        break
                c += 1
            if placed:
                img[depth] = c
                used[c] = True
                nxt[depth] = c + 1
                depth += 1
                nxt[depth] = 0
            else:
                nxt[depth] = 0
                depth -= 1
                if depth >= 0:
                    used[img[depth]] = False
                    img[depth] = -1
        return out[:count].copy()

    @njit(cache=True)
    def _cayley_table_nb(elements):
        m, n = elements.shape
        index = dict()
        for k in range(m):
            index[_code(elements[k])] = k
        table = np.empty((m, m), dtype=np.int64)
        prod = np.empty(n, dtype=np.int64)
        for a in range(m):
            for b in range(m):
                for i in range(n):
                    prod[i] = elements[a, elements[b, i]]
                c = _code(prod)
                table[a, b] = index[c] if c in index else -1
        return table

    def closure_nb(gens):
        gens = np.ascontiguousarray(gens, dtype=np.int64)
        if gens.shape[1] > MAX_CODED_DEGREE:
            return closure_np(gens)
        return _closure_nb(gens)

    def orbit_labels_nb(elements):
        return _orbit_labels_nb(np.ascontiguousarray(elements, dtype=np.int64))

    def match_points_nb(mapped, coords, tol):
        return _match_points_nb(
            np.ascontiguousarray(mapped, dtype=np.float64),
            np.ascontiguousarray(coords, dtype=np.float64),
            float(tol),
        )

    def automorphisms_nb(adj):
        return _automorphisms_nb(np.ascontiguousarray(adj, dtype=np.bool_))

    def cayley_table_nb(elements):
        elements = np.ascontiguousarray(elements, dtype=np.int64)
        if elements.shape[1] > MAX_CODED_DEGREE:
            return cayley_table_np(elements)
        return _cayley_table_nb(elements)


# ---------------------------------------------------------------- dispatch

IMPLEMENTATIONS = {
    "numpy": {
        "closure": closure_np,
        "orbit_labels": orbit_labels_np,
        "match_points": match_points_np,
        "automorphisms": automorphisms_np,
        "cayley_table": cayley_table_np,
    },
}
if numba is not None:
    IMPLEMENTATIONS["numba"] = {
        "closure": closure_nb,
        "orbit_labels": orbit_labels_nb,
        "match_points": match_points_nb,
        "automorphisms": automorphisms_nb,
        "cayley_table": cayley_table_nb,
    }

BACKEND = _REQUESTED if _REQUESTED in IMPLEMENTATIONS else "numpy"
_active = IMPLEMENTATIONS[BACKEND]

closure = _active["closure"]
orbit_labels = _active["orbit_labels"]
match_points = _active["match_points"]
automorphisms = _active["automorphisms"]
cayley_table = _active["cayley_table"]
