"""Independent oracles and test corpora.

``ge_oracle`` recomputes Gorenstein Ext groups along a route that shares
nothing with the engine beyond exact linear algebra and the ``Module``
container: its own Hom solver, kernels and cokernels, a greedy (not
necessarily minimal) free resolution, a GP coresolution assembled from left
``add(A)``-approximations, and a mapping cone that turns the two into a
strict GP resolution

    0 -> Q^0 -> Q^1 + F_{d-1} -> ... -> Q^{d-1} + F_1 -> C' + F_0 -> X -> 0.

``ext_oracle`` is the injective-coresolution route of :mod:`gorkit.resolve`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .algebra import Algebra
from .modcat import Module

# ---------------------------------------------------------------------------
# a minimal, self-contained toolkit (deliberately not reusing modcat)
# ---------------------------------------------------------------------------


@dataclass
class _Map:
    src: Module
    tgt: Module
    blocks: list

    def __matmul__(self, other: "_Map") -> "_Map":
        p = self.src.p
        return _Map(other.src, self.tgt, [np.mod(a @ b, p) for a, b in zip(self.blocks, other.blocks)])

    def __add__(self, other):
        return _Map(self.src, self.tgt, [a + b for a, b in zip(self.blocks, other.blocks)])

    def scaled(self, c):
        return _Map(self.src, self.tgt, [c * b for b in self.blocks])

    def flat(self):
        return np.concatenate([np.mod(b, self.src.p).ravel() for b in self.blocks]) if self.blocks else np.zeros(0, np.int64)


def _zero_map(M, N):
    return _Map(M, N, [np.zeros((n, m), np.int64) for m, n in zip(M.dims, N.dims)])


def _arrow_mats(M):
    return M.action


def _homs(M: Module, N: Module) -> list[_Map]:
    """Intertwiners, solved with per-vertex unknowns stacked column-major."""
    A = M.algebra
    p = M.p
    q = A.quiver
    shapes = [(N.dims[v], M.dims[v]) for v in range(A.num_vertices)]
    starts = np.cumsum([0] + [a * b for a, b in shapes])
    n = int(starts[-1])
    if n == 0:
        return []
    rows = []
    for a in range(len(q.arrows)):
        i, j = q.src[a], q.tgt[a]
        Ma, Na = M.action[a], N.action[a]
        r = shapes[j][0] * shapes[i][1]
        if r == 0:
            continue
        E = np.zeros((r, n), np.int64)
        # column-major vec: vec(X Ma) = (Ma^T kron I) vec X, vec(Na X) = (I kron Na) vec X
        if shapes[j][1]:
            E[:, starts[j]:starts[j + 1]] += np.kron(Ma.T, np.eye(shapes[j][0], dtype=np.int64))
        if shapes[i][0]:
            E[:, starts[i]:starts[i + 1]] -= np.kron(np.eye(shapes[i][1], dtype=np.int64), Na)
        rows.append(E % p)
    K = linalg.kernel_basis(np.vstack(rows), p) if rows else np.eye(n, dtype=np.int64)
    out = []
    for c in range(K.shape[1]):
        col = K[:, c]
        out.append(_Map(M, N, [col[starts[v]:starts[v + 1]].reshape(shapes[v], order="F")
                               for v in range(A.num_vertices)]))
    return out


def _solve_combination(basis: list[_Map], goal: np.ndarray, p: int):
    if not basis:
        return None if goal.any() else []
    x = linalg.solve(np.stack([b.flat() for b in basis], axis=1), goal, p)
    return x


def _combine(basis, x, M, N) -> _Map:
    out = _zero_map(M, N)
    for c, b in zip(x, basis):
        if c:
            out = out + b.scaled(int(c))
    out.blocks = [np.mod(b, M.p) for b in out.blocks]
    return out


def _sub(M: Module, spans) -> tuple[Module, _Map]:
    p = M.p
    q = M.algebra.quiver
    acts = []
    for a in range(len(q.arrows)):
        i, j = q.src[a], q.tgt[a]
        img = np.mod(M.action[a] @ spans[i], p)
        if spans[j].shape[1] == 0:
            acts.append(np.zeros((0, spans[i].shape[1]), np.int64))
            continue
        x = linalg.solve(spans[j], img, p)
        acts.append(x.reshape(spans[j].shape[1], spans[i].shape[1]))
    S = Module(M.algebra, [s.shape[1] for s in spans], acts, check=False)
    return S, _Map(S, M, list(spans))


def _ker(f: _Map) -> tuple[Module, _Map]:
    return _sub(f.src, [linalg.kernel_basis(b, f.src.p) if b.size else np.eye(b.shape[1], dtype=np.int64)
                        for b in f.blocks])


def _coker(f: _Map) -> tuple[Module, _Map]:
    N = f.tgt
    p = N.p
    q = N.algebra.quiver
    projs = []
    for v, b in enumerate(f.blocks):
        if b.shape[1] == 0 or not b.any():
            projs.append(np.eye(N.dims[v], dtype=np.int64))
        else:
            projs.append(linalg.kernel_basis(b.T, p).T)
    acts = []
    for a in range(len(q.arrows)):
        i, j = q.src[a], q.tgt[a]
        sec = linalg.solve(projs[i], np.eye(projs[i].shape[0], dtype=np.int64), p)
        acts.append(np.mod(projs[j] @ N.action[a] @ sec, p) if projs[i].shape[0] else
                    np.zeros((projs[j].shape[0], 0), np.int64))
    C = Module(N.algebra, [m.shape[0] for m in projs], acts, check=False)
    return C, _Map(N, C, projs)


def _dsum(mods: list[Module]) -> tuple[Module, list[_Map], list[_Map]]:
    A = mods[0].algebra
    q = A.quiver
    dims = [sum(M.dims[v] for M in mods) for v in range(A.num_vertices)]
    acts = []
    for a in range(len(q.arrows)):
        i, j = q.src[a], q.tgt[a]
        m = np.zeros((dims[j], dims[i]), np.int64)
        r = c = 0
        for M in mods:
            m[r:r + M.dims[j], c:c + M.dims[i]] = M.action[a]
            r += M.dims[j]
            c += M.dims[i]
        acts.append(m)
    S = Module(A, dims, acts, check=False)
    ins, outs = [], []
    off = [0] * A.num_vertices
    for M in mods:
        ib = []
        for v in range(A.num_vertices):
            b = np.zeros((dims[v], M.dims[v]), np.int64)
            b[off[v]:off[v] + M.dims[v], :] = np.eye(M.dims[v], dtype=np.int64)
            off[v] += M.dims[v]
            ib.append(b)
        ins.append(_Map(M, S, ib))
        outs.append(_Map(S, M, [b.T.copy() for b in ib]))
    return S, ins, outs


def _free(A: Algebra, gens: list[int]) -> Module:
    """``A e_{g_1} + ...``: basis at vertex w lists paths w <- g per generator."""
    q = A.quiver
    layout = [[(g, b) for g, v in enumerate(gens) for b in A.paths_between(w, v)] for w in range(A.num_vertices)]
    where = [{gb: k for k, gb in enumerate(col)} for col in layout]
    acts = []
    for a in range(len(q.arrows)):
        i, j = q.src[a], q.tgt[a]
        m = np.zeros((len(layout[j]), len(layout[i])), np.int64)
        for c, (g, b) in enumerate(layout[i]):
            e = np.zeros(A.dimension, np.int64)
            e[b] = 1
            prod = A.multiply(A.arrow_elements[a], e)
            for k in np.flatnonzero(prod):
                m[where[j][(g, int(k))], c] = prod[k]
        acts.append(m)
    P = Module(A, [len(c) for c in layout], acts, check=False)
    P._oracle_layout = layout
    return P


def _free_map(P: Module, N: Module, images: list[np.ndarray]) -> _Map:
    A = P.algebra
    p = A.prime
    blocks = []
    for w, col in enumerate(P._oracle_layout):
        b = np.zeros((N.dims[w], len(col)), np.int64)
        for c, (g, path) in enumerate(col):
            bp = A.basis[path]
            m = np.eye(N.dims[bp.source], dtype=np.int64)
            for arr in bp.arrows:
                m = np.mod(N.action[arr] @ m, p)
            b[:, c] = np.mod(m @ images[g], p)
        blocks.append(b)
    return _Map(P, N, blocks)


def _greedy_cover(M: Module) -> tuple[Module, _Map]:
    """Free module on greedily chosen generators, with its surjection onto M."""
    A = M.algebra
    p = M.p
    gens, imgs = [], []
    spans = [np.zeros((M.dims[v], 0), np.int64) for v in range(A.num_vertices)]
    for v in range(A.num_vertices):
        for k in range(M.dims[v]):
            e = np.zeros((M.dims[v], 1), np.int64)
            e[k] = 1
            if spans[v].shape[1] and linalg.solve(spans[v], e[:, 0], p) is not None:
                continue
            gens.append(v)
            imgs.append(e[:, 0])
            P = _free(A, gens)
            f = _free_map(P, M, imgs)
            spans = [linalg.image_basis(b, p) if b.size else np.zeros((b.shape[0], 0), np.int64) for b in f.blocks]
    P = _free(A, gens)
    return P, _free_map(P, M, imgs)


def _rank(f: _Map) -> list[int]:
    return [linalg.rank(b, f.src.p) if b.size else 0 for b in f.blocks]


def _exact(f: _Map, g: _Map) -> bool:
    if (g @ f).flat().any():
        return False
    return all(a + b == d for a, b, d in zip(_rank(f), _rank(g), f.tgt.dims))


def _right_mult(A: Algebra, x, w: int, Pw: Module, Pv: Module) -> _Map:
    """``P_w -> P_v``, ``y -> y x`` for ``x`` in ``e_w A e_v``."""
    y = np.array([x[b] for _, b in Pv._oracle_layout[w]], np.int64)
    return _free_map(Pw, Pv, [y])


def _left_approximation(Z: Module) -> tuple[Module, _Map]:
    """Minimal left add(A)-approximation ``Z -> Q``, Q free."""
    A = Z.algebra
    p = Z.p
    q = A.quiver
    Ps = [_free(A, [v]) for v in range(A.num_vertices)]
    H = [_homs(Z, Ps[v]) for v in range(A.num_vertices)]
    gens, chosen = [], []
    for v in range(A.num_vertices):
        if not H[v]:
            continue
        rad = []
        for a in range(len(q.arrows)):
            # arrow a: s -> t gives y -> y a from P_t to P_s
            s, t = q.src[a], q.tgt[a]
            if s != v:
                continue
            rho = _right_mult(A, A.arrow_elements[a], t, Ps[t], Ps[v])
            rad += [(rho @ h).flat() for h in H[t]]
        Hm = np.stack([h.flat() for h in H[v]], axis=1)
        Rm = np.stack(rad, axis=1) if rad else np.zeros((Hm.shape[0], 0), np.int64)
        _, piv = linalg.rref(np.hstack([Rm, Hm]) if Rm.size else Hm, p)
        for c in piv:
            if c >= Rm.shape[1]:
                gens.append(v)
                chosen.append(H[v][c - Rm.shape[1]])
    Q = _free(A, gens)
    # stack the chosen maps: component g lands in the g-th summand of Q
    blocks = []
    for w in range(A.num_vertices):
        rows = []
        for g, h in enumerate(chosen):
            rows.append(h.blocks[w])
        blocks.append(np.vstack(rows) if rows else np.zeros((0, Z.dims[w]), np.int64))
    # Q's basis at w is ordered generator-major, matching the stacking order
    return Q, _Map(Z, Q, blocks)


class OracleError(RuntimeError):
    pass


def _lift(through: _Map, goal: _Map, tgt: Module) -> _Map:
    """Some ``h: through.tgt -> tgt`` with ``h o through = goal``."""
    basis = _homs(through.tgt, tgt)
    comp = [(h @ through) for h in basis]
    x = _solve_combination(comp, goal.flat(), through.src.p)
    if x is None:
        raise OracleError("lifting problem has no solution")
    return _combine(basis, x, through.tgt, tgt)


def strict_resolution_oracle(X: Module, d: int):
    """``(terms, maps)`` with ``terms[j] = G_j`` and ``maps[j]: G_j -> G_{j-1}``
    (``G_{-1} = X``), built by the mapping-cone route."""
    # free resolution F_0 .. F_{d-1}
    F, dF = [], []
    cur, into = X, None
    for j in range(d):
        P, eps = _greedy_cover(cur)
        F.append(P)
        dF.append(eps if j == 0 else into @ eps)  # F_j -> F_{j-1} (or X)
        K, inc = _ker(eps)
        cur, into = K, inc
    C, iF = cur, into  # C >-> F_{d-1}
    # coresolution C >-> Q^0 -> ... -> Q^{d-1} ->> C'
    Q, dQ = [], []
    Z, prev_q = C, None
    for j in range(d):
        Qj, iota = _left_approximation(Z)
        if any(r != m for r, m in zip(_rank(iota), Z.dims)):
            raise OracleError("left approximation is not injective (module not GP?)")
        Q.append(Qj)
        dQ.append(iota if j == 0 else iota @ prev_q)  # into Q^j
        Z, prev_q = _coker(iota)
    Cp, pi = Z, prev_q  # Q^{d-1} ->> C'
    steps = [dQ[j + 1] for j in range(d - 1)] + [pi]  # steps[j]: Q^j -> Q^{j+1} (Q^d = C')
    # chain map phi^j: Q^j -> F_{d-1-j}, phi^d: C' -> X
    phis = [_lift(dQ[0], iF, F[d - 1])]
    for j in range(d):
        goal = dF[d - 1 - j] @ phis[j]  # Q^j -> F_{d-2-j}
        tgt = X if d - 2 - j < 0 else F[d - 2 - j]
        phis.append(_lift(steps[j], goal, tgt))
    # cone terms
    terms, maps = {}, {}
    Qd = Q + [Cp]
    for j in range(d + 1):
        parts = [Qd[d - j]] + ([F[j]] if j < d else [])
        terms[j] = _dsum(parts)
    terms[-1] = (X, None, None)
    for j in range(d + 1):
        S, ins, outs = terms[j]
        T, tins, touts = terms[j - 1]
        sign = -1 if j % 2 else 1
        if j == 0:
            m = phis[d] @ outs[0] + dF[0] @ outs[1]
        else:
            m = tins[0] @ steps[d - j] @ outs[0] + tins[1] @ phis[d - j].scaled(sign) @ outs[0]
            if j < d:
                m = m + tins[1] @ dF[j] @ outs[1]
        m.blocks = [np.mod(b, X.p) for b in m.blocks]
        maps[j] = m
    mods = {j: terms[j][0] for j in terms}
    # exactness of 0 -> G_d -> ... -> G_0 -> X -> 0
    top = maps[d]
    if any(r != m for r, m in zip(_rank(top), top.src.dims)):
        raise OracleError("cone does not start injectively")
    for j in range(d, 0, -1):
        if not _exact(maps[j], maps[j - 1]):
            raise OracleError(f"cone not exact at G_{j - 1}")
    if any(r != m for r, m in zip(_rank(maps[0]), X.dims)):
        raise OracleError("cone does not end surjectively")
    return mods, maps


def ge_oracle(X: Module, Y: Module, k: int, cert) -> int:
    """Gorenstein Ext by the mapping-cone strict resolution."""
    d = cert.d
    if k < 0:
        raise ValueError("degree must be >= 0")
    p = X.p
    if d == 0:
        # every module is GP; the resolution is X itself
        return len(_homs(X, Y)) if k == 0 else 0
    if k > d:
        return 0
    G, D = strict_resolution_oracle(X, d)

    def cochains(j):
        return _homs(G[j], Y) if 0 <= j <= d else []

    def coboundary(j):  # Hom(G_j, Y) -> Hom(G_{j+1}, Y)
        src, tgt = cochains(j), cochains(j + 1)
        if not src or not tgt:
            return np.zeros((len(tgt), len(src)), np.int64)
        T = np.stack([t.flat() for t in tgt], axis=1)
        cols = [linalg.solve(T, (h @ D[j + 1]).flat(), p) for h in src]
        return np.stack(cols, axis=1)

    n = len(cochains(k))
    cur = coboundary(k)
    prev = coboundary(k - 1) if k >= 1 else np.zeros((n, 0), np.int64)
    z = n - (linalg.rank(cur, p) if cur.size else 0)
    b = linalg.rank(prev, p) if prev.size else 0
    return z - b


def ext_oracle(M: Module, N: Module, i: int) -> int:
    from .resolve import ext_via_injectives

    return ext_via_injectives(M, N, i)


# ---------------------------------------------------------------------------
# corpora
# ---------------------------------------------------------------------------


@dataclass
class Corpus:
    algebra: Algebra
    modules: dict = field(default_factory=dict)  # name -> Module
    seed: int = 0

    def items(self):
        return self.modules.items()

    def __iter__(self):
        return iter(self.modules.values())

    def __len__(self):
        return len(self.modules)

    def names(self):
        return list(self.modules)


def generate_corpus(A: Algebra, seed: int = 0, dim_cap: int = 6, random_count: int = 3,
                    extension_count: int = 3) -> Corpus:
    """Structural modules plus seeded random modules and extension middle terms."""
    from . import modcat as mc
    from .resolve import ext

    proj_dim = max(mc.vertex_projective(A, v).dim for v in range(A.num_vertices))
    if dim_cap < proj_dim:
        raise ValueError(f"dim_cap {dim_cap} below the largest projective dimension {proj_dim}")
    corpus = Corpus(A, {}, seed)
    seen = set()

    def add(name, M):
        if M.is_zero() or M.dim > dim_cap or M.key in seen:
            return
        seen.add(M.key)
        corpus.modules[name] = M

    V = A.quiver.vertices
    for v in range(A.num_vertices):
        add(f"P({V[v]})", mc.vertex_projective(A, v))
    for v in range(A.num_vertices):
        add(f"S({V[v]})", mc.simple(A, v))
    for v in range(A.num_vertices):
        add(f"I({V[v]})", mc.vertex_injective(A, v))
    for v in range(A.num_vertices):
        P = mc.vertex_projective(A, v)
        add(f"rad P({V[v]})", mc.radical(P)[0])
        add(f"P({V[v]})/soc", mc.cokernel(mc.socle(P)[1])[0])
        I = mc.vertex_injective(A, v)
        add(f"I({V[v]})/soc", mc.cokernel(mc.socle(I)[1])[0])
    rng = np.random.default_rng(seed)
    for r in range(random_count):
        add(f"random[{r}]", mc.random_module(A, rng))
    # middle terms of nonzero Ext^1 classes
    base = list(corpus.modules.values())
    made = 0
    for N in base:
        for M in base:
            if made >= extension_count:
                break
            if M.dim + N.dim > dim_cap:
                continue
            e = ext(N, M, 1)
            if not e.dimension:
                continue
            from .resolve import min_projective_resolution

            res = min_projective_resolution(N, 2)
            coeffs = linalg.random_matrix(1, e.dimension, rng, A.prime)[0]
            c = e.cocycle_basis[0].scale(int(coeffs[0]))
            for cc, b in zip(coeffs[1:], e.cocycle_basis[1:]):
                c = c + b.scale(int(cc))
            # the cocycle P_1 -> M factors through P_1 ->> Omega N
            alpha = mc.descend(c, res.covers[1])
            E, _, _ = mc.pushout(res.inclusions[1], alpha)
            before = len(corpus)
            add(f"ext[{made}]", E)
            made += len(corpus) - before
    return corpus
