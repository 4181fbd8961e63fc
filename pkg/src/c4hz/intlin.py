"""Exact integer linear algebra.

Smith normal form with transformation matrices, homology of two-step
complexes of free abelian groups, maps induced on homology, and lattice
arithmetic (integer solving, kernels, subgroup comparison) on top of it.
Everything runs on plain Python ints, so there is no overflow anywhere.

>>> S, U, V = snf(Mat.from_rows([[2, 4], [6, 8]]))
>>> S.rows()
[[2, 0], [0, 4]]
>>> (U * Mat.from_rows([[2, 4], [6, 8]]) * V).rows() == S.rows()
True
"""

from __future__ import annotations


def xgcd(a, b):
    """Return (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


class Mat:
    """Dense integer matrix; m rows, n cols, entries a[i][j]."""

    __slots__ = ("m", "n", "a")

    def __init__(self, m, n, a):
        self.m = m
        self.n = n
        self.a = a

    @staticmethod
    def zeros(m, n):
        return Mat(m, n, [[0] * n for _ in range(m)])

    @staticmethod
    def identity(n):
        return Mat(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def from_rows(rows, n=None):
        m = len(rows)
        if m:
            n = len(rows[0])
        elif n is None:
            n = 0
        return Mat(m, n, [list(r) for r in rows])

    @staticmethod
    def diag(entries, m=None, n=None):
        m = len(entries) if m is None else m
        n = len(entries) if n is None else n
        a = [[0] * n for _ in range(m)]
        for i, d in enumerate(entries):
            a[i][i] = d
        return Mat(m, n, a)

    def rows(self):
        return [list(r) for r in self.a]

    def copy(self):
        return Mat(self.m, self.n, [list(r) for r in self.a])

    def transpose(self):
        return Mat(self.n, self.m, [[self.a[i][j] for i in range(self.m)] for j in range(self.n)])

    def col(self, j):
        return [self.a[i][j] for i in range(self.m)]

    def cols(self):
        return [self.col(j) for j in range(self.n)]

    def submatrix(self, row_idx, col_idx):
        return Mat(len(row_idx), len(col_idx), [[self.a[i][j] for j in col_idx] for i in row_idx])

    def hstack(self, other):
        assert self.m == other.m
        return Mat(self.m, self.n + other.n, [self.a[i] + other.a[i] for i in range(self.m)])

    @staticmethod
    def from_cols(cols, m=None):
        n = len(cols)
        if n:
            m = len(cols[0])
        elif m is None:
            m = 0
        return Mat(m, n, [[cols[j][i] for j in range(n)] for i in range(m)])

    def is_zero(self):
        return all(x == 0 for row in self.a for x in row)

    def __eq__(self, other):
        return (isinstance(other, Mat) and self.m == other.m and self.n == other.n
                and self.a == other.a)

    def __hash__(self):
        return hash((self.m, self.n, tuple(tuple(r) for r in self.a)))

    def __mul__(self, other):
        if isinstance(other, Mat):
            assert self.n == other.m, (self.m, self.n, other.m, other.n)
            ot = [other.col(j) for j in range(other.n)]
            a = [[sum(ri[k] * cj[k] for k in range(self.n)) for cj in ot] for ri in self.a]
            return Mat(self.m, other.n, a)
        raise TypeError(other)

    def __add__(self, other):
        assert self.m == other.m and self.n == other.n
        return Mat(self.m, self.n,
                   [[self.a[i][j] + other.a[i][j] for j in range(self.n)] for i in range(self.m)])

    def __sub__(self, other):
        assert self.m == other.m and self.n == other.n
        return Mat(self.m, self.n,
                   [[self.a[i][j] - other.a[i][j] for j in range(self.n)] for i in range(self.m)])

    def scale(self, c):
        return Mat(self.m, self.n, [[c * x for x in row] for row in self.a])

    def apply(self, v):
        assert len(v) == self.n, (self.m, self.n, len(v))
        return [sum(row[k] * v[k] for k in range(self.n)) for row in self.a]

    def __repr__(self):
        return "Mat(%d,%d,%r)" % (self.m, self.n, self.a)


def _snf_in_place(S, U, V, Vinv, Uinv):
    """Reduce S to Smith form by unimodular row/col ops, mirrored on the
    transforms. U, Uinv, V, Vinv may be None when the caller does not need
    them. Maintains U*orig*V = S, Uinv*U = I, V*Vinv = I."""
    a = S.a
    m, n = S.m, S.n

    def row_op(i, t, q):
        # row_i -= q * row_t
        ai, at = a[i], a[t]
        for j in range(n):
            ai[j] -= q * at[j]
        if U is not None:
            ui, ut = U.a[i], U.a[t]
            for j in range(m):
                ui[j] -= q * ut[j]
        if Uinv is not None:
            for r in Uinv.a:
                r[t] += q * r[i]

    def col_op(j, t, q):
        # col_j -= q * col_t
        for r in a:
            r[j] -= q * r[t]
        if V is not None:
            for r in V.a:
                r[j] -= q * r[t]
        if Vinv is not None:
            vt, vj = Vinv.a[t], Vinv.a[j]
            for k in range(n):
                vt[k] += q * vj[k]

    def row_swap(i, t):
        a[i], a[t] = a[t], a[i]
        if U is not None:
            U.a[i], U.a[t] = U.a[t], U.a[i]
        if Uinv is not None:
            for r in Uinv.a:
                r[i], r[t] = r[t], r[i]

    def col_swap(j, t):
        for r in a:
            r[j], r[t] = r[t], r[j]
        if V is not None:
            for r in V.a:
                r[j], r[t] = r[t], r[j]
        if Vinv is not None:
            Vinv.a[j], Vinv.a[t] = Vinv.a[t], Vinv.a[j]

    def row_negate(i):
        a[i] = [-x for x in a[i]]
        if U is not None:
            U.a[i] = [-x for x in U.a[i]]
        if Uinv is not None:
            for r in Uinv.a:
                r[i] = -r[i]

    t = 0
    while t < m and t < n:
        # pick smallest nonzero entry in the trailing submatrix as pivot
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                x = a[i][j]
                if x and (piv is None or abs(x) < piv[0]):
                    piv = (abs(x), i, j)
        if piv is None:
            break
        _, pi, pj = piv
        if pi != t:
            row_swap(pi, t)
        if pj != t:
            col_swap(pj, t)
        # clear row t and column t; Euclidean steps shrink the pivot
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, m):
                x = a[i][t]
                if x == 0:
                    continue
                q = x // a[t][t]
                row_op(i, t, q)
                if a[i][t]:
                    row_swap(i, t)
                    dirty = True
            for j in range(t + 1, n):
                x = a[t][j]
                if x == 0:
                    continue
                q = x // a[t][t]
                col_op(j, t, q)
                if a[t][j]:
                    col_swap(j, t)
                    dirty = True
        # pivot must divide the rest of the submatrix
        p = a[t][t]
        bad = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if a[i][j] % p:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            row_op(t, bad, -1)  # row_t += row_bad, then redo this pivot
            continue
        if p < 0:
            row_negate(t)
        t += 1


def snf(M):
    """Smith normal form. Returns (S, U, V) with U*M*V = S, S diagonal with
    each diagonal entry dividing the next, U and V unimodular."""
    S, U, V, _, _ = snf_full(M, want_uinv=False, want_vinv=False)
    return S, U, V


def snf_full(M, want_uinv=True, want_vinv=True):
    """Like snf but also returns inverses of the transforms on demand:
    (S, U, V, Uinv, Vinv)."""
    S = M.copy()
    U = Mat.identity(M.m)
    V = Mat.identity(M.n)
    Uinv = Mat.identity(M.m) if want_uinv else None
    Vinv = Mat.identity(M.n) if want_vinv else None
    _snf_in_place(S, U, V, Vinv, Uinv)
    return S, U, V, Uinv, Vinv


def snf_diagonal(M):
    """Just the invariant factors (nonzero diagonal of the Smith form)."""
    S = M.copy()
    _snf_in_place(S, None, None, None, None)
    out = []
    for i in range(min(S.m, S.n)):
        if S.a[i][i]:
            out.append(S.a[i][i])
    return out


def solve(M, b):
    """One integer solution x of M*x = b, or None when no solution exists."""
    S, U, V, _, _ = snf_full(M, want_uinv=False, want_vinv=False)
    c = U.apply(b)
    y = [0] * M.n
    r = min(M.m, M.n)
    for i in range(M.m):
        d = S.a[i][i] if i < r else 0
        if d:
            if c[i] % d:
                return None
            y[i] = c[i] // d
        elif c[i]:
            return None
    return V.apply(y)


def kernel_basis(M):
    """Matrix whose columns are a lattice basis of ker(M) in Z^n."""
    S, _, V, _, _ = snf_full(M, want_uinv=False, want_vinv=False)
    r = 0
    for i in range(min(M.m, M.n)):
        if S.a[i][i]:
            r += 1
    cols = [V.col(j) for j in range(r, M.n)]
    return Mat.from_cols(cols, m=M.n)


def col_span_basis(A):
    """Matrix whose columns form a basis of the column lattice of A."""
    S, U, _, Uinv, _ = snf_full(A, want_vinv=False)
    cols = []
    for i in range(min(A.m, A.n)):
        d = S.a[i][i]
        if d:
            cols.append([d * Uinv.a[k][i] for k in range(A.m)])
    return Mat.from_cols(cols, m=A.m)


class FinAbGroup:
    """Finitely generated abelian group: invariant factors plus free rank.

    Coordinates of elements are ordered torsion first (factors ascending,
    each dividing the next, all >= 2) and then free."""

    __slots__ = ("free_rank", "torsion")

    def __init__(self, free_rank, torsion=()):
        torsion = tuple(int(t) for t in torsion)
        for t in torsion:
            assert t >= 2
        for i in range(len(torsion) - 1):
            assert torsion[i + 1] % torsion[i] == 0, torsion
        self.free_rank = int(free_rank)
        self.torsion = torsion

    def orders(self):
        """Per-coordinate orders; 0 stands for infinite."""
        return list(self.torsion) + [0] * self.free_rank

    def ncoords(self):
        return len(self.torsion) + self.free_rank

    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def order(self):
        """Group order, or 0 when infinite."""
        if self.free_rank:
            return 0
        n = 1
        for t in self.torsion:
            n *= t
        return n

    def reduce(self, v):
        """Normal form of an element coordinate vector."""
        out = list(v)
        for i, t in enumerate(self.torsion):
            out[i] %= t
        return out

    def to_json(self):
        return {"free": self.free_rank, "torsion": list(self.torsion)}

    @staticmethod
    def from_json(d):
        return FinAbGroup(d["free"], d["torsion"])

    @staticmethod
    def from_invariants(diag, ambient_rank):
        """Group Z^ambient_rank / (diagonal relations): 1s drop out, values
        >= 2 give torsion, missing diagonal positions stay free."""
        torsion = sorted(abs(d) for d in diag if abs(d) >= 2)
        nontrivial = sum(1 for d in diag if d != 0)
        return FinAbGroup(ambient_rank - nontrivial, torsion)

    def __eq__(self, other):
        return (isinstance(other, FinAbGroup)
                and self.free_rank == other.free_rank
                and self.torsion == other.torsion)

    def __hash__(self):
        return hash((self.free_rank, self.torsion))

    def __repr__(self):
        parts = ["Z/%d" % t for t in self.torsion]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append("Z^%d" % self.free_rank)
        return " + ".join(parts) if parts else "0"


def quotient_invariants(A, B):
    """FinAbGroup of span(A)/span(B) for column lattices with span(B)
    contained in span(A). Raises ValueError if containment fails."""
    P = col_span_basis(A)
    if P.n == 0:
        if not B.is_zero():
            raise ValueError("quotient: B not contained in span(A)")
        return FinAbGroup(0)
    X_cols = []
    for j in range(B.n):
        x = solve(P, B.col(j))
        if x is None:
            raise ValueError("quotient: B not contained in span(A)")
        X_cols.append(x)
    X = Mat.from_cols(X_cols, m=P.n)
    return FinAbGroup.from_invariants(snf_diagonal(X), P.n)


def relation_matrix(orders):
    """Columns generating the relation lattice of a group presented on
    coordinates with the given orders (0 = free)."""
    n = len(orders)
    cols = []
    for i, t in enumerate(orders):
        if t:
            col = [0] * n
            col[i] = t
            cols.append(col)
    return Mat.from_cols(cols, m=n)


def subgroup_invariants(gens, orders):
    """Iso class of the subgroup generated by the columns of gens inside the
    group with the given coordinate orders."""
    R = relation_matrix(orders)
    return quotient_invariants(gens.hstack(R), R)


def subgroup_contains(gens, v, orders):
    """Does v lie in the subgroup generated by the columns of gens?"""
    R = relation_matrix(orders)
    return solve(gens.hstack(R), v) is not None


def subgroup_eq(gens_a, gens_b, orders):
    """Equality of two subgroups given by generator columns."""
    return (all(subgroup_contains(gens_b, gens_a.col(j), orders) for j in range(gens_a.n))
            and all(subgroup_contains(gens_a, gens_b.col(j), orders) for j in range(gens_b.n)))


def hom_is_well_defined(f, src_orders, tgt_orders):
    """Check f kills the source relations modulo the target relations."""
    R2 = relation_matrix(tgt_orders)
    for i, t in enumerate(src_orders):
        if t:
            col = [t * f.a[k][i] for k in range(f.m)]
            if solve(R2, col) is None:
                return False
    return True


def hom_invariants(f, src_orders, tgt_orders):
    """Isomorphism invariants of a homomorphism between presented groups:
    dict with iso classes of kernel, image and cokernel. Basis independent."""
    assert hom_is_well_defined(f, src_orders, tgt_orders)
    R1 = relation_matrix(src_orders)
    R2 = relation_matrix(tgt_orders)
    im = quotient_invariants(f.hstack(R2), R2)
    coker = FinAbGroup.from_invariants(snf_diagonal(f.hstack(R2)), f.m)
    # kernel: x with f*x in span(R2); project ker[f | R2] to the x block
    big = f.hstack(R2.scale(-1))
    KB = kernel_basis(big)
    proj = KB.submatrix(range(f.n), range(KB.n))
    ker = quotient_invariants(proj.hstack(R1), R1)
    return {"ker": ker, "im": im, "coker": coker}


def fixed_rank(w, orders):
    """Free rank of the kernel of (w - id) on the presented group."""
    n = len(orders)
    assert w.m == w.n == n
    return hom_invariants(w - Mat.identity(n), orders, orders)["ker"].free_rank


class Homology:
    """Homology of Z^p --d_in--> Z^n --d_out--> Z^q with a chosen basis.

    group: the FinAbGroup; gens: ambient representatives of its coordinate
    generators; project maps any cycle vector to group coordinates."""

    __slots__ = ("group", "gens", "ambient_dim", "d_in", "d_out",
                 "_vinv_rows", "_ux", "_factors", "_positions", "_kmat")

    def __init__(self, group, gens, ambient_dim, d_in, d_out,
                 vinv_rows, ux, factors, positions, kmat):
        self.group = group
        self.gens = gens
        self.ambient_dim = ambient_dim
        self.d_in = d_in
        self.d_out = d_out
        self._vinv_rows = vinv_rows
        self._ux = ux
        self._factors = factors
        self._positions = positions
        self._kmat = kmat

    def project(self, v):
        """Group coordinates of a cycle v (v must satisfy d_out*v = 0 and is
        only well defined modulo im(d_in))."""
        assert len(v) == self.ambient_dim
        y = [sum(row[k] * v[k] for k in range(self.ambient_dim)) for row in self._vinv_rows]
        h = self._ux.apply(y)
        out = []
        for i in self._positions:
            e = self._factors[i]
            out.append(h[i] % e if e >= 2 else h[i])
        return out

    def kernel_matrix(self):
        """Columns: lattice basis of the cycle lattice ker(d_out)."""
        return self._kmat


def homology(d_in, d_out):
    """Homology ker(d_out)/im(d_in) with projection data.

    d_in is n x p, d_out is q x n; requires d_out*d_in = 0."""
    n = d_out.n
    assert d_in.m == n, (d_in.m, n)
    if not (d_out * d_in).is_zero():
        raise ValueError("not a complex: d_out * d_in != 0")
    S_o, _, V_o, _, Vinv_o = snf_full(d_out, want_uinv=False)
    r_o = 0
    for i in range(min(d_out.m, n)):
        if S_o.a[i][i]:
            r_o += 1
    k = n - r_o
    K = Mat.from_cols([V_o.col(j) for j in range(r_o, n)], m=n)
    vinv_rows = [Vinv_o.a[i] for i in range(r_o, n)]
    # express im(d_in) in kernel coordinates
    W = [[sum(Vinv_o.a[i][t] * d_in.a[t][j] for t in range(n)) for j in range(d_in.n)]
         for i in range(n)]
    for i in range(r_o):
        assert all(x == 0 for x in W[i])
    X = Mat(k, d_in.n, [W[r_o + i] for i in range(k)])
    S_x, U_x, _, Uinv_x, _ = snf_full(X, want_vinv=False)
    factors = [S_x.a[i][i] if i < min(k, X.n) else 0 for i in range(k)]
    s = sum(1 for e in factors if e)
    positions = [i for i in range(k) if factors[i] >= 2] + list(range(s, k))
    group = FinAbGroup(k - s, [factors[i] for i in range(k) if factors[i] >= 2])
    G_all = K * Uinv_x
    gens = [G_all.col(i) for i in positions]
    return Homology(group, gens, n, d_in, d_out, vinv_rows, U_x, factors, positions, K)


def induced_map(f, src, tgt):
    """Matrix of the map induced by the chain-level f on chosen homology
    bases. f maps the source ambient lattice to the target ambient lattice;
    it must send cycles to cycles and boundaries to boundaries."""
    assert f.n == src.ambient_dim and f.m == tgt.ambient_dim
    FK = f * src.kernel_matrix()
    if not (tgt.d_out * FK).is_zero():
        raise ValueError("chain map does not send cycles to cycles")
    FB = f * src.d_in
    for j in range(FB.n):
        if solve(tgt.d_in, FB.col(j)) is None:
            raise ValueError("chain map does not send boundaries to boundaries")
    cols = [tgt.project(f.apply(g)) for g in src.gens]
    return Mat.from_cols(cols, m=tgt.group.ncoords())
