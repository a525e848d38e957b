"""Small linear-algebra and projective-geometry helpers used to derive the
shipped catalog generators. Only needed to regenerate data files."""

from __future__ import annotations

import itertools

from edgeprim.fields import GF


class PrimeField:
    """GF(p) with the same interface as :class:`edgeprim.fields.GF`."""

    def __init__(self, p):
        self.p = self.q = p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError
        return pow(a, self.p - 2, self.p)


def field(q):
    pf = GF(q)
    return PrimeField(q) if pf.f == 1 else pf


def mat_mul(F, A, B):
    n, m, k = len(A), len(B), len(B[0])
    out = [[0] * k for _ in range(n)]
    for i in range(n):
        for t in range(m):
            a = A[i][t]
            if a:
                row = B[t]
                for j in range(k):
                    if row[j]:
                        out[i][j] = F.add(out[i][j], F.mul(a, row[j]))
    return out


def vec_mat(F, v, M):
    out = [0] * len(M[0])
    for t, a in enumerate(v):
        if a:
            row = M[t]
            for j in range(len(out)):
                if row[j]:
                    out[j] = F.add(out[j], F.mul(a, row[j]))
    return out


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(A):
    return [list(r) for r in zip(*A)]


def mat_inv(F, A):
    n = len(A)
    M = [list(A[i]) + identity(n)[i] for i in range(n)]
    for c in range(n):
        piv = next(r for r in range(c, n) if M[r][c])
        M[c], M[piv] = M[piv], M[c]
        iv = F.inv(M[c][c])
        M[c] = [F.mul(iv, x) for x in M[c]]
        for r in range(n):
            if r != c and M[r][c]:
                f = M[r][c]
                M[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[r], M[c])]
    return [row[n:] for row in M]


def normalize(F, v):
    """Scale so the first nonzero coordinate is 1."""
    for a in v:
        if a:
            iv = F.inv(a)
            return tuple(F.mul(iv, x) for x in v)
    raise ValueError("zero vector")


def points(F, n):
    """Normalized representatives of the 1-spaces of F^n."""
    out = []
    for v in itertools.product(range(F.q), repeat=n):
        if any(v) and normalize(F, v) == v:
            out.append(v)
    return out


def rref(F, rows):
    """Reduced row echelon basis (tuple of tuples) of the span of ``rows``."""
    M = [list(r) for r in rows]
    out = []
    col = 0
    ncols = len(M[0])
    r = 0
    while r < len(M) and col < ncols:
        piv = next((i for i in range(r, len(M)) if M[i][col]), None)
        if piv is None:
            col += 1
            continue
        M[r], M[piv] = M[piv], M[r]
        iv = F.inv(M[r][col])
        M[r] = [F.mul(iv, x) for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][col]:
                f = M[i][col]
                M[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[i], M[r])]
        r += 1
        col += 1
    return tuple(tuple(row) for row in M[:r] if any(row))


def sl_generators(F, n):
    """A transvection and a monomial n-cycle; together they generate SL_n
    over a prime field."""
    t = identity(n)
    t[0][1] = 1
    w = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        w[i][i + 1] = 1
    w[n - 1][0] = 1 if n % 2 else F.neg(1)
    return [t, w]


class PointHyperplaneAction:
    """Matrices acting on points and hyperplanes of PG(n-1, p), points first;
    a polarity swaps the two halves."""

    def __init__(self, p, n, form=None):
        self.F = PrimeField(p)
        self.n = n
        self.pts = points(self.F, n)
        self.index = {v: i for i, v in enumerate(self.pts)}
        self.m = len(self.pts)
        self.form = identity(n) if form is None else form
        self.form_inv_t = transpose(mat_inv(self.F, self.form))

    @property
    def degree(self):
        return 2 * self.m

    def matrix_perm(self, M):
        F = self.F
        Mit = transpose(mat_inv(F, M))
        img = [0] * self.degree
        for i, v in enumerate(self.pts):
            img[i] = self.index[normalize(F, vec_mat(F, v, M))]
            img[self.m + i] = self.m + self.index[normalize(F, vec_mat(F, v, Mit))]
        return tuple(img)

    def polarity(self):
        """Point v to the hyperplane with normal vJ; hyperplane a to the
        point a J^-T. Incidence is preserved and the map is an involution."""
        F = self.F
        img = [0] * self.degree
        for i, v in enumerate(self.pts):
            img[i] = self.m + self.index[normalize(F, vec_mat(F, v, self.form))]
            img[self.m + i] = self.index[normalize(F, vec_mat(F, v, self.form_inv_t))]
        return tuple(img)

    def incident(self, i, j):
        """Point i lies on hyperplane j (both indices into ``pts``)."""
        return sum(a * b for a, b in zip(self.pts[i], self.pts[j])) % self.F.p == 0

    def subspace_of_points(self, idxs):
        return rref(self.F, [self.pts[i] for i in idxs])
