"""
Coassociative Lie algebras given by structure constants.

A :class:`CLAStructure` stores the bracket [x_i, x_j] = sum_k c_ij^k x_k for
i < j and the coproduct delta(x_i) = sum d_i^jk x_j (x) x_k. Verification of
the compatibility condition is done inside U(L)(x)U(L) through
:mod:`coalie.envalg`.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
import random

from .envalg import CheckResult, EnvelopingAlgebra, Report, TensorElement, UElement
from .errors import InconsistencyError, RejectedInput, StructureError
from .exactmath import QMatrix, Subspace, kernel_basis, rank, render_vector


@total_ordering
class _Infinite:
    """Sentinel for an invariant that never terminates; compares above every int."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"

    def __str__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __hash__(self):
        return hash("coalie.INFINITE")


INFINITE = _Infinite()


class CLAStructure:
    """
    Immutable (basis, bracket, coproduct) triple.

    ``bracket`` is {(i, j): {k: c}} with i < j, ``coproduct`` is
    {i: {(j, k): d}}. Zero entries are dropped. Index errors raise
    StructureError; no axioms are checked here.
    """

    def __init__(self, basis, bracket=None, coproduct=None, name=None):
        basis = tuple(basis)
        n = len(basis)
        if len(set(basis)) != n:
            raise StructureError("duplicate basis names in %r" % (basis,))
        br = {}
        for key, row in (bracket or {}).items():
            i, j = key
            if not (0 <= i < n and 0 <= j < n):
                raise StructureError("bracket index %r out of range" % (key,))
            if i >= j:
                raise StructureError("bracket key %r must have i < j" % (key,))
            clean = {}
            for k, c in row.items():
                if not 0 <= k < n:
                    raise StructureError("bracket value index %d out of range" % k)
                c = Fraction(c)
                if c:
                    clean[k] = c
            if clean:
                br[(i, j)] = clean
        co = {}
        for i, row in (coproduct or {}).items():
            if not 0 <= i < n:
                raise StructureError("coproduct index %d out of range" % i)
            clean = {}
            for (j, k), c in row.items():
                if not (0 <= j < n and 0 <= k < n):
                    raise StructureError("coproduct index %r out of range" % ((j, k),))
                c = Fraction(c)
                if c:
                    clean[(j, k)] = c
            if clean:
                co[i] = clean
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "bracket", br)
        object.__setattr__(self, "coproduct", co)
        object.__setattr__(self, "name", name)

    def __setattr__(self, key, value):
        raise AttributeError("CLAStructure is immutable")

    @classmethod
    def from_names(cls, basis, bracket=None, coproduct=None, name=None):
        """
        Convenience constructor using names: bracket {("x", "y"): {"y": 1}}
        (either key order; reversed keys are negated), coproduct
        {"x": {("y", "y"): 1}} or {"x": [("y", "y", 1), ...]} (summed).
        """
        idx = {b: i for i, b in enumerate(basis)}

        def look(name_):
            if name_ not in idx:
                raise StructureError("unknown basis name %r" % (name_,))
            return idx[name_]

        br = {}
        for (a, b), row in (bracket or {}).items():
            i, j = look(a), look(b)
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            if i == j:
                raise StructureError("[%s, %s] must be zero" % (a, b))
            target = br.setdefault((i, j), {})
            for k, c in row.items():
                target[look(k)] = target.get(look(k), 0) + sign * Fraction(c)
        co = {}
        for a, row in (coproduct or {}).items():
            target = co.setdefault(look(a), {})
            items = row.items() if isinstance(row, dict) else (((l, r), c) for l, r, c in row)
            for (l, r), c in items:
                key = (look(l), look(r))
                target[key] = target.get(key, 0) + Fraction(c)
        return cls(basis, br, co, name=name)

    @property
    def dim(self):
        return len(self.basis)

    def index(self, name):
        return self.basis.index(name)

    def __eq__(self, other):
        if not isinstance(other, CLAStructure):
            return NotImplemented
        return (self.basis, self.bracket, self.coproduct) == \
            (other.basis, other.bracket, other.coproduct)

    def __hash__(self):
        return hash((self.basis, tuple(sorted((k, tuple(sorted(v.items())))
                                              for k, v in self.bracket.items()))))

    def __repr__(self):
        return "CLAStructure(%s, dim=%d)" % (self.name or "?", self.dim)

    def with_coproduct(self, coproduct, name=None):
        return CLAStructure(self.basis, self.bracket, coproduct, name=name or self.name)

    def with_bracket(self, bracket, name=None):
        return CLAStructure(self.basis, bracket, self.coproduct, name=name or self.name)

    # -- linear-algebra helpers ------------------------------------------

    def unit_vector(self, i):
        return tuple(Fraction(int(k == i)) for k in range(self.dim))

    def bracket_basis(self, i, j):
        """[x_i, x_j] as a coordinate vector."""
        v = [Fraction(0)] * self.dim
        if i < j:
            for k, c in self.bracket.get((i, j), {}).items():
                v[k] += c
        elif i > j:
            for k, c in self.bracket.get((j, i), {}).items():
                v[k] -= c
        return tuple(v)

    def bracket_vec(self, u, v):
        out = [Fraction(0)] * self.dim
        for (i, j), row in self.bracket.items():
            c = u[i] * v[j] - u[j] * v[i]
            if c:
                for k, ck in row.items():
                    out[k] += c * ck
        return tuple(out)

    def ad_matrix(self, u):
        """Matrix of y -> [u, y]."""
        cols = [self.bracket_vec(u, self.unit_vector(j)) for j in range(self.dim)]
        return QMatrix([[cols[j][i] for j in range(self.dim)] for i in range(self.dim)],
                       self.dim)

    def delta_pairs(self, u):
        """delta(u) as {(j, k): c}."""
        out = {}
        for i, ui in enumerate(u):
            if ui:
                for jk, d in self.coproduct.get(i, {}).items():
                    out[jk] = out.get(jk, 0) + ui * d
        return {k: c for k, c in out.items() if c}

    def delta_matrix(self):
        """Matrix of delta: L -> L(x)L, rows indexed by (j, k) in row-major order."""
        n = self.dim
        rows = []
        for j in range(n):
            for k in range(n):
                rows.append([self.coproduct.get(i, {}).get((j, k), 0) for i in range(n)])
        return QMatrix(rows, n)

    def delta_coefficients(self, u):
        """delta(u) as an n x n coefficient matrix (rows = left leg)."""
        n = self.dim
        m = [[Fraction(0)] * n for _ in range(n)]
        for (j, k), c in self.delta_pairs(u).items():
            m[j][k] = c
        return m

    def render_vector(self, v):
        return render_vector(v, self.basis)

    def render_pairs(self, pairs):
        from .exactmath import render_terms
        items = sorted(pairs.items())
        return render_terms([(c, "%s⊗%s" % (self.basis[j], self.basis[k]))
                             for (j, k), c in items])


@dataclass(frozen=True)
class Witness:
    check: str
    basis: tuple
    residual: object
    text: str

    def __str__(self):
        return "%s(%s): %s" % (self.check, ", ".join(self.basis), self.text)


class VerificationReport(Report):
    """Per-axiom status for a CLAStructure, with failure witnesses."""

    ORDER = ("antisymmetry", "jacobi", "coassociativity", "membership", "compatibility")

    @property
    def witnesses(self):
        return [w for c in self for w in c.witnesses]


# ---------------------------------------------------------------------------
# verification

def jacobi_residual(s, i, j, k):
    ei, ej, ek = s.unit_vector(i), s.unit_vector(j), s.unit_vector(k)
    a = s.bracket_vec(ei, s.bracket_vec(ej, ek))
    b = s.bracket_vec(ej, s.bracket_vec(ek, ei))
    c = s.bracket_vec(ek, s.bracket_vec(ei, ej))
    return tuple(x + y + z for x, y, z in zip(a, b, c))


def coassociativity_residual(s, i):
    """(delta(x)1)delta(x_i) - (1(x)delta)delta(x_i) as {(a, b, c): coeff}."""
    out = {}
    for (j, k), d in s.coproduct.get(i, {}).items():
        for (a, b), d2 in s.coproduct.get(j, {}).items():
            key = (a, b, k)
            out[key] = out.get(key, 0) + d * d2
        for (a, b), d2 in s.coproduct.get(k, {}).items():
            key = (j, a, b)
            out[key] = out.get(key, 0) - d * d2
    return {key: c for key, c in out.items() if c}


def compatibility_residual(s, a, b):
    """R(a, b) = [Delta(x_a), Delta(x_b)] - Delta([x_a, x_b]) in U(L)(x)U(L)."""
    U = EnvelopingAlgebra.of(s)
    da = U.coproduct(U.generator(a))
    db = U.coproduct(U.generator(b))
    target = U.coproduct(UElement({U.gen(k): c for k, c in enumerate(s.bracket_basis(a, b)) if c}))
    return U.tensor_commutator(da, db) - target


def delta_commutator(s, a, b):
    """[delta(x_a), delta(x_b)] computed in U(L)(x)U(L), PBW-normalized."""
    U = EnvelopingAlgebra.of(s)
    return U.tensor_commutator(U.delta_tensor(a), U.delta_tensor(b))


def in_L_tensor_L(t):
    return all(sum(m1) == 1 and sum(m2) == 1 for (m1, m2) in t.terms)


def verify_structure(s):
    """
    Check, in order: antisymmetry (structural), Jacobi on basis triples,
    coassociativity on basis elements, then for each basis pair a < b the
    membership [delta(a), delta(b)] in L(x)L and the compatibility residual
    [Delta(a), Delta(b)] - Delta([a, b]) = 0 in U(L)(x)U(L). A Jacobi failure
    skips the last two (PBW rewriting presupposes a Lie bracket).
    """
    n = s.dim
    names = s.basis
    report = VerificationReport()
    report.add(CheckResult("antisymmetry", note="only i<j stored; [x,x]=0 by construction"))

    jac = report.add(CheckResult("jacobi"))
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                r = jacobi_residual(s, i, j, k)
                if any(r):
                    jac.fail(Witness("jacobi", (names[i], names[j], names[k]), r,
                                     s.render_vector(r)))

    co = report.add(CheckResult("coassociativity"))
    for i in range(n):
        r = coassociativity_residual(s, i)
        if r:
            text = " + ".join("%s*%s⊗%s⊗%s" % (c, names[a], names[b], names[d])
                              for (a, b, d), c in sorted(r.items()))
            co.fail(Witness("coassociativity", (names[i],), r, text))

    mem = report.add(CheckResult("membership"))
    comp = report.add(CheckResult("compatibility"))
    if not jac.passed:
        mem.status = comp.status = "skipped"
        mem.note = comp.note = "Jacobi identity fails; U(L) rewriting not well-founded"
        return report

    U = EnvelopingAlgebra.of(s)
    for a in range(n):
        for b in range(a + 1, n):
            t = delta_commutator(s, a, b)
            if not in_L_tensor_L(t):
                mem.fail(Witness("membership", (names[a], names[b]), t, U.render_tensor(t)))
            r = compatibility_residual(s, a, b)
            if r:
                comp.fail(Witness("compatibility", (names[a], names[b]), r, U.render_tensor(r)))
    return report


# ---------------------------------------------------------------------------
# invariants

def _span_dim(vectors, n):
    vectors = [v for v in vectors if any(v)]
    if not vectors:
        return 0
    return rank(QMatrix(vectors, n))


def lower_central_series(s):
    """Dimensions of L^(1) = L, L^(k+1) = [L, L^(k)] until zero or stable."""
    n = s.dim
    current = Subspace([s.unit_vector(i) for i in range(n)], n)
    dims = [current.dim]
    while current.dim:
        nxt = Subspace([s.bracket_vec(s.unit_vector(i), v)
                        for i in range(n) for v in current.basis], n)
        if nxt.dim == current.dim:
            return dims, False
        dims.append(nxt.dim)
        current = nxt
    return dims, True


def nilpotency(s):
    """Smallest n with L^(n+1) = 0 (abelian gives 1), or INFINITE."""
    dims, reaches_zero = lower_central_series(s)
    if not reaches_zero:
        return INFINITE
    return max(1, len(dims) - 1)


def _delta_power_rows(s, n):
    """delta^n(x_i) for all i as dicts over index words of length n+1."""
    cur = [{(i,): Fraction(1)} for i in range(s.dim)]
    for _ in range(n):
        nxt = []
        for img in cur:
            out = {}
            for w, c in img.items():
                for (j, k), d in s.coproduct.get(w[0], {}).items():
                    key = (j, k) + w[1:]
                    out[key] = out.get(key, 0) + c * d
            nxt.append({k: v for k, v in out.items() if v})
        cur = nxt
    return cur


def kernel_chain(s):
    """dim ker delta^n for n = 1, 2, ... until it reaches dim L or stalls."""
    dims = []
    n = 1
    while True:
        imgs = _delta_power_rows(s, n)
        keys = sorted({k for img in imgs for k in img})
        if keys:
            m = QMatrix([[img.get(k, 0) for img in imgs] for k in keys], s.dim)
            d = s.dim - rank(m)
        else:
            d = s.dim
        dims.append(d)
        if d == s.dim or (len(dims) > 1 and dims[-1] == dims[-2]) or n > s.dim:
            return dims
        n += 1


def conilpotency(s):
    """Smallest n with delta^n(L) = 0, or INFINITE if the kernel chain stalls first."""
    dims = kernel_chain(s)
    if dims[-1] == s.dim:
        return len(dims)
    return INFINITE


def is_locally_conilpotent(s):
    return conilpotency(s) is not INFINITE


def cocommutativity_type(s):
    sym = anti = True
    for i, row in s.coproduct.items():
        for (j, k), c in row.items():
            other = row.get((k, j), 0)
            if other != c:
                sym = False
            if other != -c:
                anti = False
    if sym and anti:
        return "zero"
    if sym:
        return "cocommutative"
    if anti:
        return "anti_cocommutative"
    return "neither"


def delta_kernel(s):
    """ker delta as an RREF Subspace; raises if it is not a Lie subalgebra."""
    K = Subspace(kernel_basis(s.delta_matrix()), s.dim, labels=s.basis)
    for a in K.basis:
        for b in K.basis:
            if not K.contains(s.bracket_vec(a, b)):
                raise InconsistencyError(
                    "ker delta is not closed under the bracket: [%s, %s]"
                    % (s.render_vector(a), s.render_vector(b)))
    return K


def center(s):
    n = s.dim
    rows = []
    for i in range(n):
        ad = s.ad_matrix(s.unit_vector(i))
        rows.extend(ad.entries)
    return Subspace(kernel_basis(QMatrix(rows, n)) if rows else
                    [s.unit_vector(i) for i in range(n)], n, labels=s.basis)


def is_unimodular(s):
    n = s.dim
    for i in range(n):
        ad = s.ad_matrix(s.unit_vector(i))
        if sum(ad[k, k] for k in range(n)):
            return False
    return True


def _in_tensor_square(D, space):
    """Is the n x n coefficient matrix D an element of space (x) space?"""
    ann = space.annihilator()
    n = len(D)
    for f in ann:
        # (f (x) 1) D and (1 (x) f) D must vanish
        for k in range(n):
            if sum(f[j] * D[j][k] for j in range(n)):
                return False
            if sum(f[j] * D[k][j] for j in range(n)):
                return False
    return True


def lemma_2_8_check(s):
    """
    For anti-cocommutative delta: con(L) <= 2 and delta(L) inside
    ker(delta)(x)ker(delta). delta = 0 passes vacuously.
    """
    kind = cocommutativity_type(s)
    if kind not in ("anti_cocommutative", "zero"):
        raise RejectedInput("delta is %s, not anti-cocommutative" % kind)
    report = Report()
    con_chk = report.add(CheckResult("conilpotency_at_most_2"))
    con = conilpotency(s)
    if con is INFINITE or con > 2:
        con_chk.fail(("con", con))
    img = report.add(CheckResult("image_in_kernel_square"))
    K = delta_kernel(s)
    for i in range(s.dim):
        D = s.delta_coefficients(s.unit_vector(i))
        if not _in_tensor_square(D, K):
            img.fail((s.basis[i], s.render_pairs(s.delta_pairs(s.unit_vector(i)))))
    return report


class CoradicalResult:
    """Coradical of the unital extension L^1 = k1 (+) L, coordinates (1, x_1, ..., x_n)."""

    def __init__(self, subspace, radical, connected):
        self.subspace = subspace
        self.radical = radical
        self.is_connected = connected

    def __repr__(self):
        return "CoradicalResult(%s, connected=%s)" % (self.subspace.render(), self.is_connected)


def unital_coproduct(s):
    """Delta on L^1 with index 0 for the unit: {c: {(a, b): coeff}}."""
    n = s.dim
    out = {0: {(0, 0): Fraction(1)}}
    for i in range(n):
        row = {(i + 1, 0): Fraction(1), (0, i + 1): Fraction(1)}
        for (j, k), d in s.coproduct.get(i, {}).items():
            row[(j + 1, k + 1)] = row.get((j + 1, k + 1), 0) + d
        out[i + 1] = {k: v for k, v in row.items() if v}
    return out


def coradical_unital(s):
    """
    Coradical of (L^1, Delta, eps) computed dually: the convolution algebra
    (L^1)* has Jacobson radical J = {f : tr(left mult. by f*g) = 0 for all g}
    (valid in characteristic 0), and the coradical is the annihilator of J.
    """
    m = s.dim + 1
    Delta = unital_coproduct(s)
    # (f_a * f_b) = sum_c Delta_c^{ab} f_c
    mult = {}
    for c, row in Delta.items():
        for (a, b), v in row.items():
            mult.setdefault((a, b), {})
            mult[(a, b)][c] = mult[(a, b)].get(c, 0) + v

    def left_trace(a, b):
        # trace of g -> f_a * f_b * g
        total = Fraction(0)
        ab = mult.get((a, b), {})
        for g in range(m):
            for c, v in ab.items():
                total += v * mult.get((c, g), {}).get(g, 0)
        return total

    gram = QMatrix([[left_trace(a, b) for b in range(m)] for a in range(m)], m)
    labels = ("1",) + s.basis
    J = Subspace(kernel_basis(gram), m, labels=labels)
    if J.dim:
        C = Subspace(kernel_basis(QMatrix(J.basis, m)), m, labels=labels)
    else:
        C = Subspace([tuple(Fraction(int(i == j)) for j in range(m)) for i in range(m)],
                     m, labels=labels)
    one = tuple(Fraction(int(i == 0)) for i in range(m))
    connected = C.dim == 1 and C.contains(one)
    return CoradicalResult(C, J, connected)


def is_ideal(s, Z):
    for i in range(s.dim):
        for z in Z.basis:
            if not Z.contains(s.bracket_vec(s.unit_vector(i), z)):
                return False
    return True


class SamplerResult:
    def __init__(self, passed, witness=None, samples=0, dims=None):
        self.passed = passed
        self.witness = witness
        self.samples = samples
        self.dims = dims or []

    def __bool__(self):
        return self.passed

    def __repr__(self):
        return "SamplerResult(passed=%s, witness=%r)" % (self.passed, self.witness)


def centralizer_dim_mod(s, x, V, Z):
    """dim of (ker ad(x) (intersect) V) in the quotient L/Z, i.e. modulo V (intersect) Z."""
    n = s.dim
    ann = Z.annihilator() if Z.dim else [s.unit_vector(i) for i in range(n)]
    # coefficient space of V: v = sum c_k V_k, need ann([x, v]) = 0
    brs = [s.bracket_vec(x, v) for v in V.basis]
    rows = [[sum(f[i] * b[i] for i in range(n)) for b in brs] for f in ann]
    in_ker = len(kernel_basis(QMatrix(rows, V.dim))) if rows else V.dim
    rows_z = [[sum(f[i] * v[i] for i in range(n)) for v in V.basis] for f in ann]
    in_z = len(kernel_basis(QMatrix(rows_z, V.dim))) if rows_z else V.dim
    return in_ker - in_z


def small_centralizer_sampled(s, V, Z, seed=0, count=64, bound=3):
    """
    Necessary-condition sampler for "V has small centralizer modulo Z":
    draws ``count`` seeded vectors x of V with small integer coordinates,
    skips those lying in Z, and requires the centralizer of x in V/Z to be
    one-dimensional. Passing is evidence, not proof.
    """
    if not is_ideal(s, Z):
        raise RejectedInput("Z is not a Lie ideal")
    rng = random.Random(seed)
    dims = []
    drawn = 0
    attempts = 0
    while drawn < count and attempts < 20 * count:
        attempts += 1
        coeffs = [rng.randint(-bound, bound) for _ in range(V.dim)]
        x = tuple(sum((c * v[i] for c, v in zip(coeffs, V.basis)), Fraction(0))
                  for i in range(s.dim))
        if not any(x) or (Z.dim and Z.contains(x)):
            continue
        drawn += 1
        d = centralizer_dim_mod(s, x, V, Z)
        dims.append(d)
        if d != 1:
            return SamplerResult(False, x, drawn, dims)
    return SamplerResult(True, None, drawn, dims)


def _legs(s, i):
    """delta(x_i) = sum_j x_j (x) a_j: returns the list of right legs a_j as vectors."""
    D = s.delta_coefficients(s.unit_vector(i))
    return [tuple(row) for row in D]


def centralizer(s, vectors):
    """{y : [x, y] = 0 for all x in vectors}."""
    n = s.dim
    rows = []
    for x in vectors:
        rows.extend(s.ad_matrix(x).entries)
    if not rows:
        return Subspace([s.unit_vector(i) for i in range(n)], n, labels=s.basis)
    return Subspace(kernel_basis(QMatrix(rows, n)), n, labels=s.basis)


def lemma_3_1_properties(s):
    """
    Pairing identities for delta(a) = sum x_i (x) a_i, delta(b) = sum x_i (x) b_i
    over basis pairs: [a_i, b_i] = 0 and [a_i, b_j] + [a_j, b_i] = 0; plus, for
    each basis element with pure-tensor image x(x)y != 0, the inclusion
    delta(L) in C(x)(x)C(y) of centralizers.
    """
    n = s.dim
    report = Report()
    diag = report.add(CheckResult("diagonal_pairing"))
    sym = report.add(CheckResult("symmetric_pairing"))
    pure = report.add(CheckResult("pure_tensor_centralizer"))
    legs = [_legs(s, i) for i in range(n)]
    for a in range(n):
        for b in range(a, n):
            A, B = legs[a], legs[b]
            for i in range(n):
                r = s.bracket_vec(A[i], B[i])
                if any(r):
                    diag.fail(((s.basis[a], s.basis[b]), s.basis[i], s.render_vector(r)))
                for j in range(i + 1, n):
                    r1 = s.bracket_vec(A[i], B[j])
                    r2 = s.bracket_vec(A[j], B[i])
                    r = tuple(p + q for p, q in zip(r1, r2))
                    if any(r):
                        sym.fail(((s.basis[a], s.basis[b]), (s.basis[i], s.basis[j]),
                                  s.render_vector(r)))
    for a in range(n):
        D = s.delta_coefficients(s.unit_vector(a))
        if not any(any(row) for row in D) or rank(QMatrix(D, n)) != 1:
            continue
        # D = x y^T with x a nonzero column and y a nonzero row
        r0 = next(r for r in range(n) if any(D[r]))
        y = tuple(D[r0])
        c0 = next(c for c in range(n) if D[r0][c])
        x = tuple(D[r][c0] / D[r0][c0] for r in range(n))
        Cx, Cy = centralizer(s, [x]), centralizer(s, [y])
        for i in range(n):
            Di = s.delta_coefficients(s.unit_vector(i))
            # columns of Di (left legs) in Cx, rows (right legs) in Cy
            ok = all(Cx.contains([Di[r][c] for r in range(n)]) for c in range(n)) and \
                all(Cy.contains(Di[r]) for r in range(n))
            if not ok:
                pure.fail((s.basis[a], s.basis[i]))
    return report


def square_tensor_basis(s):
    """
    If delta(L) is one-dimensional, return (Omega as n x n matrix, T, c) with
    Omega = c T(x)T when such T exists, else (Omega, None, None). Returns None
    when dim delta(L) != 1.
    """
    n = s.dim
    M = s.delta_matrix()
    if rank(M) != 1:
        return None
    col = next(i for i in range(n) if s.coproduct.get(i))
    Omega = s.delta_coefficients(s.unit_vector(col))
    if rank(QMatrix(Omega, n)) != 1:
        return Omega, None, None
    r0 = next(r for r in range(n) if any(Omega[r]))
    T = tuple(Omega[r0])
    c0 = next(c for c in range(n) if T[c])
    # Omega = u T^T, need u proportional to T
    u = tuple(Omega[r][c0] / T[c0] for r in range(n))
    ratio = u[c0] / T[c0] if T[c0] else None
    if ratio and all(u[k] == ratio * T[k] for k in range(n)):
        return Omega, T, ratio
    return Omega, None, None


def delta_image_dim(s):
    return rank(s.delta_matrix())
