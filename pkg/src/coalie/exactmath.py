"""
Exact arithmetic substrate: rationals, dense matrices over Q, subspaces in
canonical form, and sparse multivariate polynomials with rational
coefficients.

Scalars are :class:`fractions.Fraction` throughout; nothing here ever
touches floating point.
"""

from fractions import Fraction
from itertools import combinations
import re

from .errors import CyclicBindingError, ParseError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?)\s*(\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text):
    """Parse "p/q", "p" with an optional leading "-" (ASCII or U+2212)."""
    if isinstance(text, (int, Fraction)) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError("expected a rational string, got %r" % (text,))
    m = _RATIONAL_RE.match(text.replace("−", "-"))
    if m is None:
        raise ParseError("malformed rational %r" % (text,))
    sign, num, den = m.groups()
    den = int(den) if den is not None else 1
    if den == 0:
        raise ParseError("zero denominator in %r" % (text,))
    value = Fraction(int(num), den)
    return -value if sign == "-" else value


def format_rational(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


# ---------------------------------------------------------------------------
# dense matrices

class QMatrix:
    """Immutable row-major matrix of Fractions."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols=None):
        entries = tuple(tuple(Fraction(x) for x in row) for row in entries)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        for row in entries:
            if len(row) != cols:
                raise ValueError("ragged matrix")
        self.entries = entries
        self.rows = len(entries)
        self.cols = cols

    @classmethod
    def zero(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.cols == other.cols and self.entries == other.entries

    def __hash__(self):
        return hash((self.cols, self.entries))

    def __repr__(self):
        body = ", ".join("[%s]" % ", ".join(format_rational(x) for x in row)
                         for row in self.entries)
        return "QMatrix([%s])" % body

    def transpose(self):
        return QMatrix([[self.entries[i][j] for i in range(self.rows)]
                        for j in range(self.cols)], self.rows)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return QMatrix([[sum((a * b for a, b in zip(row, col)), Fraction(0))
                         for col in cols] for row in self.entries], other.cols)

    def apply(self, vec):
        return tuple(sum((a * Fraction(b) for a, b in zip(row, vec)), Fraction(0))
                     for row in self.entries)


def rref(m):
    """Reduced row echelon form. Returns (R, rank, pivots)."""
    rows = [list(r) for r in m.entries]
    pivots = []
    r = 0
    for c in range(m.cols):
        if r == len(rows):
            break
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return QMatrix(rows, m.cols), len(pivots), tuple(pivots)


def rank(m):
    return rref(m)[1]


def kernel_basis(m):
    """
    Basis of the right kernel {v : m v = 0}. One vector per free column,
    in column order, with that free variable set to 1 and the others to 0.
    """
    R, rk, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for row, p in enumerate(pivots):
            v[p] = -R.entries[row][f]
        basis.append(tuple(v))
    return basis


def determinant(rows):
    """Laplace expansion; works for any commutative coefficient ring."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = None
    for j in range(n):
        a = rows[0][j]
        if not a:
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = a * determinant(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else rows[0][0] * 0


def maximal_minors(rows, k):
    """All k x k minors (row subset, determinant) of a k-column matrix."""
    for subset in combinations(range(len(rows)), k):
        yield subset, determinant([rows[i] for i in subset])


class Subspace:
    """
    A subspace of Q^dim held as the nonzero rows of its RREF basis, so two
    Subspace objects are equal exactly when they span the same space.
    """

    __slots__ = ("dim_ambient", "basis", "pivots", "labels")

    def __init__(self, vectors, dim_ambient, labels=None):
        vectors = [tuple(Fraction(x) for x in v) for v in vectors]
        for v in vectors:
            if len(v) != dim_ambient:
                raise ValueError("vector length %d != ambient %d" % (len(v), dim_ambient))
        if vectors:
            R, rk, piv = rref(QMatrix(vectors, dim_ambient))
            self.basis = R.entries[:rk]
            self.pivots = piv
        else:
            self.basis = ()
            self.pivots = ()
        self.dim_ambient = dim_ambient
        self.labels = tuple(labels) if labels is not None else None

    @property
    def dim(self):
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.dim_ambient == other.dim_ambient and self.basis == other.basis

    def __hash__(self):
        return hash((self.dim_ambient, self.basis))

    def contains(self, vec):
        vec = tuple(Fraction(x) for x in vec)
        residual = list(vec)
        for row, p in zip(self.basis, self.pivots):
            c = residual[p]
            if c:
                residual = [a - c * b for a, b in zip(residual, row)]
        return not any(residual)

    def contains_subspace(self, other):
        return all(self.contains(v) for v in other.basis)

    def annihilator(self):
        """Rows spanning {f : f(v) = 0 for all v in self}."""
        if not self.basis:
            return [tuple(Fraction(int(i == j)) for j in range(self.dim_ambient))
                    for i in range(self.dim_ambient)]
        return kernel_basis(QMatrix(self.basis, self.dim_ambient))

    def intersect(self, other):
        # v = sum a_i u_i = sum b_j w_j
        if not self.basis or not other.basis:
            return Subspace([], self.dim_ambient, self.labels)
        cols = list(self.basis) + [tuple(-x for x in w) for w in other.basis]
        m = QMatrix(list(zip(*cols)), len(cols))
        vecs = []
        for k in kernel_basis(m):
            a = k[:len(self.basis)]
            vecs.append(tuple(sum((c * row[i] for c, row in zip(a, self.basis)), Fraction(0))
                              for i in range(self.dim_ambient)))
        return Subspace(vecs, self.dim_ambient, self.labels)

    def render(self, labels=None):
        labels = labels or self.labels
        if not self.basis:
            return "0"
        return "span{%s}" % ", ".join(render_vector(v, labels) for v in self.basis)

    def __repr__(self):
        return "Subspace(%s)" % self.render(self.labels or
                                            ["e%d" % i for i in range(self.dim_ambient)])


def render_vector(vec, labels):
    parts = []
    for c, name in zip(vec, labels):
        if c:
            parts.append((Fraction(c), name))
    return render_terms(parts)


def render_terms(parts):
    """Render [(coeff, label)] as "a - 2*b + 1/2*c"; label "1" means constant."""
    if not parts:
        return "0"
    out = []
    for idx, (c, name) in enumerate(parts):
        neg = c < 0
        a = -c if neg else c
        if name == "1":
            body = format_rational(a)
        elif a == 1:
            body = name
        else:
            body = "%s*%s" % (format_rational(a), name)
        if idx == 0:
            out.append("-" + body if neg else body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# ---------------------------------------------------------------------------
# sparse multivariate polynomials

def _merge_unknowns(a, b):
    if a == b:
        return a
    seen = set(a)
    return tuple(a) + tuple(x for x in b if x not in seen)


def _extend(terms, src, dst):
    if src == dst:
        return terms
    index = [dst.index(u) for u in src]
    out = {}
    width = len(dst)
    for exps, c in terms.items():
        e = [0] * width
        for i, k in zip(index, exps):
            e[i] = k
        out[tuple(e)] = c
    return out


class MultiPoly:
    """
    Polynomial over Q in an ordered list of named unknowns.

    ``terms`` maps exponent vectors (one entry per unknown) to nonzero
    Fractions. Arithmetic between polynomials over different unknown lists
    works on the merged list; plain ints and Fractions coerce to constants.
    """

    __slots__ = ("unknowns", "terms", "_key")

    def __init__(self, unknowns, terms=None):
        self.unknowns = tuple(unknowns)
        width = len(self.unknowns)
        clean = {}
        if terms:
            for exps, c in terms.items():
                if len(exps) != width:
                    raise ValueError("exponent vector length mismatch")
                if c:
                    clean[tuple(exps)] = Fraction(c)
        self.terms = clean
        self._key = None

    # construction helpers
    @classmethod
    def const(cls, value, unknowns=()):
        value = Fraction(value)
        p = cls(unknowns)
        if value:
            p.terms[(0,) * len(p.unknowns)] = value
        return p

    @classmethod
    def var(cls, name, unknowns=None):
        unknowns = tuple(unknowns) if unknowns is not None else (name,)
        p = cls(unknowns)
        e = [0] * len(unknowns)
        e[unknowns.index(name)] = 1
        p.terms[tuple(e)] = Fraction(1)
        return p

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other, self.unknowns)
        return None

    def _aligned(self, other):
        if other.unknowns == self.unknowns:
            return self.unknowns, self.terms, other.terms
        u = _merge_unknowns(self.unknowns, other.unknowns)
        return (u, _extend(self.terms, self.unknowns, u),
                _extend(other.terms, other.unknowns, u))

    def _new(self, unknowns, terms):
        p = MultiPoly.__new__(MultiPoly)
        p.unknowns = unknowns
        p.terms = terms
        p._key = None
        return p

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        u, a, b = self._aligned(other)
        out = dict(a)
        for e, c in b.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return self._new(u, out)

    __radd__ = __add__

    def __neg__(self):
        return self._new(self.unknowns, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self._new(self.unknowns, {})
            return self._new(self.unknowns, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        u, a, b = self._aligned(other)
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return self._new(u, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("non-negative integer exponent required")
        result = MultiPoly.const(1, self.unknowns)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return bool(self.terms)

    def canonical(self):
        """Name-keyed form independent of the unknown list."""
        if self._key is None:
            self._key = frozenset(
                (tuple((u, k) for u, k in zip(self.unknowns, e) if k), c)
                for e, c in self.terms.items())
        return self._key

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other, self.unknowns)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if self.unknowns == other.unknowns:
            return self.terms == other.terms
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    # inspection
    def degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def variables(self):
        used = set()
        for e in self.terms:
            for u, k in zip(self.unknowns, e):
                if k:
                    used.add(u)
        return [u for u in self.unknowns if u in used]

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * len(self.unknowns), Fraction(0))

    def as_monomial(self):
        """(coeff, {unknown: exponent}) if a single term, else None."""
        if len(self.terms) != 1:
            return None
        (e, c), = self.terms.items()
        return c, {u: k for u, k in zip(self.unknowns, e) if k}

    def linear_parts(self):
        """({unknown: coeff}, constant) when total degree <= 1, else None."""
        lin = {}
        const = Fraction(0)
        for e, c in self.terms.items():
            s = sum(e)
            if s == 0:
                const = c
            elif s == 1:
                lin[self.unknowns[e.index(1)]] = c
            else:
                return None
        return lin, const

    def homogeneous_linear_in(self, block):
        """
        If every term has total degree exactly 1 in the unknowns ``block``,
        return {block_var: cofactor polynomial}; otherwise None.
        """
        idx = {u: i for i, u in enumerate(self.unknowns)}
        pos = [idx.get(b) for b in block]
        out = {b: {} for b in block}
        for e, c in self.terms.items():
            hits = [(b, p) for b, p in zip(block, pos) if p is not None and e[p]]
            if len(hits) != 1 or e[hits[0][1]] != 1:
                return None
            b, p = hits[0]
            e2 = list(e)
            e2[p] = 0
            out[b][tuple(e2)] = c
        return {b: self._new(self.unknowns, t) for b, t in out.items()}

    def evaluate(self, assignment):
        total = Fraction(0)
        vals = [assignment.get(u) for u in self.unknowns]
        for e, c in self.terms.items():
            term = c
            for v, k in zip(vals, e):
                if k:
                    if v is None:
                        raise KeyError("no value for unknown in %s" % (self,))
                    term *= Fraction(v) ** k
            total += term
        return total

    def substitute(self, bindings):
        return poly_substitute(self, bindings)

    def with_unknowns(self, unknowns):
        unknowns = tuple(unknowns)
        missing = set(self.variables()) - set(unknowns)
        if missing:
            raise ValueError("unknowns %s not in target list" % sorted(missing))
        out = {}
        index = {u: i for i, u in enumerate(unknowns)}
        for e, c in self.terms.items():
            e2 = [0] * len(unknowns)
            for u, k in zip(self.unknowns, e):
                if k:
                    e2[index[u]] = k
            out[tuple(e2)] = c
        return self._new(unknowns, out)

    def sorted_terms(self):
        # graded, then lexicographic with earlier unknowns first
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-k for k in t[0])))

    def __str__(self):
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for u, k in zip(self.unknowns, e):
                if k == 1:
                    factors.append(u)
                elif k:
                    factors.append("%s^%d" % (u, k))
            parts.append((c, "*".join(factors) if factors else "1"))
        return render_terms(parts)

    def __repr__(self):
        return "MultiPoly(%s)" % self


def poly_substitute(p, bindings):
    """
    Apply ``bindings`` (unknown -> Fraction or MultiPoly) to ``p``.

    Bindings may refer to other bound unknowns; they are resolved first, and
    a cycle among them raises CyclicBindingError.
    """
    resolved = resolve_bindings(bindings)
    if not any(u in resolved for u in p.variables()):
        return p
    result = MultiPoly.const(0, p.unknowns)
    cache = {}
    for e, c in p.terms.items():
        term = MultiPoly.const(c, p.unknowns)
        for u, k in zip(p.unknowns, e):
            if not k:
                continue
            if u in resolved:
                key = (u, k)
                if key not in cache:
                    cache[key] = resolved[u] ** k
                term = term * cache[key]
            else:
                mono = [0] * len(p.unknowns)
                mono[p.unknowns.index(u)] = k
                term = term * MultiPoly(p.unknowns, {tuple(mono): 1})
        result = result + term
    if result.unknowns != p.unknowns and set(result.variables()) <= set(p.unknowns):
        result = result.with_unknowns(p.unknowns)
    return result


def resolve_bindings(bindings):
    """Fully resolve a binding map so no value mentions a bound unknown."""
    norm = {}
    for u, v in bindings.items():
        norm[u] = v if isinstance(v, MultiPoly) else MultiPoly.const(v, ())
    done = {}
    visiting = set()

    def visit(u):
        if u in done:
            return done[u]
        if u in visiting:
            raise CyclicBindingError("cyclic binding involving %r" % u)
        visiting.add(u)
        v = norm[u]
        deps = [w for w in v.variables() if w in norm]
        if deps:
            sub = {w: visit(w) for w in deps}
            v = _plain_substitute(v, sub)
        visiting.discard(u)
        done[u] = v
        return v

    for u in norm:
        visit(u)
    return done


def _plain_substitute(p, sub):
    result = MultiPoly.const(0, p.unknowns)
    for e, c in p.terms.items():
        term = MultiPoly.const(c, p.unknowns)
        for u, k in zip(p.unknowns, e):
            if not k:
                continue
            if u in sub:
                term = term * (sub[u] ** k)
            else:
                mono = [0] * len(p.unknowns)
                mono[p.unknowns.index(u)] = k
                term = term * MultiPoly(p.unknowns, {tuple(mono): 1})
        result = result + term
    return result
