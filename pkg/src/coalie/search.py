"""
Polynomial constraint systems for unknown structure constants.

An :class:`Ansatz` puts polynomial expressions in named unknowns into some
coproduct entries d_i^jk (mode "coproduct") or bracket entries c_ij^k
(mode "bracket") of a fixed structure. :func:`generate_system` expands the
axioms with symbolic coefficients through the same PBW engine used for
numeric verification, so an assignment satisfies the system exactly when the
instantiated structure passes :func:`coalie.liecoalg.verify_structure`.
"""

import ast
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .envalg import EnvelopingAlgebra, UElement
from .errors import RejectedInput
from .exactmath import MultiPoly, QMatrix, determinant, poly_substitute, resolve_bindings, rref
from .liecoalg import CLAStructure, coassociativity_residual, jacobi_residual

MODES = ("coproduct", "bracket")


# ---------------------------------------------------------------------------
# expressions

def parse_poly(text, unknowns=None):
    """
    Parse "2*a11 - b^2 + 1/2*c" (also ** and unary minus) into a MultiPoly.
    Names must be listed in ``unknowns`` when it is given.
    """
    text = str(text).strip().replace("−", "-").replace("^", "**")
    try:
        tree = ast.parse(text, mode="eval")
    except SyntaxError as exc:
        raise ValueError("cannot parse polynomial %r" % text) from exc
    allowed = None if unknowns is None else set(unknowns)

    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return MultiPoly.const(node.value)
        if isinstance(node, ast.Name):
            if allowed is not None and node.id not in allowed:
                raise ValueError("unknown %r is not declared" % node.id)
            return MultiPoly.var(node.id)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = walk(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            left = walk(node.left)
            if isinstance(node.op, ast.Pow):
                if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                    raise ValueError("exponent must be a non-negative integer in %r" % text)
                return left ** node.right.value
            right = walk(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                if not right.is_constant() or not right:
                    raise ValueError("division by a non-constant in %r" % text)
                return left / right.constant_value()
        raise ValueError("unsupported syntax in polynomial %r" % text)

    return walk(tree)


def _as_poly(v):
    if isinstance(v, MultiPoly):
        return v
    if isinstance(v, str):
        return parse_poly(v)
    return MultiPoly.const(Fraction(v))


# ---------------------------------------------------------------------------
# ansatz

class Ansatz:
    """
    Unknown entries of a structure.

    ``entries`` maps coproduct keys (i, (j, k)) or bracket keys ((i, j), k)
    with i < j to polynomial expressions. ``unknowns`` lists the structure
    unknowns in declared order (R1 binds the latest one first); ``auxiliary``
    lists helper unknowns (like the vector T of a rank-one ansatz) that are
    not structure constants. ``nonzero_blocks`` are groups of auxiliary
    unknowns assumed not all zero. ``rank1`` = (lambdas, T) records the
    shape delta(x_i) = lambda_i T(x)T.
    """

    def __init__(self, mode, entries, unknowns, auxiliary=(), nonzero_blocks=(), rank1=None,
                 name=None):
        if mode not in MODES:
            raise RejectedInput("mode must be one of %s" % (MODES,))
        self.mode = mode
        self.unknowns = tuple(unknowns)
        self.auxiliary = tuple(auxiliary)
        declared = set(self.unknowns) | set(self.auxiliary)
        if len(declared) != len(self.unknowns) + len(self.auxiliary):
            raise RejectedInput("unknown names must be distinct")
        clean = {}
        for key, expr in entries.items():
            if mode == "bracket":
                (i, j), _k = key
                if i >= j:
                    raise RejectedInput("bracket ansatz key %r must have i < j" % (key,))
            p = _as_poly(expr)
            extra = set(p.variables()) - declared
            if extra:
                raise RejectedInput("undeclared unknowns %s in ansatz" % sorted(extra))
            clean[key] = p
        self.entries = clean
        self.nonzero_blocks = tuple(tuple(b) for b in nonzero_blocks)
        for block in self.nonzero_blocks:
            if not set(block) <= set(self.auxiliary):
                raise RejectedInput("nonzero blocks must consist of auxiliary unknowns")
        self.rank1 = rank1
        self.name = name

    @property
    def all_unknowns(self):
        return self.unknowns + self.auxiliary

    def __repr__(self):
        return "Ansatz(%s, %s, %d entries, unknowns=%s)" % (
            self.name or "?", self.mode, len(self.entries), ",".join(self.unknowns))

    @classmethod
    def full(cls, s, mode="coproduct", prefix=None, rows=None):
        """Every entry unknown (optionally only for the basis indices in ``rows``)."""
        n = s.dim
        entries = {}
        names = []
        rows = range(n) if rows is None else rows
        if mode == "coproduct":
            p = prefix or "d"
            for i in rows:
                for j in range(n):
                    for k in range(n):
                        u = "%s_%s_%s%s" % (p, s.basis[i], s.basis[j], s.basis[k])
                        names.append(u)
                        entries[(i, (j, k))] = MultiPoly.var(u)
        else:
            p = prefix or "c"
            for i in range(n):
                for j in range(i + 1, n):
                    for k in range(n):
                        u = "%s_%s%s_%s" % (p, s.basis[i], s.basis[j], s.basis[k])
                        names.append(u)
                        entries[((i, j), k)] = MultiPoly.var(u)
        return cls(mode, entries, names)


def rank1_ansatz(s, lambdas, t_names, name=None):
    """delta(x_i) = lambda_i T(x)T with T = sum t_j x_j; T is an auxiliary nonzero block."""
    lam = [MultiPoly.var(u) for u in lambdas]
    T = [MultiPoly.var(t) for t in t_names]
    entries = {}
    for i in range(s.dim):
        for j in range(s.dim):
            for k in range(s.dim):
                entries[(i, (j, k))] = lam[i] * T[j] * T[k]
    return Ansatz("coproduct", entries, lambdas, auxiliary=t_names,
                  nonzero_blocks=[tuple(t_names)], rank1=(tuple(lambdas), tuple(t_names)),
                  name=name)


# ---------------------------------------------------------------------------
# systems

@dataclass(frozen=True)
class Provenance:
    axiom: str
    basis: tuple
    term: str = ""

    def __str__(self):
        out = "%s(%s)" % (self.axiom, ", ".join(self.basis))
        return out + (" " + self.term if self.term else "")


@dataclass
class PolySystem:
    unknowns: tuple
    auxiliary: tuple = ()
    equations: list = field(default_factory=list)
    reductions: list = field(default_factory=list)
    nonzero_blocks: tuple = ()
    mode: str = "coproduct"
    name: str = None

    def add(self, poly, prov, reduction=False):
        if not poly:
            return
        extra = set(poly.variables()) - set(self.unknowns) - set(self.auxiliary)
        if extra:
            raise RejectedInput("equation mentions undeclared unknowns %s" % sorted(extra))
        (self.reductions if reduction else self.equations).append((poly, prov))

    @property
    def all_unknowns(self):
        return tuple(self.unknowns) + tuple(self.auxiliary)

    def by_axiom(self, axiom):
        return [(p, pr) for p, pr in self.equations if pr.axiom == axiom]

    def to_text(self):
        lines = ["# unknowns: " + " ".join(self.unknowns)]
        if self.auxiliary:
            lines.append("# auxiliary: " + " ".join(self.auxiliary))
        for block in self.nonzero_blocks:
            lines.append("# nonzero: (" + ", ".join(block) + ")")
        for p, prov in self.equations:
            lines.append("%s = 0    # %s" % (p, prov))
        if self.reductions:
            lines.append("# reductions (valid when each nonzero block is nonzero)")
            for p, prov in self.reductions:
                lines.append("%s = 0    # %s" % (p, prov))
        return "\n".join(lines) + "\n"

    def __len__(self):
        return len(self.equations)


def _check_overlap(fixed, ansatz):
    for key in ansatz.entries:
        if ansatz.mode == "coproduct":
            i, jk = key
            if fixed.coproduct.get(i, {}).get(jk):
                raise RejectedInput("coproduct entry %r is both fixed and unknown" % (key,))
        else:
            ij, k = key
            if fixed.bracket.get(ij, {}).get(k):
                raise RejectedInput("bracket entry %r is both fixed and unknown" % (key,))


def symbolic_tables(fixed, ansatz):
    """Bracket and coproduct tables with MultiPoly coefficients."""
    br = {ij: {k: MultiPoly.const(c) for k, c in row.items()} for ij, row in fixed.bracket.items()}
    co = {i: {jk: MultiPoly.const(c) for jk, c in row.items()} for i, row in fixed.coproduct.items()}
    for key, p in ansatz.entries.items():
        if ansatz.mode == "coproduct":
            i, jk = key
            row = co.setdefault(i, {})
            row[jk] = row.get(jk, MultiPoly.const(0)) + p
        else:
            ij, k = key
            row = br.setdefault(ij, {})
            row[k] = row.get(k, MultiPoly.const(0)) + p
    return br, co


def _symbolic_bracket(br, n, i, j):
    if i == j:
        return {}
    if i < j:
        return br.get((i, j), {})
    return {k: -c for k, c in br.get((j, i), {}).items()}


def generate_system(fixed, ansatz):
    """
    Expand the axioms for ``fixed`` with the ansatz entries as unknowns:
    coassociativity on basis(x)basis(x)basis, Jacobi (bracket mode only) and,
    for each basis pair a < b, every PBW(x)PBW coefficient of
    [Delta(a), Delta(b)] - Delta([a, b]). Coefficients on monomials outside
    L(x)L are tagged "membership", the rest "compatibility".
    For a rank-one ansatz the reduced equations Y(a, b) = 0 are attached as
    reductions (they follow from the exact ones when T != 0).
    """
    n = fixed.dim
    names = fixed.basis
    _check_overlap(fixed, ansatz)
    if ansatz.mode == "coproduct":
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    if any(jacobi_residual(fixed, i, j, k)):
                        raise RejectedInput("fixed bracket fails the Jacobi identity")
    else:
        for i in range(n):
            if coassociativity_residual(fixed, i):
                raise RejectedInput("fixed coproduct is not coassociative")

    br, co = symbolic_tables(fixed, ansatz)
    system = PolySystem(ansatz.unknowns, ansatz.auxiliary, nonzero_blocks=ansatz.nonzero_blocks,
                        mode=ansatz.mode, name=ansatz.name)

    for i in range(n):
        out = {}
        for (j, k), d in co.get(i, {}).items():
            for (a, b), d2 in co.get(j, {}).items():
                out[(a, b, k)] = out.get((a, b, k), 0) + d * d2
            for (a, b), d2 in co.get(k, {}).items():
                out[(j, a, b)] = out.get((j, a, b), 0) - d * d2
        for key in sorted(out):
            system.add(out[key], Provenance("coassociativity", (names[i],),
                                            "⊗".join(names[t] for t in key)))

    if ansatz.mode == "bracket":
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    res = {}
                    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                        for m, cm in _symbolic_bracket(br, n, b, c).items():
                            for t, ct in _symbolic_bracket(br, n, a, m).items():
                                res[t] = res.get(t, 0) + cm * ct
                    for t in sorted(res):
                        system.add(res[t], Provenance("jacobi", (names[i], names[j], names[k]),
                                                      names[t]))

    U = EnvelopingAlgebra(names, br, co, one=Fraction(1))
    for a in range(n):
        for b in range(a + 1, n):
            da = U.coproduct(U.generator(a))
            db = U.coproduct(U.generator(b))
            ab = {U.gen(k): c for k, c in _symbolic_bracket(br, n, a, b).items()}
            r = U.tensor_commutator(da, db) - U.coproduct(UElement(ab))
            for key in sorted(r.terms, key=lambda k: (sum(map(sum, k)), k)):
                axiom = "compatibility" if all(sum(m) == 1 for m in key) else "membership"
                system.add(r.terms[key], Provenance(axiom, (names[a], names[b]),
                                                    "⊗".join(U.render_mono(m) for m in key)))

    if ansatz.rank1:
        _rank1_reductions(fixed, ansatz, system)
    return system


def _rank1_reductions(fixed, ansatz, system):
    # Phi(a, b) = Y(a, b)(x)T + T(x)Y(a, b) with
    # Y = 1/2 lambda([a,b]) T - lambda_b [a, T] + lambda_a [b, T],
    # and [delta(a), delta(b)] = 0, so T != 0 forces Y = 0.
    lambdas, ts = ansatz.rank1
    n = fixed.dim
    lam = [MultiPoly.var(u) for u in lambdas]
    T = [MultiPoly.var(t) for t in ts]

    def ad(i):
        out = [MultiPoly.const(0)] * n
        for j in range(n):
            for k, c in enumerate(fixed.bracket_basis(i, j)):
                if c:
                    out[k] = out[k] + c * T[j]
        return out

    for a in range(n):
        for b in range(a + 1, n):
            lab = sum((c * lam[k] for k, c in enumerate(fixed.bracket_basis(a, b)) if c),
                      MultiPoly.const(0))
            adT_a, adT_b = ad(a), ad(b)
            for k in range(n):
                y = Fraction(1, 2) * lab * T[k] - lam[b] * adT_a[k] + lam[a] * adT_b[k]
                system.add(y, Provenance("rank1_reduction", (fixed.basis[a], fixed.basis[b]),
                                         fixed.basis[k]), reduction=True)


def instantiate(fixed, ansatz, assignment):
    """The concrete structure obtained by evaluating the ansatz entries."""
    missing = [u for u in ansatz.all_unknowns if u not in assignment]
    if missing:
        raise RejectedInput("assignment misses unknowns %s" % missing)
    br, co = symbolic_tables(fixed, ansatz)
    bracket = {ij: {k: c.evaluate(assignment) for k, c in row.items()} for ij, row in br.items()}
    coproduct = {i: {jk: c.evaluate(assignment) for jk, c in row.items()} for i, row in co.items()}
    return CLAStructure(fixed.basis, bracket, coproduct, name=fixed.name)


# ---------------------------------------------------------------------------
# candidates

class CandidateResult:
    def __init__(self, failures):
        self.failures = failures

    @property
    def ok(self):
        return not self.failures

    def __bool__(self):
        return self.ok

    @property
    def axioms(self):
        return sorted({prov.axiom for _, prov, _ in self.failures})

    def __repr__(self):
        return "CandidateResult(ok=%s, failures=%d)" % (self.ok, len(self.failures))


def verify_candidate(system, assignment):
    """Evaluate every exact equation; failures list (equation, provenance, value)."""
    missing = [u for u in system.all_unknowns if u not in assignment]
    if missing:
        raise RejectedInput("partial assignment, missing %s" % missing)
    values = {u: Fraction(v) for u, v in assignment.items()}
    failures = []
    for p, prov in system.equations:
        v = p.evaluate(values)
        if v:
            failures.append((p, prov, v))
    return CandidateResult(failures)


# ---------------------------------------------------------------------------
# solver

@dataclass
class SolveOutcome:
    status: str
    bindings: dict
    residual_equations: list
    derived_facts: list
    free: tuple = ()

    def render(self):
        lines = ["status: %s" % self.status]
        for u in sorted(self.bindings, key=str):
            lines.append("  %s = %s" % (u, self.bindings[u]))
        if self.free:
            lines.append("free: " + " ".join(self.free))
        for fact in self.derived_facts:
            lines.append("derived: %s" % fact)
        for p, prov in self.residual_equations:
            lines.append("residual: %s = 0    # %s" % (p, prov))
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class DerivedFact:
    unknown: str
    rule: str
    source: object
    provenance: Provenance

    def __str__(self):
        if self.source is None:
            return "%s = 0 by %s [%s]" % (self.unknown, self.rule, self.provenance)
        return "%s = 0 by %s from %s = 0 [%s]" % (self.unknown, self.rule, self.source,
                                                  self.provenance)


def _substituted(eqs, bindings):
    out = []
    seen = set()
    for p, prov in eqs:
        q = poly_substitute(p, bindings) if bindings else p
        if not q:
            continue
        key = q.canonical()
        if key in seen:
            continue
        seen.add(key)
        out.append((q, prov))
    return out


def _eliminate(linear, order, bindings, facts=None):
    """R1: joint exact elimination of linear equations, pivoting on the latest unknowns."""
    cols = [u for u in reversed(order) if any(u in lin for lin, _ in linear)]
    if not cols:
        return False
    rows = [[lin.get(u, 0) for u in cols] + [const] for lin, const in linear]
    R, rk, pivots = rref(QMatrix(rows, len(cols) + 1))
    progress = False
    for r, p in enumerate(pivots):
        if p == len(cols):
            continue  # inconsistent row, left as residual
        u = cols[p]
        if u in bindings:
            continue
        value = MultiPoly.const(-R.entries[r][-1])
        for q in range(p + 1, len(cols)):
            c = R.entries[r][q]
            if c:
                value = value - c * MultiPoly.var(cols[q])
        bindings[u] = value
        if facts is not None and not value:
            facts.append(DerivedFact(u, "linear elimination", None,
                                     Provenance("linear", tuple(reversed(cols)))))
        progress = True
    return progress


def simplify_system(system, max_rounds=50):
    """
    Fixpoint of (R3) drop zero equations, (R1) exact elimination of linear
    equations, (R2) q*u^e = 0 forces u = 0 and, once those stall,
    (R4) for every nonzero block: all maximal minors of the coefficient matrix
    of equations that are homogeneous linear in the block must vanish (one
    group of rows per basis pair / axiom provenance).
    """
    order = list(system.unknowns) + list(system.auxiliary)
    base = list(system.equations) + list(system.reductions)
    derived_eqs = []
    bindings = {}
    facts = []
    seen_minors = set()

    for _ in range(max_rounds):
        current = _substituted(base + derived_eqs, bindings)
        progress = False
        linear = []
        for p, prov in current:
            lp = p.linear_parts()
            if lp is not None and lp[0]:
                linear.append(lp)
        if linear and _eliminate(linear, order, bindings, facts):
            continue
        for p, prov in current:
            mono = p.as_monomial()
            if mono and len(mono[1]) == 1:
                (u,) = mono[1]
                if u not in bindings:
                    bindings[u] = MultiPoly.const(0)
                    facts.append(DerivedFact(u, "monomial root", p, prov))
                    progress = True
        if progress:
            continue
        for block in system.nonzero_blocks:
            groups = {}
            for p, prov in current:
                cof = p.homogeneous_linear_in(block)
                if cof is not None:
                    groups.setdefault((prov.axiom, prov.basis), []).append(
                        ([cof[b] for b in block], prov))
            for gkey, rows in groups.items():
                if len(rows) < len(block):
                    continue
                for subset in combinations(range(len(rows)), len(block)):
                    det = determinant([rows[i][0] for i in subset])
                    if not det:
                        continue
                    key = det.canonical()
                    if key in seen_minors:
                        continue
                    seen_minors.add(key)
                    prov = Provenance("minor", gkey[1], "%s rows %s, block (%s)" % (
                        gkey[0], ",".join(str(i + 1) for i in subset), ", ".join(block)))
                    derived_eqs.append((det, prov))
                    progress = True
        if not progress:
            break

    resolved = resolve_bindings(bindings) if bindings else {}
    resolved = {u: (v.with_unknowns(v.variables()) if isinstance(v, MultiPoly) else v)
                for u, v in resolved.items()}
    residual = _substituted(base + derived_eqs, resolved)
    structure = [u for u in system.unknowns]
    free = tuple(u for u in structure if u not in resolved)
    if residual:
        status = "residual"
    elif all(u in resolved and not resolved[u] for u in structure):
        status = "solved_zero"
    else:
        status = "solved_family"
    ordered = {u: resolved[u] for u in order if u in resolved}
    return SolveOutcome(status, ordered, residual, facts, free)


# ---------------------------------------------------------------------------
# ansatz builders for the worked computations

def _mvar(name):
    return MultiPoly.var(name)


def heisenberg_a_ansatz(fixed, n):
    """delta(x_i) = delta(z) = 0, delta(y_i) built from unknown A, B, C, E."""
    idx = {b: i for i, b in enumerate(fixed.basis)}
    x = [idx["x%d" % (i + 1)] for i in range(n)]
    y = [idx["y%d" % (i + 1)] for i in range(n)]
    z = idx["z"]
    names = []
    for letter in "abc":
        names += ["%s%d%d" % (letter, i + 1, j + 1) for i in range(n) for j in range(n)]
    names += ["e%d" % (i + 1) for i in range(n)]
    entries = {}
    for i in range(n):
        for j in range(n):
            a, b, c = (_mvar("%s%d%d" % (L, i + 1, j + 1)) for L in "abc")
            entries[(y[i], (x[j], z))] = a
            entries[(y[i], (y[j], z))] = b
            entries[(y[i], (z, x[j]))] = c
            entries[(y[i], (z, y[j]))] = -b
        entries[(y[i], (z, z))] = _mvar("e%d" % (i + 1))
    return Ansatz("coproduct", entries, names, name="heis-a(n=%d)" % n)


def nonabelian_case1_ansatz(fixed):
    """delta(x2) = 0, delta(x1) = sum a_ij x_i(x)x_j."""
    entries = {}
    names = []
    for i in range(2):
        for j in range(2):
            u = "a%d%d" % (i + 1, j + 1)
            names.append(u)
            entries[(0, (i, j))] = _mvar(u)
    return Ansatz("coproduct", entries, names, name="nonabelian-case1")


def sl2_rank1_ansatz(fixed):
    return rank1_ansatz(fixed, ["a", "b", "c"], ["t1", "t2", "t3"], name="sl2-rank1")


def cosemisimple_bracket_ansatz(fixed):
    return Ansatz.full(fixed, mode="bracket")


def gl2_center_ansatz(fixed):
    """delta vanishes on sl2 and delta(z) = a z(x)z."""
    z = fixed.basis.index("z")
    return Ansatz("coproduct", {(z, (z, z)): _mvar("a")}, ["a"], name="gl2-center")


def heisenberg_b_ansatz(fixed, n):
    """delta(x_i) = e_i z(x)z, delta(y_i) = sum b_ij (x_j(x)z + z(x)x_j)."""
    idx = {b: i for i, b in enumerate(fixed.basis)}
    x = [idx["x%d" % (i + 1)] for i in range(n)]
    y = [idx["y%d" % (i + 1)] for i in range(n)]
    z = idx["z"]
    names = ["b%d%d" % (i + 1, j + 1) for i in range(n) for j in range(n)]
    names += ["e%d" % (i + 1) for i in range(n)]
    entries = {}
    for i in range(n):
        entries[(x[i], (z, z))] = _mvar("e%d" % (i + 1))
        for j in range(n):
            b = _mvar("b%d%d" % (i + 1, j + 1))
            entries[(y[i], (x[j], z))] = b
            entries[(y[i], (z, x[j]))] = b
    return Ansatz("coproduct", entries, names, name="heis-b(n=%d)" % n)


def heisenberg_c_ansatz(fixed, n):
    """delta(z) = z(x)z fixed; delta(y_i) from unknown A, B (x_j read for the bare x)."""
    idx = {b: i for i, b in enumerate(fixed.basis)}
    x = [idx["x%d" % (i + 1)] for i in range(n)]
    y = [idx["y%d" % (i + 1)] for i in range(n)]
    z = idx["z"]
    names = ["%s%d%d" % (L, i + 1, j + 1) for L in "ab" for i in range(n) for j in range(n)]
    entries = {}
    for i in range(n):
        for j in range(n):
            a, b = _mvar("a%d%d" % (i + 1, j + 1)), _mvar("b%d%d" % (i + 1, j + 1))
            entries[(y[i], (x[j], z))] = a
            entries[(y[i], (y[j], z))] = b
            entries[(y[i], (z, x[j]))] = -_mvar("a%d%d" % (j + 1, i + 1))
            entries[(y[i], (z, y[j]))] = int(i == j) - b
    return Ansatz("coproduct", entries, names, name="heis-c(n=%d)" % n)
