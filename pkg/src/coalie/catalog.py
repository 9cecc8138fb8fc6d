"""
Parameterized constructors for the worked examples, with validity checks,
expected facts, and the n(L) + con(L) - dim L survey.
"""

from dataclasses import dataclass, field
from fractions import Fraction
import random

from .envalg import CheckResult, Report
from .errors import RejectedInput, ValidationError
from .exactmath import parse_rational
from .liecoalg import INFINITE, CLAStructure, conilpotency, nilpotency


# ---------------------------------------------------------------------------
# small matrix helpers (lists of lists of Fractions)

def as_matrix(m, n=None):
    rows = [[parse_rational(c) for c in row] for row in m]
    if n is not None and (len(rows) != n or any(len(r) != n for r in rows)):
        raise RejectedInput("expected a %dx%d matrix, got %r" % (n, n, m))
    return rows


def as_vector(v, n=None):
    out = [parse_rational(c) for c in v]
    if n is not None and len(out) != n:
        raise RejectedInput("expected a vector of length %d, got %r" % (n, v))
    return out


def mat_mul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0))
             for j in range(len(b[0]))] for i in range(len(a))]


def mat_vec(a, v):
    return [sum((a[i][k] * v[k] for k in range(len(v))), Fraction(0)) for i in range(len(a))]


def transpose(a):
    return [list(r) for r in zip(*a)]


def mat_add(*ms):
    return [[sum(vals, Fraction(0)) for vals in zip(*rows)] for rows in zip(*ms)]


def is_zero(a):
    return all(not c for row in a for c in row)


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(n, m=None):
    return [[Fraction(0)] * (n if m is None else m) for _ in range(n)]


# ---------------------------------------------------------------------------
# entries

@dataclass(frozen=True)
class Fact:
    key: str
    value: object
    tag: str  # published, derived or trivial


@dataclass
class CatalogEntry:
    name: str
    builder: object
    defaults: dict = field(default_factory=dict)
    validator: object = None
    sampler: object = None
    expected: tuple = ()
    failing: bool = False
    summary: str = ""

    def params(self, params=None):
        extra = sorted(set(params or {}) - set(self.defaults))
        if extra:
            raise ValidationError(self.name, ["unknown parameter %s" % k for k in extra])
        p = dict(self.defaults)
        p.update(params or {})
        return p

    def validate(self, params=None):
        p = self.params(params)
        if self.validator is None:
            return []
        return self.validator(p)

    def build(self, params=None):
        p = self.params(params)
        failed = self.validate(p)
        if failed:
            raise ValidationError(self.name, failed)
        s = self.builder(p)
        object.__setattr__(s, "name", self.name)
        return s

    def sample(self, rng):
        """Random valid parameters (defaults if the entry has no parameters)."""
        return self.sampler(rng) if self.sampler else dict(self.defaults)

    def fact(self, key):
        for f in self.expected:
            if f.key == key:
                return f
        return None


REGISTRY = {}


def _register(entry):
    REGISTRY[entry.name] = entry
    return entry


def names():
    return list(REGISTRY)


def get(name):
    if name not in REGISTRY:
        raise RejectedInput("unknown catalog entry %r (known: %s)" % (name, ", ".join(REGISTRY)))
    return REGISTRY[name]


def build(name, params=None, **kw):
    p = dict(params or {})
    p.update(kw)
    return get(name).build(p)


def _small(rng, lo=-3, hi=3):
    return Fraction(rng.randint(lo, hi))


def _q(rng):
    return Fraction(rng.randint(-4, 4), rng.randint(1, 3))


# -- dimension 1 and 2 ------------------------------------------------------

_register(CatalogEntry(
    "ex1.4",
    lambda p: CLAStructure.from_names(["x", "y"], {("x", "y"): {"y": 1}},
                                      {"x": [("y", "y", parse_rational(p["lambda"]))]}),
    defaults={"lambda": 1},
    sampler=lambda rng: {"lambda": _q(rng)},
    expected=(Fact("passes", True, "published"), Fact("cocommutativity", "cocommutative", "derived"),
              Fact("conilpotency", 2, "derived"), Fact("nilpotency", INFINITE, "derived")),
    summary="[x,y]=y, delta(x)=lambda y(x)y",
))

_register(CatalogEntry(
    "ex1.9-primitive",
    lambda p: CLAStructure(["x"]),
    expected=(Fact("conilpotency", 1, "trivial"), Fact("hopf", True, "published")),
    summary="dim 1, delta=0",
))

_register(CatalogEntry(
    "ex1.9-grouplike",
    lambda p: CLAStructure.from_names(["x"], {}, {"x": [("x", "x", 1)]}),
    expected=(Fact("conilpotency", INFINITE, "published"), Fact("hopf", False, "published")),
    summary="dim 1, delta(x)=x(x)x",
))

_register(CatalogEntry(
    "ex4.1.1", lambda p: CLAStructure(["x1", "x2"]),
    summary="abelian, delta=0",
))

_register(CatalogEntry(
    "ex4.1.2",
    lambda p: CLAStructure.from_names(["x1", "x2"], {},
                                      {"x1": [("x1", "x1", 1)], "x2": [("x2", "x2", 1)]}),
    expected=(Fact("conilpotency", INFINITE, "derived"),),
    summary="abelian, cosemisimple: two group-like-type elements",
))

_register(CatalogEntry(
    "ex4.1.3",
    lambda p: CLAStructure.from_names(["x1", "x2"], {}, {"x1": [("x1", "x1", 1)]}),
    expected=(Fact("coradical_dim", 2, "derived"), Fact("connected", False, "derived")),
    summary="abelian, delta(x1)=x1(x)x1",
))

_register(CatalogEntry(
    "ex4.1.4",
    lambda p: CLAStructure.from_names(["x1", "x2"], {},
                                      {"x1": [("x1", "x1", 1)],
                                       "x2": [("x1", "x2", 1), ("x2", "x1", 1)]}),
    summary="abelian, delta(x1)=x1(x)x1, delta(x2)=x1(x)x2+x2(x)x1",
))

_register(CatalogEntry(
    "ex4.1.5",
    lambda p: CLAStructure.from_names(["x1", "x2"], {}, {"x2": [("x1", "x1", 1)]}),
    expected=(Fact("conilpotency", 2, "derived"),),
    summary="abelian, delta(x2)=x1(x)x1",
))

# -- dimension 3 -------------------------------------------------------------

_register(CatalogEntry(
    "ex1.6a",
    lambda p: CLAStructure.from_names(
        ["x", "y", "z"], {("x", "y"): {"z": 1}},
        {"x": [("z", "z", 1)], "y": [("z", "z", parse_rational(p["lambda"]))]}),
    defaults={"lambda": 1},
    sampler=lambda rng: {"lambda": _q(rng)},
    expected=(Fact("nilpotency", 2, "derived"), Fact("conilpotency", 2, "derived"),
              Fact("survey_value", 1, "derived")),
    summary="Heisenberg, delta(x)=z(x)z, delta(y)=lambda z(x)z",
))


def _build_taft(p):
    return CLAStructure.from_names(
        ["x", "y", "z"], {("x", "y"): {"z": -2}, ("y", "z"): {"x": 2}},
        {"x": [("y", "x", 1)], "y": [("y", "y", 1)], "z": [("z", "y", 1)]})


_register(CatalogEntry(
    "ex1.7-taft", _build_taft, failing=True,
    expected=(Fact("first_failure", "membership", "published"), Fact("witness_pair", ("x", "z"), "published")),
    summary="commutator bracket on the augmentation ideal of the Taft algebra (not a valid structure)",
))


def _build_ex42(p):
    lam = parse_rational(p["lambda"])
    return CLAStructure.from_names(
        ["x", "y", "z"], {("x", "y"): {"y": 1}, ("z", "x"): {"z": -1, "y": lam}},
        {"z": [("x", "y", 1), ("y", "x", -1)]})


_register(CatalogEntry(
    "ex4.2", _build_ex42, defaults={"lambda": 0},
    sampler=lambda rng: {"lambda": _q(rng)},
    expected=(Fact("antipode:x", "-x", "published"), Fact("antipode:y", "-y", "published"),
              Fact("antipode:z", "-z + y", "published"), Fact("antipode2:z", "z - 2*y", "published"),
              Fact("involutory", False, "published"),
              Fact("cocommutativity", "anti_cocommutative", "published"),
              Fact("conilpotency", 2, "derived"), Fact("nilpotency", INFINITE, "derived")),
    summary="[x,y]=y, [z,x]=-z+lambda y, delta(z)=x(x)y-y(x)x",
))


def _build_ex16b(p):
    w1 = list(p["W1"]["basis"])
    w = ["w%d" % (i + 1) for i in range(int(p["dimW"]))]
    phi = as_matrix(p["phi"])  # dimW x dimW1, column j = phi(w1_j)
    deltas = p["delta"]  # per W1 basis element: dimW x dimW matrix
    bracket = {}
    for key, row in p["W1"].get("bracket", {}).items():
        a, b = key.split(",") if isinstance(key, str) else key
        image = [Fraction(0)] * len(w)
        for name, c in row.items():
            j = w1.index(name)
            for r in range(len(w)):
                image[r] += parse_rational(c) * phi[r][j]
        bracket[(a.strip(), b.strip())] = {w[r]: image[r] for r in range(len(w)) if image[r]}
    coproduct = {}
    for j, name in enumerate(w1):
        m = as_matrix(deltas[j], len(w))
        coproduct[name] = [(w[r], w[s], m[r][s]) for r in range(len(w)) for s in range(len(w))
                           if m[r][s]]
    return CLAStructure.from_names(w1 + w, bracket, coproduct)


def _validate_ex16b(p):
    failed = []
    w1 = list(p["W1"]["basis"])
    dim_w = int(p["dimW"])
    if dim_w < 1:
        failed.append("dim W >= 1")
    phi = p["phi"]
    if len(phi) != dim_w or any(len(r) != len(w1) for r in phi):
        failed.append("phi is a dim W x dim W1 matrix")
    if len(p["delta"]) != len(w1):
        failed.append("one delta matrix per W1 basis element")
    try:
        lie = CLAStructure.from_names(w1, {tuple(k.split(",")) if isinstance(k, str) else k: v
                                           for k, v in p["W1"].get("bracket", {}).items()})
        from .liecoalg import jacobi_residual
        n = lie.dim
        if any(any(jacobi_residual(lie, i, j, k)) for i in range(n) for j in range(i + 1, n)
               for k in range(j + 1, n)):
            failed.append("W1 satisfies the Jacobi identity")
    except Exception as exc:  # malformed W1
        failed.append("W1 is a Lie algebra (%s)" % exc)
    return failed


def _sample_ex16b(rng):
    dim_w = rng.randint(1, 2)
    return {
        "W1": {"basis": ["u", "v"], "bracket": {"u,v": {"v": 1}}},
        "dimW": dim_w,
        "phi": [[_small(rng) for _ in range(2)] for _ in range(dim_w)],
        "delta": [[[_small(rng) for _ in range(dim_w)] for _ in range(dim_w)] for _ in range(2)],
    }


_register(CatalogEntry(
    "ex1.6b", _build_ex16b,
    defaults={"W1": {"basis": ["u", "v"], "bracket": {"u,v": {"v": "1"}}}, "dimW": 1,
              "phi": [["0", "1"]], "delta": [[["1"]], [["1"]]]},
    validator=_validate_ex16b, sampler=_sample_ex16b,
    summary="W1 (+) W with bracket phi([,]) and delta factoring through W1",
))

# -- Heisenberg families -----------------------------------------------------

def _heis_basis(n):
    xs = ["x%d" % (i + 1) for i in range(n)]
    ys = ["y%d" % (i + 1) for i in range(n)]
    return xs, ys, xs + ys + ["z"]


def _heis_bracket(n):
    return {("x%d" % (i + 1), "y%d" % (i + 1)): {"z": 1} for i in range(n)}


def validate_heisenberg_a(A, B, C, E, printed=False):
    """
    Conditions (i)-(v) on the coefficient matrices, evaluated exactly.

    Expanding [Delta(y_i), Delta(y_j)] gives the z(x)z coefficient
    a_ij + c_ij - a_ji - c_ji, so (iii) is evaluated as "A + C is symmetric".
    ``printed=True`` evaluates the printed form A + A^T + C + C^T = 0 instead.
    """
    n = len(A)
    A, B, C = as_matrix(A, n), as_matrix(B, n), as_matrix(C, n)
    E = as_vector(E, n)
    BA, B2, BC = mat_mul(B, A), mat_mul(B, B), mat_mul(B, C)
    At, Bt, Ct = transpose(A), transpose(B), transpose(C)
    if printed:
        iii = ("(iii) A + A^T + C + C^T = 0", is_zero(mat_add(A, At, C, Ct)))
    else:
        AC = mat_add(A, C)
        iii = ("(iii) A + C = (A + C)^T", AC == transpose(AC))
    report = Report()
    conds = [
        ("(i) BA = B^2 = BC = 0", is_zero(BA) and is_zero(B2) and is_zero(BC)),
        ("(ii) BE = 0", not any(mat_vec(B, E))),
        iii,
        ("(iv) AB^T = BA^T", mat_mul(A, Bt) == mat_mul(B, At)),
        ("(v) CB^T = BC^T", mat_mul(C, Bt) == mat_mul(B, Ct)),
    ]
    for label, ok in conds:
        chk = report.add(CheckResult(label))
        if not ok:
            chk.fail(label)
    return report


def _heis_a_params(p):
    n = int(p["n"])
    return n, as_matrix(p["A"], n), as_matrix(p["B"], n), as_matrix(p["C"], n), as_vector(p["E"], n)


def _validate_heis_a(p):
    n = int(p["n"])
    if n < 1:
        return ["n >= 1"]
    return [c.name for c in validate_heisenberg_a(p["A"], p["B"], p["C"], p["E"]) if not c.passed]


def _build_heis_a(p):
    n, A, B, C, E = _heis_a_params(p)
    xs, ys, basis = _heis_basis(n)
    co = {}
    for i in range(n):
        terms = []
        for j in range(n):
            terms += [(xs[j], "z", A[i][j]), (ys[j], "z", B[i][j]),
                      ("z", xs[j], C[i][j]), ("z", ys[j], -B[i][j])]
        terms.append(("z", "z", E[i]))
        co[ys[i]] = terms
    return CLAStructure.from_names(basis, _heis_bracket(n), co)


def _symmetric(rng, n):
    S = zeros(n)
    for i in range(n):
        for j in range(i, n):
            S[i][j] = S[j][i] = _small(rng)
    return S


def sample_heis_a(rng, n=None, anti_cocommutative=False):
    """
    Random valid (A, B, C, E). Two families: B = 0 with C = -A + S (S
    symmetric), and (n >= 2) B = beta e_12 with A supported on the first row,
    C = -A + s e_11 and E = (e_1, 0, ...). ``anti_cocommutative`` forces
    C = -A and E = 0.
    """
    n = n or rng.randint(1, 2)
    if n >= 2 and rng.random() < 0.4:
        B = zeros(n)
        B[0][1] = _small(rng) or Fraction(1)
        A = zeros(n)
        A[0][0], A[0][1] = _small(rng), _small(rng)
        S = zeros(n)
        S[0][0] = _small(rng)
        E = [_small(rng)] + [Fraction(0)] * (n - 1)
    else:
        B = zeros(n)
        A = [[_small(rng) for _ in range(n)] for _ in range(n)]
        S = _symmetric(rng, n)
        E = [_small(rng) for _ in range(n)]
    C = mat_add([[-c for c in row] for row in A], S)
    if anti_cocommutative:
        C = [[-c for c in row] for row in A]
        E = [Fraction(0)] * n
    return {"n": n, "A": A, "B": B, "C": C, "E": E}


_register(CatalogEntry(
    "heis-a", _build_heis_a,
    defaults={"n": 1, "A": [[0]], "B": [[0]], "C": [[0]], "E": [1]},
    validator=_validate_heis_a, sampler=sample_heis_a,
    expected=(Fact("involutory", True, "published"),),
    summary="Heisenberg h_{2n+1}, delta(y_i) from (A, B, C, E)",
))


def _validate_heis_b(p):
    n = int(p["n"])
    B = as_matrix(p["B"], n)
    as_vector(p["E"], n)
    return [] if B == transpose(B) else ["B = B^T"]


def _build_heis_b(p):
    n = int(p["n"])
    B, E = as_matrix(p["B"], n), as_vector(p["E"], n)
    xs, ys, basis = _heis_basis(n)
    co = {xs[i]: [("z", "z", E[i])] for i in range(n)}
    for i in range(n):
        co[ys[i]] = [t for j in range(n) for t in ((xs[j], "z", B[i][j]), ("z", xs[j], B[i][j]))]
    return CLAStructure.from_names(basis, _heis_bracket(n), co)


def _sample_heis_b(rng):
    n = rng.randint(1, 2)
    B = zeros(n)
    for i in range(n):
        for j in range(i, n):
            B[i][j] = B[j][i] = _small(rng)
    return {"n": n, "B": B, "E": [_small(rng) for _ in range(n)]}


_register(CatalogEntry(
    "heis-b", _build_heis_b,
    defaults={"n": 1, "B": [[1]], "E": [1]},
    validator=_validate_heis_b, sampler=_sample_heis_b,
    expected=(Fact("involutory", True, "published"),),
    summary="Heisenberg, delta(x_i)=e_i z(x)z, delta(y_i)=sum b_ij (x_j(x)z+z(x)x_j)",
))


def _validate_heis_c(p):
    n = int(p["n"])
    A, B = as_matrix(p["A"], n), as_matrix(p["B"], n)
    failed = []
    if mat_mul(B, B) != B:
        failed.append("B^2 = B")
    if mat_mul(B, A) != A:
        failed.append("BA = A")
    if not is_zero(mat_mul(B, transpose(A))):
        failed.append("BA^T = 0")
    # the (y_i, y_j) coefficient of z(x)z is 2(a_ij - a_ji); with the
    # two conditions above this forces A = 0
    if A != transpose(A):
        failed.append("A = A^T")
    return failed


def _build_heis_c(p):
    n = int(p["n"])
    A, B = as_matrix(p["A"], n), as_matrix(p["B"], n)
    xs, ys, basis = _heis_basis(n)
    co = {"z": [("z", "z", 1)]}
    for i in range(n):
        terms = []
        for j in range(n):
            terms += [(xs[j], "z", A[i][j]), (ys[j], "z", B[i][j]),
                      ("z", xs[j], -A[j][i]), ("z", ys[j], int(i == j) - B[i][j])]
        co[ys[i]] = terms
    return CLAStructure.from_names(basis, _heis_bracket(n), co)


def _sample_heis_c(rng):
    n = rng.randint(1, 2)
    choice = rng.randint(0, 3) if n == 2 else rng.randint(0, 1)
    if choice == 0:
        B = zeros(n)
    elif choice == 1:
        B = identity(n)
    elif choice == 2:
        B = [[1, _small(rng)], [0, 0]]
    else:
        B = [[0, 0], [_small(rng), 1]]
    return {"n": n, "A": zeros(n), "B": B}


_register(CatalogEntry(
    "heis-c", _build_heis_c,
    defaults={"n": 1, "A": [[0]], "B": [[1]]},
    validator=_validate_heis_c, sampler=_sample_heis_c,
    expected=(Fact("involutory", True, "published"),),
    summary="Heisenberg, delta(z)=z(x)z, delta(y_i) from (A, B)",
))

# -- strictly upper triangular coalgebra ------------------------------------

def _un_name(n, i, j):
    return "x%d%d" % (i, j) if n < 10 else "x%d_%d" % (i, j)


def _validate_upper(p):
    n = int(p["n"])
    if n < 3:
        return ["n >= 3"]
    failed = []
    for key in "EFG":
        if len(p[key]) != n - 1:
            failed.append("%s has length n-1" % key)
    return failed


def _build_upper(p):
    n = int(p["n"])
    E, F, G = (as_vector(p[k], n - 1) for k in "EFG")

    def a(i, j):
        return sum(G[i - 1:j - 1], Fraction(0))

    for i in range(1, n + 1):
        for s in range(i + 1, n + 1):
            for j in range(s + 1, n + 1):
                if a(i, s) + a(s, j) != a(i, j):
                    raise ValidationError("upper-un", ["a_is + a_sj = a_ij"])
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    basis = [_un_name(n, i, j) for i, j in pairs]
    top = _un_name(n, 1, n)
    bracket = {}
    for i, j in pairs:
        if (i, j) == (1, n):
            continue
        row = {_un_name(n, i, j): a(i, j)}
        if (i, j) == (1, n - 1):
            for t in range(1, n):
                name = _un_name(n, t, t + 1)
                row[name] = row.get(name, 0) + E[t - 1]
        elif (i, j) == (2, n):
            for t in range(1, n):
                name = _un_name(n, t, t + 1)
                row[name] = row.get(name, 0) + F[t - 1]
        bracket[(top, _un_name(n, i, j))] = row
    co = {}
    for i, j in pairs:
        co[_un_name(n, i, j)] = [(_un_name(n, i, s), _un_name(n, s, j), 1)
                                 for s in range(i + 1, j)]
    return CLAStructure.from_names(basis, bracket, co)


def _sample_upper(rng):
    n = rng.randint(3, 4)
    return {"n": n, **{k: [_small(rng) for _ in range(n - 1)] for k in "EFG"}}


_register(CatalogEntry(
    "upper-un", _build_upper,
    defaults={"n": 3, "E": [1, 1], "F": [1, 1], "G": [1, 1]},
    validator=_validate_upper, sampler=_sample_upper,
    summary="strictly upper triangular coalgebra U_n with brackets from (E, F, G)",
))

# -- plain Lie algebras ------------------------------------------------------

_register(CatalogEntry(
    "lie-sl2",
    lambda p: CLAStructure.from_names(["e", "f", "h"], {("e", "f"): {"h": 1}, ("h", "e"): {"e": 2},
                                                        ("h", "f"): {"f": -2}}),
    summary="sl2, delta=0",
))

_register(CatalogEntry(
    "lie-gl2",
    lambda p: CLAStructure.from_names(["e", "f", "h", "z"],
                                      {("e", "f"): {"h": 1}, ("h", "e"): {"e": 2},
                                       ("h", "f"): {"f": -2}}),
    summary="gl2 = sl2 (+) kz, delta=0",
))


def _validate_abelian(p):
    return [] if int(p["n"]) >= 1 else ["n >= 1"]


_register(CatalogEntry(
    "lie-abelian",
    lambda p: CLAStructure(["a%d" % (i + 1) for i in range(int(p["n"]))]),
    defaults={"n": 2}, validator=_validate_abelian,
    sampler=lambda rng: {"n": rng.randint(1, 4)},
    summary="abelian of dimension n, delta=0",
))

_register(CatalogEntry(
    "lie-2dim-nonabelian",
    lambda p: CLAStructure.from_names(["x1", "x2"], {("x1", "x2"): {"x2": 1}}),
    summary="[x1,x2]=x2, delta=0",
))


def _build_matrix_coalg(p):
    n = int(p["n"])
    names_ = [["y%d%d" % (i + 1, j + 1) for j in range(n)] for i in range(n)]
    co = {names_[i][j]: [(names_[i][s], names_[s][j], 1) for s in range(n)]
          for i in range(n) for j in range(n)}
    return CLAStructure.from_names([x for row in names_ for x in row], {}, co)


_register(CatalogEntry(
    "matrix-coalg", _build_matrix_coalg, defaults={"n": 2},
    validator=lambda p: [] if int(p["n"]) >= 1 else ["n >= 1"],
    sampler=lambda rng: {"n": rng.randint(1, 2)},
    expected=(Fact("conilpotency", INFINITE, "derived"),),
    summary="matrix coalgebra delta(y_ij)=sum y_is(x)y_sj, zero bracket",
))


def default_instances():
    """(label, structure) for every entry at default parameters, plus lie-abelian(1..3)."""
    out = []
    for name, entry in REGISTRY.items():
        if name == "lie-abelian":
            for n in (1, 2, 3):
                out.append(("lie-abelian(%d)" % n, entry.build({"n": n})))
        else:
            out.append((name, entry.build()))
    return out


def random_instances(name, count, seed=0):
    entry = get(name)
    rng = random.Random("%s:%d" % (name, seed))
    out = []
    for _ in range(count):
        p = entry.sample(rng)
        out.append((p, entry.build(p)))
    return out


# ---------------------------------------------------------------------------
# survey

@dataclass
class SurveyTable:
    rows: list
    excluded: list

    @property
    def bound_holds(self):
        return all(r[4] <= 1 for r in self.rows)

    @property
    def max_value(self):
        return max((r[4] for r in self.rows), default=None)

    def render(self):
        head = "%-22s %4s %4s %4s %9s" % ("entry", "n", "con", "dim", "n+con-dim")
        lines = [head, "-" * len(head)]
        for name, n, con, dim, v in self.rows:
            lines.append("%-22s %4d %4d %4d %9d" % (name, n, con, dim, v))
        lines.append("")
        lines.append("excluded (infinite invariant):")
        for name, why in self.excluded:
            lines.append("  %-20s %s" % (name, why))
        lines.append("")
        lines.append("max n+con-dim = %s; bound <= 1 %s" % (
            self.max_value, "holds" if self.bound_holds else "VIOLATED"))
        return "\n".join(lines) + "\n"


def survey_question_0_4(entries=None):
    """
    Table of (name, n(L), con(L), dim L, n + con - dim) over ``entries``
    (a list of (label, structure)); defaults to every catalog entry.
    Failing fixtures are skipped.
    """
    if entries is None:
        entries = [(lab, s) for lab, s in default_instances() if not get_base(lab).failing]
    rows, excluded = [], []
    for label, s in entries:
        n, con = nilpotency(s), conilpotency(s)
        if n is INFINITE or con is INFINITE:
            why = []
            if n is INFINITE:
                why.append("n(L) infinite")
            if con is INFINITE:
                why.append("con(L) infinite")
            excluded.append((label, ", ".join(why)))
            continue
        rows.append((label, n, con, s.dim, n + con - s.dim))
    return SurveyTable(rows, excluded)


def get_base(label):
    return get(label.split("(")[0])
