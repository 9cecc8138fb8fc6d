"""
JSON file formats: algebra files, subspace files, ansatz files, and
machine-readable report dictionaries.

Algebra file::

    {"name": "ex4.2", "basis": ["x", "y", "z"],
     "bracket": {"x,y": {"y": "1"}, "x,z": {"z": "1"}},
     "coproduct": {"z": [["x", "y", "1"], ["y", "x", "-1"]]}}

Bracket keys must list the smaller basis index first; coproduct lists may
repeat a (left, right) pair, in which case the coefficients are added.
"""

import json
from fractions import Fraction

from .envalg import EnvelopingAlgebra
from .errors import ParseError, RejectedInput
from .exactmath import MultiPoly, format_rational, parse_rational
from .liecoalg import INFINITE, CLAStructure
from .search import Ansatz, parse_poly, rank1_ansatz


def _no_duplicates(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise ParseError("duplicate key %r" % k)
        out[k] = v
    return out


def load_json(data, source="<input>"):
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError("not UTF-8: %s" % exc, source)
    try:
        return json.loads(data, object_pairs_hook=_no_duplicates)
    except json.JSONDecodeError as exc:
        raise ParseError("%s (line %d, column %d)" % (exc.msg, exc.lineno, exc.colno), source)
    except ParseError as exc:
        raise ParseError(str(exc), source)


def _rational(text, where):
    try:
        return parse_rational(text)
    except Exception:
        raise ParseError("malformed rational %r" % (text,), where)


def structure_from_dict(doc, source="<input>"):
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object", source)
    unknown_fields = set(doc) - {"name", "basis", "bracket", "coproduct"}
    if unknown_fields:
        raise ParseError("unknown fields %s" % sorted(unknown_fields), source)
    basis = doc.get("basis")
    if not isinstance(basis, list) or not all(isinstance(b, str) and b for b in basis):
        raise ParseError("basis must be a list of names", "%s: basis" % source)
    if len(set(basis)) != len(basis):
        raise ParseError("basis names must be distinct", "%s: basis" % source)
    idx = {b: i for i, b in enumerate(basis)}

    def look(name, where):
        if name not in idx:
            raise ParseError("unknown basis name %r" % (name,), where)
        return idx[name]

    bracket = {}
    for key, row in (doc.get("bracket") or {}).items():
        where = "%s: bracket[%r]" % (source, key)
        parts = [p.strip() for p in key.split(",")]
        if len(parts) != 2:
            raise ParseError("bracket key must be 'xi,xj'", where)
        i, j = look(parts[0], where), look(parts[1], where)
        if i >= j:
            raise ParseError("bracket key must list the earlier basis element first", where)
        if not isinstance(row, dict):
            raise ParseError("bracket value must be an object", where)
        out = {}
        for name, c in row.items():
            k = look(name, where)
            out[k] = out.get(k, 0) + _rational(c, where)
        bracket[(i, j)] = out

    coproduct = {}
    for name, items in (doc.get("coproduct") or {}).items():
        where = "%s: coproduct[%r]" % (source, name)
        i = look(name, where)
        if not isinstance(items, list):
            raise ParseError("coproduct value must be a list of [left, right, coeff]", where)
        out = {}
        for n_item, item in enumerate(items):
            w = "%s[%d]" % (where, n_item)
            if not (isinstance(item, list) and len(item) == 3):
                raise ParseError("expected [left, right, coeff]", w)
            key = (look(item[0], w), look(item[1], w))
            out[key] = out.get(key, 0) + _rational(item[2], w)
        coproduct[i] = out
    return CLAStructure(basis, bracket, coproduct, name=doc.get("name"))


def parse_algebra_file(data, source="<input>"):
    return structure_from_dict(load_json(data, source), source)


def structure_to_dict(s):
    names = s.basis
    bracket = {}
    for (i, j) in sorted(s.bracket):
        bracket["%s,%s" % (names[i], names[j])] = {
            names[k]: format_rational(c) for k, c in sorted(s.bracket[(i, j)].items())}
    coproduct = {}
    for i in sorted(s.coproduct):
        coproduct[names[i]] = [[names[j], names[k], format_rational(c)]
                               for (j, k), c in sorted(s.coproduct[i].items())]
    doc = {"name": s.name or "", "basis": list(names), "bracket": bracket,
           "coproduct": coproduct}
    return doc


def emit_algebra_file(s):
    return json.dumps(structure_to_dict(s), indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------

def parse_subspace_file(data, s, source="<input>"):
    """{"vectors": [{"x": "1"}, {"z": "1", "x": "-1"}, {"x^2": "1"}]} -> UElements."""
    doc = load_json(data, source)
    vectors = doc.get("vectors") if isinstance(doc, dict) else None
    if not isinstance(vectors, list):
        raise ParseError("expected {\"vectors\": [...]}", source)
    U = EnvelopingAlgebra.of(s)
    out = []
    for n, v in enumerate(vectors):
        where = "%s: vectors[%d]" % (source, n)
        if not isinstance(v, dict):
            raise ParseError("each vector is an object monomial -> coefficient", where)
        try:
            out.append(U.parse_element({k: _rational(c, where) for k, c in v.items()}))
        except ParseError:
            raise
        except Exception as exc:
            raise ParseError(str(exc), where)
    return out


def parse_ansatz_file(data, fixed, source="<input>"):
    """
    {"mode": "coproduct", "unknowns": ["a11", ...], "auxiliary": [...],
     "nonzero": [["t1", "t2", "t3"]],
     "coproduct": {"x1": [["x1", "x2", "a12"], ...]},
     "bracket": {"x1,x2": {"x1": "c1"}},
     "rank1": {"lambda": {"e": "a", ...}, "T": ["t1", "t2", "t3"]}}
    """
    doc = load_json(data, source)
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object", source)
    idx = {b: i for i, b in enumerate(fixed.basis)}

    def look(name, where):
        if name not in idx:
            raise ParseError("unknown basis name %r" % (name,), where)
        return idx[name]

    if "rank1" in doc:
        r = doc["rank1"]
        lam = r.get("lambda", {})
        lambdas = [lam[b] for b in fixed.basis]
        return rank1_ansatz(fixed, lambdas, list(r["T"]), name=doc.get("name"))

    mode = doc.get("mode", "coproduct")
    unknowns = list(doc.get("unknowns", []))
    auxiliary = list(doc.get("auxiliary", []))
    declared = unknowns + auxiliary
    entries = {}
    try:
        if mode == "coproduct":
            for name, items in (doc.get("coproduct") or {}).items():
                where = "%s: coproduct[%r]" % (source, name)
                i = look(name, where)
                for item in items:
                    key = (i, (look(item[0], where), look(item[1], where)))
                    p = parse_poly(item[2], declared)
                    entries[key] = entries.get(key, MultiPoly.const(0)) + p
        else:
            for key, row in (doc.get("bracket") or {}).items():
                where = "%s: bracket[%r]" % (source, key)
                a, b = [p.strip() for p in key.split(",")]
                i, j = look(a, where), look(b, where)
                if i >= j:
                    raise ParseError("bracket key must list the earlier basis element first",
                                     where)
                for name, expr in row.items():
                    entries[((i, j), look(name, where))] = parse_poly(expr, declared)
        return Ansatz(mode, entries, unknowns, auxiliary, doc.get("nonzero", ()),
                      name=doc.get("name"))
    except ValueError as exc:
        raise ParseError(str(exc), source)
    except RejectedInput as exc:
        raise ParseError(str(exc), source)


def ansatz_to_dict(ansatz, fixed):
    names = fixed.basis
    doc = {"name": ansatz.name or "", "mode": ansatz.mode, "unknowns": list(ansatz.unknowns)}
    if ansatz.auxiliary:
        doc["auxiliary"] = list(ansatz.auxiliary)
    if ansatz.nonzero_blocks:
        doc["nonzero"] = [list(b) for b in ansatz.nonzero_blocks]
    if ansatz.rank1:
        lambdas, ts = ansatz.rank1
        doc["rank1"] = {"lambda": dict(zip(names, lambdas)), "T": list(ts)}
        return doc
    if ansatz.mode == "coproduct":
        co = {}
        for (i, (j, k)), p in sorted(ansatz.entries.items()):
            co.setdefault(names[i], []).append([names[j], names[k], str(p)])
        doc["coproduct"] = co
    else:
        br = {}
        for ((i, j), k), p in sorted(ansatz.entries.items()):
            br.setdefault("%s,%s" % (names[i], names[j]), {})[names[k]] = str(p)
        doc["bracket"] = br
    return doc


# ---------------------------------------------------------------------------
# report serialization

def jsonable(v):
    if v is INFINITE:
        return "inf"
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, MultiPoly):
        return str(v)
    if isinstance(v, dict):
        return {str(k): jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [jsonable(x) for x in v]
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    return str(v)


def report_to_dict(report):
    return {
        "all_pass": report.all_pass,
        "checks": [{"name": c.name, "status": c.status, "note": c.note,
                    "witnesses": [str(w) for w in c.witnesses]} for c in report],
    }


def dumps(doc):
    return json.dumps(jsonable(doc), indent=2, ensure_ascii=False) + "\n"
