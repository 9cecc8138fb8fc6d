import random
from fractions import Fraction

import pytest

from coalie import catalog
from coalie.errors import ParseError, RejectedInput
from coalie.exactmath import MultiPoly
from coalie.liecoalg import CLAStructure, verify_structure
from coalie.search import (Ansatz, cosemisimple_bracket_ansatz, generate_system,
                           gl2_center_ansatz, heisenberg_a_ansatz, heisenberg_b_ansatz,
                           heisenberg_c_ansatz, instantiate, nonabelian_case1_ansatz, parse_poly,
                           simplify_system, sl2_rank1_ansatz, verify_candidate)
from test_acceptance import heis_a_assignment

a, b = MultiPoly.var("a"), MultiPoly.var("b")


def zero_heis(name, n, **extra):
    p = {"n": n, "B": [[0] * n for _ in range(n)]}
    if name == "heis-a":
        p.update(A=[[0] * n for _ in range(n)], C=[[0] * n for _ in range(n)], E=[0] * n)
    if name == "heis-b":
        p.update(E=[0] * n)
    p.update(extra)
    return catalog.build(name, p)


@pytest.mark.parametrize("text,want", [
    ("a + 2*b", a + 2 * b),
    ("-a^2/3", MultiPoly.const(Fraction(-1, 3)) * a * a),
    ("(a - b)**2", (a - b) * (a - b)),
    ("−a", -a),
    ("3", MultiPoly.const(3)),
])
def test_parse_poly(text, want):
    assert parse_poly(text, ["a", "b"]) == want


@pytest.mark.parametrize("text", ["a + c", "a / b", "a ** b", "f(a)", "a ^ -1", "a +"])
def test_parse_poly_rejects(text):
    with pytest.raises((ParseError, ValueError)):
        parse_poly(text, ["a", "b"])


def test_ansatz_rejects_undeclared_unknowns():
    with pytest.raises((RejectedInput, ValueError)):
        Ansatz("coproduct", {(0, (0, 0)): MultiPoly.var("q")}, ["a"])


def test_overlap_with_fixed_entries_is_rejected():
    s = catalog.build("ex1.4")
    with pytest.raises(RejectedInput):
        generate_system(s, Ansatz("coproduct", {(0, (1, 1)): a}, ["a"]))


def test_bracket_mode_needs_coassociative_delta():
    s = CLAStructure.from_names(["x", "y"], {}, {"x": [("x", "y", 1)]})
    with pytest.raises(RejectedInput):
        generate_system(s, Ansatz.full(s, mode="bracket"))


def test_equations_carry_provenance():
    s = catalog.build("lie-2dim-nonabelian")
    system = generate_system(s, nonabelian_case1_ansatz(s))
    axioms = {prov.axiom for _, prov in system.equations}
    assert axioms <= {"coassociativity", "compatibility", "membership"}
    assert "coassociativity" in axioms
    text = system.to_text()
    assert text.startswith("# unknowns: a11 a12 a21 a22")
    assert "coassociativity(x1) x1⊗x2⊗x2" in text


def test_partial_assignment_is_rejected():
    s = catalog.build("lie-2dim-nonabelian")
    system = generate_system(s, nonabelian_case1_ansatz(s))
    with pytest.raises(RejectedInput):
        verify_candidate(system, {"a11": 0})


def test_case1_family_members_verify():
    s = catalog.build("lie-2dim-nonabelian")
    ansatz = nonabelian_case1_ansatz(s)
    system = generate_system(s, ansatz)
    for v in (-2, 1, 5):
        point = {"a11": 0, "a12": 0, "a21": 0, "a22": v}
        assert verify_candidate(system, point).ok
        assert verify_structure(instantiate(s, ansatz, point)).all_pass
    bad = verify_candidate(system, {"a11": 0, "a12": 1, "a21": -1, "a22": 0})
    assert not bad.ok and "coassociativity" in bad.axioms


def test_sl2_derivation_record():
    s = catalog.build("lie-sl2")
    out = simplify_system(generate_system(s, sl2_rank1_ansatz(s)))
    assert out.status == "solved_zero"
    text = [str(f) for f in out.derived_facts]
    assert any(t.startswith("b = 0 by monomial root from -3*b^3 = 0") for t in text)
    assert out.free == ()


def test_rank1_reductions_are_not_used_for_verification():
    s = catalog.build("lie-sl2")
    system = generate_system(s, sl2_rank1_ansatz(s))
    assert system.reductions
    # T = 0 satisfies every exact equation whatever the lambdas are
    point = {"a": 1, "b": 2, "c": 3, "t1": 0, "t2": 0, "t3": 0}
    assert verify_candidate(system, point).ok


@pytest.mark.parametrize("name", ["ex4.1.2", "matrix-coalg"])
def test_cosemisimple_coalgebras_force_zero_bracket(name):
    s = catalog.build(name)
    out = simplify_system(generate_system(s, cosemisimple_bracket_ansatz(s)))
    assert out.status == "solved_zero"
    assert all(v == 0 for v in out.bindings.values())


def test_gl2_center_coproduct_is_a_free_family():
    s = catalog.build("lie-gl2")
    ansatz = gl2_center_ansatz(s)
    out = simplify_system(generate_system(s, ansatz))
    assert out.status == "solved_family" and list(out.free) == ["a"]
    t = instantiate(s, ansatz, {"a": 1})
    assert verify_structure(t).all_pass


def test_heis_a_printed_condition_iii_disagrees_with_the_system():
    fixed = zero_heis("heis-a", 2)
    system = generate_system(fixed, heisenberg_a_ansatz(fixed, 2))
    A = [[0, 1], [-1, 0]]
    C = [[0, 1], [-1, 0]]  # -A^T
    p = {"n": 2, "A": A, "B": [[0, 0], [0, 0]], "C": C, "E": [0, 0]}
    printed = catalog.validate_heisenberg_a(A, p["B"], C, p["E"], printed=True)
    corrected = catalog.validate_heisenberg_a(A, p["B"], C, p["E"])
    assert printed.all_pass and not corrected.all_pass
    res = verify_candidate(system, heis_a_assignment(p))
    assert not res.ok and res.axioms == ["compatibility"]
    # and the other direction: n = 1, A = 1, C = 0 is valid
    one = {"n": 1, "A": [[1]], "B": [[0]], "C": [[0]], "E": [0]}
    assert not catalog.validate_heisenberg_a(one["A"], one["B"], one["C"], one["E"],
                                             printed=True).all_pass
    assert verify_structure(catalog.build("heis-a", one)).all_pass


def test_heis_a_conditions_match_system_on_random_points():
    fixed = zero_heis("heis-a", 2)
    system = generate_system(fixed, heisenberg_a_ansatz(fixed, 2))
    rng = random.Random(83)
    for _ in range(60):
        p = {"n": 2, "E": [rng.randint(-1, 1) for _ in range(2)]}
        for key in "ABC":
            p[key] = [[rng.choice((0, 0, 1, -1)) for _ in range(2)] for _ in range(2)]
        want = catalog.validate_heisenberg_a(p["A"], p["B"], p["C"], p["E"]).all_pass
        assert verify_candidate(system, heis_a_assignment(p)).ok == want


def test_heis_b_system_is_symmetry_of_b():
    fixed = zero_heis("heis-b", 2)
    system = generate_system(fixed, heisenberg_b_ansatz(fixed, 2))
    base = {"b11": 1, "b22": 2, "e1": 3, "e2": -1}
    assert verify_candidate(system, dict(base, b12=4, b21=4)).ok
    assert not verify_candidate(system, dict(base, b12=4, b21=0)).ok


def test_heis_c_system_forces_symmetric_a():
    basis = ["x1", "y1", "z"]
    fixed = CLAStructure.from_names(basis, {("x1", "y1"): {"z": 1}}, {"z": [("z", "z", 1)]})
    ansatz = heisenberg_c_ansatz(fixed, 1)
    system = generate_system(fixed, ansatz)
    for A, B in ((0, 1), (0, 0), (2, 1), (1, 0)):
        point = {"a11": A, "b11": B}
        valid = not catalog.get("heis-c").validate({"n": 1, "A": [[A]], "B": [[B]]})
        assert verify_candidate(system, point).ok == valid
        assert verify_structure(instantiate(fixed, ansatz, point)).all_pass == valid


def test_heis_c_printed_conditions_admit_an_invalid_structure():
    p = {"n": 2, "A": [[0, 3], [0, 0]], "B": [[1, 0], [0, 0]]}
    entry = catalog.get("heis-c")
    assert entry.validate(p) == ["A = A^T"]
    s = entry.builder(entry.params(p))
    assert not verify_structure(s).all_pass
    z = s.index("z")
    fixed = s.with_coproduct({z: s.coproduct[z]})
    ansatz = heisenberg_c_ansatz(fixed, 2)
    point = {"a11": 0, "a12": 3, "a21": 0, "a22": 0, "b11": 1, "b12": 0, "b21": 0, "b22": 0}
    assert instantiate(fixed, ansatz, point) == s
    assert not verify_candidate(generate_system(fixed, ansatz), point).ok
