import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coalie import catalog
from coalie.errors import InconsistencyError, RejectedInput, StructureError
from coalie.exactmath import Subspace
from coalie.liecoalg import (INFINITE, CLAStructure, center, cocommutativity_type,
                             conilpotency, coradical_unital, delta_kernel, is_unimodular,
                             kernel_chain, lemma_2_8_check, lemma_3_1_properties,
                             lower_central_series, nilpotency, small_centralizer_sampled,
                             square_tensor_basis, verify_structure)

VALID = [(l, s) for l, s in catalog.default_instances() if not catalog.get_base(l).failing]


def full(s):
    return Subspace([s.unit_vector(i) for i in range(s.dim)], s.dim)


def test_from_names_normalizes_keys():
    s = CLAStructure.from_names(["x", "y"], {("y", "x"): {"y": -1}}, {"x": [("y", "y", 1)]})
    assert s.bracket == {(0, 1): {1: 1}}
    assert s.coproduct == {0: {(1, 1): 1}}


def test_structure_rejects_bad_indices():
    with pytest.raises(StructureError):
        CLAStructure(["x", "y"], {(1, 0): {0: 1}}, {})
    with pytest.raises(StructureError):
        CLAStructure(["x", "y"], {}, {0: {(0, 2): 1}})


def test_structure_is_immutable():
    s = catalog.build("ex1.4")
    with pytest.raises(Exception):
        s.basis = ("a", "b")


def test_zero_coefficients_are_dropped():
    s = CLAStructure(["x", "y"], {(0, 1): {1: 0}}, {0: {(1, 1): 0}})
    assert s.bracket == {} and s.coproduct == {}


@pytest.mark.parametrize("label,s", VALID, ids=[l for l, _ in VALID])
def test_catalog_entry_is_valid(label, s):
    r = verify_structure(s)
    assert r.all_pass, [str(w) for c in r for w in c.witnesses]


def test_jacobi_failure_skips_envelope_checks():
    # [x,y]=z, [y,z]=x, [x,z]=x breaks Jacobi
    s = CLAStructure.from_names(["x", "y", "z"],
                                {("x", "y"): {"z": 1}, ("y", "z"): {"x": 1}, ("x", "z"): {"x": 1}})
    r = verify_structure(s)
    assert r["jacobi"].status == "fail"
    assert r["membership"].status == "skipped" and r["compatibility"].status == "skipped"


def test_coassociativity_failure_witness():
    s = CLAStructure.from_names(["x", "y"], {}, {"x": [("x", "y", 1)]})
    r = verify_structure(s)
    assert r["coassociativity"].status == "fail"
    assert r["coassociativity"].witnesses[0].basis == ("x",)


def test_compatibility_failure_for_non_compatible_delta():
    # [x,y]=y with delta(y) = x(x)x is coassociative but not compatible
    s = CLAStructure.from_names(["x", "y"], {("x", "y"): {"y": 1}}, {"y": [("x", "x", 1)]})
    r = verify_structure(s)
    assert r["coassociativity"].passed
    assert not r.all_pass


def test_taft_witnesses():
    r = verify_structure(catalog.build("ex1.7-taft"))
    assert r.failed == ["membership", "compatibility"]
    pairs = [w.basis for w in r["membership"].witnesses]
    assert ("x", "z") in pairs


@pytest.mark.parametrize("name,key", [
    (name, f.key) for name in catalog.names() for f in catalog.get(name).expected
    if f.key in ("conilpotency", "nilpotency", "cocommutativity", "connected", "coradical_dim")
])
def test_recorded_facts(name, key):
    s = catalog.build(name)
    want = catalog.get(name).fact(key).value
    got = {
        "conilpotency": lambda: conilpotency(s),
        "nilpotency": lambda: nilpotency(s),
        "cocommutativity": lambda: cocommutativity_type(s),
        "connected": lambda: coradical_unital(s).is_connected,
        "coradical_dim": lambda: coradical_unital(s).subspace.dim,
    }[key]()
    assert got == want


def test_lower_central_series_of_heisenberg():
    dims, zero = lower_central_series(catalog.build("heis-a"))
    assert dims == [3, 1, 0] and zero
    assert nilpotency(catalog.build("lie-abelian", n=2)) == 1
    assert nilpotency(catalog.build("lie-sl2")) is INFINITE


def test_kernel_chain():
    assert kernel_chain(catalog.build("heis-b")) == [1, 2, 3]
    assert conilpotency(catalog.build("heis-b")) == 3
    assert kernel_chain(catalog.build("ex1.9-grouplike")) == [0, 0]


def test_infinite_compares_above_integers():
    assert INFINITE > 10 ** 9 and not INFINITE < 3 and str(INFINITE) == "inf"


def test_cocommutativity_types():
    assert cocommutativity_type(catalog.build("lie-sl2")) == "zero"
    assert cocommutativity_type(catalog.build("ex1.4")) == "cocommutative"
    assert cocommutativity_type(catalog.build("ex4.2")) == "anti_cocommutative"
    assert cocommutativity_type(catalog.build("ex1.7-taft")) == "neither"


def test_delta_kernel_and_center():
    s = catalog.build("ex4.2")
    assert delta_kernel(s).render() == "span{x, y}"
    assert center(catalog.build("heis-a")).render() == "span{z}"
    assert center(catalog.build("lie-gl2")).render() == "span{z}"


def test_delta_kernel_must_be_a_subalgebra():
    # [x,y]=z with delta(z) != 0: ker delta = span{x, y} is not closed
    s = CLAStructure.from_names(["x", "y", "z"], {("x", "y"): {"z": 1}}, {"z": [("z", "z", 1)]})
    with pytest.raises(InconsistencyError):
        delta_kernel(s)


def test_unimodular():
    assert is_unimodular(catalog.build("heis-a"))
    assert is_unimodular(catalog.build("lie-sl2"))
    assert not is_unimodular(catalog.build("lie-2dim-nonabelian"))


def test_anti_cocommutative_check_rejects_other_types():
    with pytest.raises(RejectedInput):
        lemma_2_8_check(catalog.build("ex1.4"))


def test_anti_cocommutative_heisenberg_samples():
    rng = random.Random(28)
    for _ in range(20):
        s = catalog.build("heis-a", catalog.sample_heis_a(rng, anti_cocommutative=True))
        assert lemma_2_8_check(s).all_pass
        assert conilpotency(s) <= 2


def test_coradical_of_cosemisimple_entry():
    r = coradical_unital(catalog.build("ex4.1.3"))
    assert not r.is_connected and r.subspace.dim == 2
    r = coradical_unital(catalog.build("ex4.2"))
    assert r.is_connected and r.subspace.render() == "span{1}"


@pytest.mark.parametrize("label,s", VALID, ids=[l for l, _ in VALID])
def test_pairing_properties_hold_on_valid_entries(label, s):
    r = lemma_3_1_properties(s)
    assert r.all_pass, [(c.name, c.witnesses) for c in r if not c.passed]


def test_pairing_properties_fail_on_taft():
    assert not lemma_3_1_properties(catalog.build("ex1.7-taft")).all_pass


def test_square_tensor_on_grouplike():
    Omega, T, ratio = square_tensor_basis(catalog.build("ex1.9-grouplike"))
    assert T == (1,) and ratio == 1
    assert square_tensor_basis(catalog.build("lie-sl2")) is None


def test_small_centralizer_sampler():
    sl2 = catalog.build("lie-sl2")
    assert small_centralizer_sampled(sl2, full(sl2), Subspace([], 3), seed=3)
    ab = catalog.build("lie-abelian", n=2)
    res = small_centralizer_sampled(ab, full(ab), Subspace([], 2))
    assert not res and res.witness is not None
    gl2 = catalog.build("lie-gl2")
    assert small_centralizer_sampled(gl2, full(gl2), center(gl2))
    assert not small_centralizer_sampled(gl2, full(gl2), Subspace([], 4))
    nonab = catalog.build("lie-2dim-nonabelian")
    assert small_centralizer_sampled(nonab, full(nonab), Subspace([], 2))
    # the Heisenberg algebra is abelian modulo its center
    h = catalog.build("heis-a")
    assert not small_centralizer_sampled(h, full(h), center(h))


def test_sampler_requires_an_ideal():
    s = catalog.build("lie-2dim-nonabelian")
    with pytest.raises(RejectedInput):
        small_centralizer_sampled(s, full(s), Subspace([(1, 0)], 2))


@settings(max_examples=25, deadline=None)
@given(st.integers(-3, 3), st.integers(-3, 3))
def test_ex14_family_is_valid_for_every_lambda(lam, mu):
    s = catalog.build("ex1.4", {"lambda": lam})
    assert verify_structure(s).all_pass
    t = catalog.build("ex1.6a", {"lambda": Fraction(mu, 2)})
    assert verify_structure(t).all_pass
