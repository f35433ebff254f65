"""Tests for permutation groups, coset actions, and the structure census.

The enumeration has two independent engines (exhaustive naive search and
holomorph-based search); they are cross-checked against each other here,
and counts are pinned against hand-checked small cases.
"""

from __future__ import annotations

import pytest
from hypothesis import given, strategies as st
from sympy.combinatorics import Permutation as SymPerm

from hopfgal.gp_enum import (
    COMPLETE_ORDERS,
    CapExceeded,
    CensusInstance,
    FiniteGroup,
    Perm,
    SearchBudgetExceeded,
    UnsupportedInstance,
    action_image,
    almost_classical,
    beta_subgroup,
    census_instances,
    census_reports,
    coset_action,
    cyclotomic_subgroup,
    enumerate_regular_normalized,
    full_galois_group,
    instance_from_json,
    instance_to_json,
    is_regular,
    mulclose,
    normal_subgroups,
    push_through_action,
    results_to_json,
    zeta1_galois_group,
)


def cycle(degree: int) -> Perm:
    """The full cycle 0 -> 1 -> ... -> degree-1 -> 0."""
    return Perm(tuple((i + 1) % degree for i in range(degree)))


def cyclic_group(degree: int) -> FiniteGroup:
    """The regular representation of the cyclic group of that order."""
    return FiniteGroup([cycle(degree)])


def trivial_group(degree: int) -> FiniteGroup:
    return FiniteGroup([Perm.identity(degree)])


def symmetric_3() -> FiniteGroup:
    return FiniteGroup([Perm((1, 2, 0)), Perm((1, 0, 2))])


def perms(degree: int):
    return st.permutations(range(degree)).map(lambda s: Perm(tuple(s)))


# ---------------------------------------------------------------------------
# Perm


def test_perm_rejects_non_bijection():
    with pytest.raises(ValueError):
        Perm((0, 0, 1))


def test_perm_composition_convention():
    # (f * g)(x) = f(g(x)): apply the right factor first
    f = Perm((1, 2, 0))
    g = Perm((1, 0, 2))
    assert (f * g).images == (2, 1, 0)
    assert (g * f).images == (0, 2, 1)


@given(perms(5), perms(5), st.integers(min_value=0, max_value=4))
def test_perm_composition_pointwise(f, g, x):
    assert (f * g)(x) == f(g(x))


@given(perms(6))
def test_perm_inverse_and_identity(f):
    ident = Perm.identity(6)
    assert f * f.inverse() == ident
    assert f.inverse() * f == ident
    assert f * ident == f and ident * f == f


@given(perms(7))
def test_perm_order_matches_sympy(f):
    assert f.order() == SymPerm(list(f.images)).order()


def test_fixed_point_free():
    assert cycle(4).is_fixed_point_free()
    assert not Perm((0, 2, 1)).is_fixed_point_free()
    assert not Perm.identity(3).is_fixed_point_free()


# ---------------------------------------------------------------------------
# mulclose and FiniteGroup


def test_mulclose_cyclic():
    closure = mulclose([cycle(5)])
    assert len(closure) == 5
    assert Perm.identity(5) in closure


def test_mulclose_limit_prunes():
    assert mulclose([Perm((1, 2, 0)), Perm((1, 0, 2))], limit=4) is None
    assert len(mulclose([Perm((1, 2, 0)), Perm((1, 0, 2))], limit=6)) == 6


def test_mulclose_needs_generators():
    with pytest.raises(ValueError):
        mulclose([])


def test_finite_group_validates_element_list():
    gens = [Perm((1, 2, 0))]
    FiniteGroup(gens, mulclose(gens))  # matching list accepted
    with pytest.raises(ValueError):
        FiniteGroup(gens, [Perm.identity(3)])  # not the closure


def test_finite_group_rejects_mixed_degrees():
    with pytest.raises(ValueError):
        FiniteGroup([Perm((1, 0)), Perm((1, 2, 0))])


def test_finite_group_is_immutable():
    g = cyclic_group(3)
    with pytest.raises(AttributeError):
        g.degree = 5


def test_finite_group_predicates():
    s3 = symmetric_3()
    assert s3.order == 6
    assert not s3.is_abelian()
    assert not s3.is_cyclic()
    c6 = cyclic_group(6)
    assert c6.is_abelian() and c6.is_cyclic()
    assert FiniteGroup([Perm((1, 2, 0))]) <= s3
    assert not (s3 <= FiniteGroup([Perm((1, 2, 0))]))


# ---------------------------------------------------------------------------
# coset actions


def test_coset_action_identity_coset_is_zero():
    s3 = symmetric_3()
    delta = FiniteGroup([Perm((1, 0, 2))])
    size, action = coset_action(s3, delta)
    assert size == 3
    for d in delta.elements:
        assert action[d](0) == 0  # delta stabilizes its own coset


def test_coset_action_is_homomorphism():
    s3 = symmetric_3()
    delta = FiniteGroup([Perm((1, 0, 2))])
    _, action = coset_action(s3, delta)
    for g in s3.elements:
        for h in s3.elements:
            assert action[g * h] == action[g] * action[h]


def test_coset_action_transitive_image():
    gamma = full_galois_group(3, 1)
    delta = cyclotomic_subgroup(3, 1)
    size, image, action = action_image(gamma, delta)
    assert size == gamma.order // delta.order
    reached = {action[g](0) for g in gamma.elements}
    assert reached == set(range(size))


def test_coset_action_requires_subgroup():
    with pytest.raises(ValueError):
        coset_action(cyclic_group(4), cyclic_group(3))


def test_regular_representation_is_regular():
    size, action = coset_action(cyclic_group(5), trivial_group(5))
    assert size == 5
    image = FiniteGroup([action[cycle(5)]])
    assert is_regular(image, 5)


def test_is_regular_rejects_point_stabilizer():
    # a transposition fixes a point, so the full symmetric group on 3
    # points is transitive but not regular
    assert not is_regular(symmetric_3(), 3)
    assert not is_regular(cyclic_group(3), 4)


# ---------------------------------------------------------------------------
# normal subgroups and complements


def test_normal_subgroups_symmetric_3():
    sizes = sorted(len(n) for n in normal_subgroups(symmetric_3()))
    assert sizes == [1, 3, 6]  # trivial, alternating, full


def test_normal_subgroups_cyclic_4():
    # every subgroup of an abelian group is normal
    sizes = sorted(len(n) for n in normal_subgroups(cyclic_group(4)))
    assert sizes == [1, 2, 4]


def test_almost_classical_symmetric_3():
    s3 = symmetric_3()
    delta = FiniteGroup([Perm((1, 0, 2))])
    complements = almost_classical(s3, delta)
    assert len(complements) == 1
    assert complements[0].order == 3
    assert complements[0].is_cyclic()


def test_almost_classical_requires_subgroup():
    with pytest.raises(ValueError):
        almost_classical(cyclic_group(4), cyclic_group(3))


def test_complements_push_into_enumeration():
    gamma = full_galois_group(3, 1)
    delta = cyclotomic_subgroup(3, 1)
    _, action = coset_action(gamma, delta)
    enumerated = {frozenset(g.elements)
                  for g in enumerate_regular_normalized(gamma, delta)}
    for comp in almost_classical(gamma, delta):
        image = push_through_action(action, comp)
        assert frozenset(image.elements) in enumerated


# ---------------------------------------------------------------------------
# splitting-field Galois groups (orders are the field degrees)


def test_galois_group_orders():
    assert full_galois_group(3, 1).order == 6     # [Q(zeta_3, 2^(1/3)) : Q]
    assert full_galois_group(3, 2).order == 54    # [Q(zeta_9, 2^(1/9)) : Q]
    assert zeta1_galois_group(3, 2).order == 27   # over Q(zeta_3)
    assert cyclotomic_subgroup(3, 2).order == 6   # fixes the radical
    assert beta_subgroup(3, 2).order == 3


# ---------------------------------------------------------------------------
# the two engines agree


@pytest.mark.parametrize("p,n,builder", [
    (3, 1, "full"),    # degree 3
    (3, 2, "zeta1"),   # degree 9
])
def test_engines_agree(p, n, builder):
    if builder == "full":
        gamma, delta = full_galois_group(p, n), cyclotomic_subgroup(p, n)
    else:
        gamma, delta = zeta1_galois_group(p, n), beta_subgroup(p, n)
    naive = enumerate_regular_normalized(gamma, delta, engine="naive")
    holo = enumerate_regular_normalized(gamma, delta, engine="holomorph")
    assert [g.elements for g in naive] == [g.elements for g in holo]


def test_engines_agree_on_cyclic_4_regular():
    gamma, delta = cyclic_group(4), trivial_group(4)
    naive = enumerate_regular_normalized(gamma, delta, engine="naive")
    holo = enumerate_regular_normalized(gamma, delta, engine="holomorph")
    assert [g.elements for g in naive] == [g.elements for g in holo]
    # a cyclic extension of degree 4 carries exactly two structures:
    # the cyclic one and the elementary abelian one
    assert len(naive) == 2
    assert sorted(g.is_cyclic() for g in naive) == [False, True]
    for g in naive:
        assert is_regular(g, 4)


def test_enumeration_is_deterministic():
    gamma, delta = zeta1_galois_group(3, 2), beta_subgroup(3, 2)
    first = enumerate_regular_normalized(gamma, delta)
    second = enumerate_regular_normalized(gamma, delta)
    assert [g.elements for g in first] == [g.elements for g in second]


def test_trivial_coset_space():
    gamma = cyclic_group(2)
    results = enumerate_regular_normalized(gamma, gamma)
    assert len(results) == 1 and results[0].order == 1


# ---------------------------------------------------------------------------
# refusals


def test_cap_exceeded_generic():
    with pytest.raises(CapExceeded) as exc:
        enumerate_regular_normalized(cyclic_group(30), trivial_group(30))
    assert exc.value.size == 30 and exc.value.cap == 15


def test_cap_exceeded_prime_power():
    with pytest.raises(CapExceeded) as exc:
        enumerate_regular_normalized(cyclic_group(81), trivial_group(81))
    assert exc.value.size == 81 and exc.value.cap == 27


def test_incomplete_degree_refused():
    assert 6 not in COMPLETE_ORDERS
    for engine in ("auto", "naive", "holomorph"):
        with pytest.raises(UnsupportedInstance):
            enumerate_regular_normalized(cyclic_group(6), trivial_group(6),
                                         engine=engine)


def test_naive_engine_degree_limit():
    with pytest.raises(UnsupportedInstance):
        enumerate_regular_normalized(cyclic_group(25), trivial_group(25),
                                     engine="naive")


def test_unknown_engine_rejected():
    with pytest.raises(ValueError):
        enumerate_regular_normalized(cyclic_group(3), trivial_group(3),
                                     engine="fast")


def test_search_budget_enforced():
    gamma, delta = zeta1_galois_group(3, 2), beta_subgroup(3, 2)
    with pytest.raises(SearchBudgetExceeded):
        enumerate_regular_normalized(gamma, delta, engine="naive",
                                     budget_seconds=0.0)


def test_refusals_share_base_class():
    from hopfgal.gp_enum import EnumerationRefusal
    assert issubclass(CapExceeded, EnumerationRefusal)
    assert issubclass(UnsupportedInstance, EnumerationRefusal)
    assert issubclass(SearchBudgetExceeded, EnumerationRefusal)


# ---------------------------------------------------------------------------
# JSON interfaces


def test_instance_json_round_trip():
    gamma = full_galois_group(3, 1)
    delta = cyclotomic_subgroup(3, 1)
    data = instance_to_json(gamma, delta)
    gamma2, delta2 = instance_from_json(data)
    assert gamma2 == gamma and delta2 == delta


def test_instance_from_json_checks_degree():
    with pytest.raises(ValueError):
        instance_from_json({"degree": 4,
                            "gamma_generators": [[1, 2, 0]],
                            "delta_generators": []})


def test_instance_from_json_empty_generators_mean_trivial():
    gamma, delta = instance_from_json({"degree": 3,
                                       "gamma_generators": [[1, 2, 0]],
                                       "delta_generators": []})
    assert gamma.order == 3 and delta.order == 1


def test_results_json_shape():
    gamma = full_galois_group(3, 1)
    delta = cyclotomic_subgroup(3, 1)
    results = enumerate_regular_normalized(gamma, delta)
    data = results_to_json(gamma, delta, results)
    assert data["degree"] == 3
    assert data["count"] == len(results) == 1
    entry = data["subgroups"][0]
    assert entry["regular"] and entry["normalized"]
    assert entry["cyclic"] is True
    assert entry["almost_classical"] is True
    assert sorted(map(tuple, entry["elements"]))[0] == (0, 1, 2)


# ---------------------------------------------------------------------------
# the frozen census


def test_census_instances_are_pinned():
    instances = census_instances()
    expected = {
        "cubic-radical-over-Q": (1, 1),
        "ninth-root-radical-over-Q": (1, 1),
        "ninth-root-radical-over-cyclotomic": (3, 3),
    }
    assert {inst.label: (inst.expected_structures,
                         inst.expected_almost_classical)
            for inst in instances} == expected


@pytest.mark.parametrize("label", [
    "cubic-radical-over-Q",
    "ninth-root-radical-over-Q",
    "ninth-root-radical-over-cyclotomic",
])
def test_census_reports_pass(label):
    instance = next(i for i in census_instances() if i.label == label)
    reports = census_reports(instance)
    assert [r.claim for r in reports] == ["census-counts", "census-cyclic"]
    for report in reports:
        assert report.ok, report.witness


def test_census_detects_wrong_expectation():
    base = census_instances()[0]
    wrong = CensusInstance(base.label, base.gamma, base.delta,
                           expected_structures=2,
                           expected_almost_classical=1)
    counts_report = census_reports(wrong)[0]
    assert not counts_report.ok
    assert counts_report.witness["stage"] == "structure-count"
