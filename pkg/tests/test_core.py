import pytest
from hypothesis import given, strategies as st

from polydiff import (
    CyclicPlace,
    CyclicTower,
    ElabPlace,
    ElementaryAbelian,
    GroupParams,
    TameKummer,
    TamePlace,
    ValidationError,
    p_adic_digits,
    require_valid,
    validate_spec,
)
from polydiff.core import from_digits


def test_digits_examples():
    assert p_adic_digits(0, 5, 3) == (0, 0, 0)
    assert p_adic_digits(5 ** 3 - 1, 5, 3) == (4, 4, 4)
    assert p_adic_digits(5, 3, 2) == (2, 1)


@pytest.mark.parametrize("k", [-1, 9, 100])
def test_digits_out_of_range(k):
    with pytest.raises(ValueError):
        p_adic_digits(k, 3, 2)


@given(st.sampled_from([2, 3, 5, 7, 11]), st.integers(1, 6), st.data())
def test_digits_round_trip(p, n, data):
    k = data.draw(st.integers(0, p ** n - 1))
    digits = p_adic_digits(k, p, n)
    assert all(0 <= a < p for a in digits)
    assert sum(a * p ** j for j, a in enumerate(digits)) == k
    assert from_digits(digits, p) == k


@given(st.sampled_from([2, 3, 5]), st.integers(1, 4), st.data())
def test_digits_follow_radix_order(p, n, data):
    k = data.draw(st.integers(0, p ** n - 2))
    a, b = p_adic_digits(k, p, n), p_adic_digits(k + 1, p, n)
    # compare most significant digit first
    assert tuple(reversed(a)) < tuple(reversed(b))


def test_large_prime_powers_stay_exact():
    params = GroupParams(10007, 5)
    assert params.q == 10007 ** 5
    assert from_digits(p_adic_digits(params.q - 1, 10007, 5), 10007) == params.q - 1


def test_cyclic_place_reads_e_from_leading_zeros():
    assert CyclicPlace.from_phi((0, 0, 7)).e == 1
    assert CyclicPlace.from_phi((1, 3)).e == 2


def test_tame_place_derivation():
    place = TamePlace.of(4, 6)
    assert (place.e, place.phi) == (3, 2)
    assert place.phi * 6 == place.e * place.vu


def test_types_reject_non_integers():
    with pytest.raises(TypeError):
        GroupParams(2.0, 1)
    with pytest.raises(ValueError):
        GroupParams(2, 0)


def test_elab_single_place_too_small():
    report = validate_spec(ElementaryAbelian(GroupParams(2, 2), [ElabPlace(1)]))
    assert not report.ok
    assert report.g_top == 0 and not report.genus_ok


def test_elab_two_places_ok():
    report = validate_spec(ElementaryAbelian(GroupParams(3, 1), [ElabPlace(2), ElabPlace(2)]))
    assert report.ok and report.g_top == 4 and report.genus_ok


def test_elab_phi_divisible_by_p():
    report = validate_spec(ElementaryAbelian(GroupParams(3, 1), [ElabPlace(3), ElabPlace(2)]))
    assert any("prime to p" in v for v in report.violations)


def test_non_prime_p_reported():
    report = validate_spec(ElementaryAbelian(GroupParams(4, 1), [ElabPlace(3)] * 3))
    assert any("not prime" in v for v in report.violations)


def test_cyclic_violations():
    params = GroupParams(2, 2)
    bad_low = CyclicTower(params, [CyclicPlace(1, (1, 3))])
    assert any("vanish" in v for v in validate_spec(bad_low).violations)
    even = CyclicTower(params, [CyclicPlace(2, (1, 4))])
    assert any("not standard" in v for v in validate_spec(even).violations)
    no_total = CyclicTower(params, [CyclicPlace(1, (0, 3))] * 3)
    assert any("totally ramified" in v for v in validate_spec(no_total).violations)
    unramified_rational = CyclicTower(params, [], g_base=1)
    assert not validate_spec(unramified_rational).ok
    assert validate_spec(CyclicTower(params, [], g_base=2)).ok


def test_strict_mode_jump_check():
    spec = CyclicTower(GroupParams(2, 2), [CyclicPlace(2, (3, 5))] * 2)
    assert validate_spec(spec).ok
    strict = validate_spec(spec, strict=True)
    assert any("jump condition" in v for v in strict.violations)


def test_tame_violations():
    assert not validate_spec(TameKummer.from_valuations(3, 3, [1, 2])).ok
    assert not validate_spec(TameKummer.from_valuations(4, 3, [1, 1])).ok
    assert not validate_spec(TameKummer.from_valuations(4, 3, [2, 2, 2, 2])).ok
    # genus one is rejected upstream
    report = validate_spec(TameKummer.from_valuations(3, 2, [1, 1, 1]))
    assert report.g_top == 1 and not report.ok


def test_require_valid_raises_with_violations():
    with pytest.raises(ValidationError) as info:
        require_valid(ElementaryAbelian(GroupParams(2, 2), [ElabPlace(1)]))
    assert info.value.violations


@given(st.integers(2, 40), st.lists(st.integers(1, 60), max_size=4))
def test_validate_never_raises_and_is_pure(p, phis):
    spec = ElementaryAbelian(GroupParams(p, 1), [ElabPlace(v) for v in phis])
    assert validate_spec(spec) == validate_spec(spec)
