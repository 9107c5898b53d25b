"""Named families against enumeration oracles and their triads."""

import pytest

from triads.families import (
    FAMILIES,
    NotATriadError,
    cross_check,
    family_table,
    family_value,
    get_family,
    stirling1_parameter_spec,
    stirling1_recurrence_holds,
)
from triads.konvalina import first_kind_oracle, naturals
from triads.scalar import ONE, ZERO, as_scalar, parse_scalar
from triads.triad import coefficient_table, verify_connection

from .oracles import (
    bell_numbers,
    q_binomial_by_factorials,
    stirling1_by_enumeration,
    stirling2_by_enumeration,
    subset_count,
)


def test_stirling1_value_matches_cycle_enumeration():
    assert family_value("stirling1", 4, 2) == as_scalar(11)
    assert family_value("stirling1", 4, 2) == first_kind_oracle(naturals(3), 2)
    for n in range(7):
        for k in range(n + 1):
            assert family_value("stirling1", n, k) == as_scalar(stirling1_by_enumeration(n, k))


def test_stirling2_value_matches_partition_enumeration():
    for n in range(8):
        for k in range(n + 1):
            assert family_value("stirling2", n, k) == as_scalar(stirling2_by_enumeration(n, k))


def test_pascal_matches_subset_enumeration():
    for n in range(9):
        for k in range(n + 1):
            assert family_value("pascal", n, k) == as_scalar(subset_count(n, k))
    assert family_value("pascal", 12, 0) == ONE


def test_gauss_values():
    assert family_value("gauss", 4, 2) == parse_scalar("1 + q + 2*q^2 + q^3 + q^4")
    for n in range(10):
        for k in range(n + 1):
            assert family_value("gauss", n, k) == q_binomial_by_factorials(n, k)


def test_outside_triangle_raises():
    for name in FAMILIES:
        with pytest.raises(IndexError):
            family_value(name, 3, 4)
        with pytest.raises(IndexError):
            family_value(name, 2, -1)


def test_cross_checks_pass_at_depth_twelve():
    assert cross_check("pascal", 12).ok
    assert cross_check("stirling2", 10).ok
    assert cross_check("gauss", 12).ok


def test_stirling1_is_not_a_triad():
    with pytest.raises(NotATriadError):
        cross_check("stirling1", 4)
    with pytest.raises(NotATriadError):
        get_family("stirling1").triad()


def test_stirling1_recurrence():
    assert stirling1_recurrence_holds(10)
    assert family_value("stirling1", 0, 0) == ONE
    assert family_value("stirling1", 3, 0) == ZERO


def test_stirling1_parameter_specs_are_plain_triads():
    # each fixed parameter gives a valid constant-coefficient spec; no link
    # to the stirling1 triangle is claimed
    for n in (1, 2, 5):
        spec = stirling1_parameter_spec(n)
        assert verify_connection(spec, 6).ok
    one_param = coefficient_table(stirling1_parameter_spec(4), 4)
    mismatch = any(
        one_param.entry(n, k) != family_value("stirling1", n, k)
        for n in range(5)
        for k in range(n + 1)
    )
    assert mismatch


def test_gauss_at_q_one_is_pascal():
    for n in range(13):
        for k in range(n + 1):
            assert family_value("gauss", n, k).eval_q(1) == family_value("pascal", n, k).as_fraction()


def test_stirling2_row_sums_are_bell_numbers():
    bells = bell_numbers(10)
    for n in range(11):
        row_sum = sum((family_value("stirling2", n, k) for k in range(n + 1)), ZERO)
        assert row_sum == as_scalar(bells[n])


def test_family_table_shape():
    rows = family_table("pascal", 4)
    assert [len(r) for r in rows] == [1, 2, 3, 4, 5]
    assert rows[4] == [as_scalar(v) for v in (1, 4, 6, 4, 1)]


def test_unknown_family():
    with pytest.raises(ValueError):
        get_family("catalan")
