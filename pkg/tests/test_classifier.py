import pytest
from hypothesis import given, settings, strategies as st

from fusionwitt.classifier import (
    Factorization,
    VerdictKind,
    factor_pac,
    factor_paqbc,
    factorizes_oracle,
    scan_exceptions,
    verdict_dimension,
    verdict_ring,
)
from fusionwitt.fpdim import fp_dim_data
from fusionwitt.fusion_ring import pointed_ring


def as_tuple(f):
    return None if f is None else (f.p, f.a, f.q, f.b, f.c)


# -------------------------------------------------------- factorizations


def test_factor_pac_examples():
    assert as_tuple(factor_pac(12)) == (2, 2, None, 0, 3)
    assert as_tuple(factor_pac(1)) == (None, 0, None, 0, 1)
    assert as_tuple(factor_pac(6)) == (None, 0, None, 0, 6)
    assert as_tuple(factor_pac(8)) == (2, 3, None, 0, 1)
    assert factor_pac(900) is None          # 2^2 3^2 5^2
    assert factor_pac(36) is None


def test_factor_paqbc_examples():
    # exact witnesses are fixed behavior, not just any valid answer
    assert as_tuple(factor_paqbc(60)) == (2, 2, None, 0, 15)
    assert as_tuple(factor_paqbc(36)) == (2, 2, 3, 2, 1)
    assert as_tuple(factor_paqbc(72)) == (2, 3, 3, 2, 1)
    assert as_tuple(factor_paqbc(30)) == (None, 0, None, 0, 30)
    assert factor_paqbc(900) is None        # 2^2 3^2 5^2
    assert factor_paqbc(1764) is None       # 2^2 3^2 7^2
    assert factor_paqbc(11025) is None      # 3^2 5^2 7^2
    assert factor_paqbc(27225) is None      # 3^2 5^2 11^2
    assert factor_paqbc(44100) is None      # 2^2 3^2 5^2 7^2


def test_rejects_nonpositive():
    for fn in (factor_pac, factor_paqbc, verdict_dimension):
        with pytest.raises(ValueError):
            fn(0)


def test_check_validates_witnesses():
    factor_paqbc(360).check()
    factor_pac(7).check()
    with pytest.raises(AssertionError):
        Factorization(n=12, p=2, a=1, q=None, b=0, c=3).check()   # recomposes to 6
    with pytest.raises(AssertionError):
        Factorization(n=24, p=2, a=1, q=None, b=0, c=12).check()  # cofactor not square-free
    with pytest.raises(AssertionError):
        Factorization(n=36, p=3, a=2, q=2, b=2, c=1).check()      # primes out of order


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=1, max_value=200_000))
def test_witness_search_matches_oracle(n):
    witness = factor_paqbc(n)
    assert (witness is not None) == factorizes_oracle(n)
    if witness is not None:
        witness.check()
        assert witness.recompose() == n


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=200_000))
def test_single_prime_witness_is_consistent(n):
    witness = factor_pac(n)
    if witness is not None:
        witness.check()
        assert witness.q is None and witness.b == 0
        assert witness.recompose() == n


# --------------------------------------------------------------- verdicts


def test_verdict_single_prime():
    v = verdict_dimension(12)
    assert v.kind == VerdictKind.SOLVABLE_SINGLE_PRIME
    assert as_tuple(v.witness) == (2, 2, None, 0, 3)


def test_verdict_square_free():
    v = verdict_dimension(30)
    assert v.kind == VerdictKind.SOLVABLE_SINGLE_PRIME
    assert as_tuple(v.witness) == (None, 0, None, 0, 30)


def test_verdict_two_primes():
    v = verdict_dimension(36)
    assert v.kind == VerdictKind.WGT_TWO_PRIMES
    assert as_tuple(v.witness) == (2, 2, 3, 2, 1)


def test_verdict_900_is_acknowledged_special_case():
    v = verdict_dimension(900)
    assert v.kind == VerdictKind.WGT_BELOW_1800
    assert v.witness is None
    assert "900" in v.notes and "acknowledged" in v.notes


def test_verdict_1764_diverges_and_is_withheld():
    v = verdict_dimension(1764)
    assert v.kind == VerdictKind.UNKNOWN
    assert "divergence" in v.notes
    assert "1764" in v.notes


def test_verdict_11025_is_acknowledged_special_case():
    v = verdict_dimension(11025)
    assert v.kind == VerdictKind.SOLVABLE_ODD_BELOW_33075
    assert v.witness is None


def test_verdict_27225_diverges_and_is_withheld():
    v = verdict_dimension(27225)
    assert v.kind == VerdictKind.UNKNOWN
    assert "divergence" in v.notes
    assert "27225" in v.notes


def test_verdict_large_without_criterion():
    # 44100 = 2^2 3^2 5^2 7^2 is even and above the any-parity bound
    v = verdict_dimension(44100)
    assert v.kind == VerdictKind.UNKNOWN
    assert "no criterion" in v.notes


# ----------------------------------------------------------- ring verdicts


def test_ring_verdict_ising(ising_ring):
    v = verdict_ring(ising_ring, fp_dim_data(ising_ring))
    assert v.kind == VerdictKind.SOLVABLE_SINGLE_PRIME
    assert "power of 2" in v.notes


def test_ring_verdict_fibonacci(fibonacci_ring):
    v = verdict_ring(fibonacci_ring, fp_dim_data(fibonacci_ring))
    assert v.kind == VerdictKind.UNKNOWN
    assert "weakly integral" in v.notes


def test_ring_verdict_rep_s3(rep_s3_ring):
    v = verdict_ring(rep_s3_ring, fp_dim_data(rep_s3_ring))
    assert v.kind == VerdictKind.SOLVABLE_SINGLE_PRIME


def test_ring_verdict_pointed_z6(z6_ring):
    v = verdict_ring(z6_ring, fp_dim_data(z6_ring))
    assert v.kind == VerdictKind.SOLVABLE_SINGLE_PRIME
    assert "pointed" in v.notes


def test_ring_verdict_pointed_z30():
    ring = pointed_ring((30,))
    v = verdict_ring(ring, fp_dim_data(ring))
    assert v.kind == VerdictKind.SOLVABLE_SINGLE_PRIME


# ------------------------------------------------------------------ scans


def test_scan_below_1800():
    report = scan_exceptions(1800)
    assert report.exceptions == (900, 1764)
    assert report.acknowledged == (900,)
    assert report.divergent == (1764,)


def test_scan_odd_below_33075():
    report = scan_exceptions(33075, odd_only=True)
    assert report.exceptions == (11025, 27225)
    assert report.acknowledged == (11025,)
    assert report.divergent == (27225,)


def test_scan_small_range_is_clean():
    report = scan_exceptions(900)
    assert report.exceptions == ()
    assert report.divergent == ()
    assert report.acknowledged == ()


def test_scan_odd_skips_even_exceptions():
    report = scan_exceptions(1800, odd_only=True)
    assert report.exceptions == ()


def test_scan_limit_validation():
    with pytest.raises(ValueError):
        scan_exceptions(1)
    with pytest.raises(ValueError):
        scan_exceptions(10**7 + 1)
