import numpy as np
import pytest

from specpoints import arith, sieve
from specpoints.seeding import case_rng


def random_sequence(rng, N, M):
    vals = rng.standard_normal(M) + 1j * rng.standard_normal(M)
    return sieve.Sequence(N, vals)


def farey_lhs_loops(seq, B):
    # literal triple loop, additive characters only
    total = 0.0
    for b in range(1, B + 1):
        for x in range(b):
            if np.gcd(x, b) != 1 and b > 1:
                continue
            s = 0j
            for m, a in zip(seq.indices, seq.values):
                s += a * arith.additive_character(x * int(m), b)
            total += abs(s) ** 2
    return total


def sinc_exact_lhs(seq, B, T, phase):
    # closed form: int_{-T}^{T} e(t d) dt = 2T sinc(2 T d)
    m = seq.indices.astype(float)
    fm = phase.f(m)
    P = np.zeros((len(m), len(m)), dtype=np.complex128)
    for b in range(1, B + 1):
        for x in range(b):
            if np.gcd(x, b) != 1 and b > 1:
                continue
            e = np.exp(2j * np.pi * x * m / b)
            P += np.outer(e, e.conj())
    kern = 2 * T * np.sinc(2 * T * (fm[:, None] - fm[None, :]))
    a = seq.values
    return float(np.real(np.einsum("i,j,ij,ij->", a, a.conj(), P, kern)))


def test_farey_lhs_single_fraction():
    rng = case_rng(1, "farey-single")
    seq = random_sequence(rng, 3, 12)
    assert sieve.farey_lhs(seq, 1) == pytest.approx(abs(seq.values.sum()) ** 2)


def test_farey_lhs_unit_vector_counts_fractions():
    seq = sieve.Sequence(5, np.array([1.0]))
    for B in (1, 4, 9):
        want = sum(arith.euler_phi(b) for b in range(1, B + 1))
        assert sieve.farey_lhs(seq, B) == pytest.approx(want, rel=1e-12)


def test_farey_lhs_matches_loop_oracle():
    rng = case_rng(1, "farey-oracle")
    for _ in range(5):
        seq = random_sequence(rng, int(rng.integers(1, 30)), int(rng.integers(2, 20)))
        got = sieve.farey_lhs(seq, 10)
        want = farey_lhs_loops(seq, 10)
        assert got == pytest.approx(want, rel=1e-9)


def test_farey_lhs_phase_invariance():
    rng = case_rng(1, "farey-phase")
    seq = random_sequence(rng, 2, 15)
    rotated = sieve.Sequence(2, seq.values * np.exp(0.7j))
    assert sieve.farey_lhs(rotated, 8) == pytest.approx(
        sieve.farey_lhs(seq, 8), rel=1e-9)


def test_classical_ratio_examples():
    seq = sieve.Sequence(1, np.ones(10))
    assert sieve.classical_ratio(seq, 1) == pytest.approx(100 / 110)
    with pytest.raises(ValueError):
        sieve.classical_ratio(sieve.Sequence(1, np.zeros(3)), 2)


def test_classical_ratio_below_one_sweep():
    rng = case_rng(2, "classical-mini-sweep")
    for _ in range(100):
        B = int(rng.integers(1, 26))
        M = int(rng.integers(1, 26))
        seq = random_sequence(rng, int(rng.integers(1, 50)), M)
        assert sieve.classical_ratio(seq, B) <= 1.0


def test_phase_function_rejects_sign_change():
    with pytest.raises(ValueError):
        sieve.PhaseFunction(lambda y: np.sin(y), lambda y: np.cos(y), 0.5, 4.0)


def test_oscillatory_small_T_limit():
    rng = case_rng(3, "osc-smallT")
    seq = random_sequence(rng, 4, 8)
    ph = sieve.linear_phase(4, 12)
    T = 1e-5
    got = sieve.oscillatory_lhs(seq, 3, T, ph, quadrature_step=1e-3 / 12)
    assert got == pytest.approx(2 * T * sieve.farey_lhs(seq, 3), rel=1e-4)


@pytest.mark.parametrize("make_phase", [sieve.linear_phase, sieve.log_phase,
                                        sieve.cuberoot_phase])
def test_oscillatory_matches_sinc_oracle(make_phase):
    rng = case_rng(3, "osc-oracle")
    seq = random_sequence(rng, 5, 10)
    ph = make_phase(5, 15)
    for B, T in [(1, 1.0), (4, 2.5)]:
        fm = ph.f(seq.indices.astype(float))
        step = 0.1 / max(float(np.max(np.abs(fm))), 1e-9)
        got = sieve.oscillatory_lhs(seq, B, T, ph, step)
        want = sinc_exact_lhs(seq, B, T, ph)
        assert got == pytest.approx(want, rel=1e-7)


def test_oscillatory_step_guard():
    seq = sieve.Sequence(100, np.ones(5))
    ph = sieve.linear_phase(100, 105)
    with pytest.raises(ValueError):
        sieve.oscillatory_lhs(seq, 2, 1.0, ph, quadrature_step=1.0)


def test_oscillatory_scaling_identity():
    # change of variables t -> tT: lhs(T, f) = T * lhs(1, T f)
    rng = case_rng(3, "osc-scaling")
    seq = random_sequence(rng, 6, 9)
    ph = sieve.log_phase(6, 15)
    T = 3.0
    scaled = sieve.PhaseFunction(lambda y: T * ph.f(y),
                                 lambda y: T * ph.fprime(y), 6, 15)
    fm = ph.f(seq.indices.astype(float))
    step = 0.02 / max(float(np.max(np.abs(fm))), 1e-9)
    lhs_T = sieve.oscillatory_lhs(seq, 4, T, ph, step)
    lhs_1 = sieve.oscillatory_lhs(seq, 4, 1.0, scaled, step / T)
    assert lhs_T == pytest.approx(T * lhs_1, rel=1e-7)


def test_oscillatory_degenerate_single_term():
    # M = 1: integrand is constant in t, so lhs = 2T * (number of fractions) * |a|^2
    seq = sieve.Sequence(7, np.array([2.0]))
    ph = sieve.linear_phase(7, 8)
    got = sieve.oscillatory_lhs(seq, 5, 2.0, ph, quadrature_step=0.01)
    count = sum(arith.euler_phi(b) for b in range(1, 6))
    assert got == pytest.approx(2 * 2.0 * count * 4.0, rel=1e-9)


def test_x_parameter():
    ph = sieve.cuberoot_phase(8, 27)
    # 1/f' = 3 y^{2/3}, maximized at y = 27
    assert ph.x_parameter == pytest.approx(27.0, rel=1e-6)
