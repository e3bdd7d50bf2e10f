"""Unit tests for FFTService (src.services.fft_service)."""

import numpy as np
import pytest

from src.core.exceptions import ApplicationServiceError
from src.models.fft import FFTMethod
from src.models.group import AbelianGroup, Subgroup
from src.services.fft_service import FFTService, power_of_two_exponent, radix2_twiddles, smallest_prime_factor
from src.services.fourier_service import FourierService

TOLERANCE = 1e-9


def _random_batch(rng: np.random.Generator, length: int, count: int = 100) -> np.ndarray:
    return rng.standard_normal((length, count)) + 1j * rng.standard_normal((length, count))


def test_helpers() -> None:
    """smallest_prime_factor and power_of_two_exponent on small inputs."""
    assert smallest_prime_factor(15) == 3
    assert smallest_prime_factor(49) == 7
    assert smallest_prime_factor(13) == 13
    assert power_of_two_exponent(4096) == 12
    assert power_of_two_exponent(1) == 0
    assert power_of_two_exponent(12) is None
    assert power_of_two_exponent(0) is None


def test_predict_cost(fft_service: FFTService) -> None:
    """The cost bound is |G| times (I + 2) and I must divide |G|."""
    assert fft_service.predict_cost(16, 8) == 16 * (8 + 2)
    with pytest.raises(ApplicationServiceError) as exc_info:
        fft_service.predict_cost(12, 5)
    assert exc_info.value.error_code == "NON_DIVISOR"


def test_build_tower_for_power_of_two_is_index_two_chain(fft_service: FFTService) -> None:
    """A cyclic 2-group gets a chain of index-2 subgroups."""
    tower = fft_service.build_tower(AbelianGroup(moduli=(16,)))
    assert tower.indices == [2, 2, 2, 2]
    assert tower.levels[0].members == (0, 2, 4, 6, 8, 10, 12, 14)
    assert tower.levels[-1].members == (0,)


def test_build_tower_for_product_group(fft_service: FFTService) -> None:
    """Indices of a product group tower are its prime factors in order."""
    tower = fft_service.build_tower(AbelianGroup(moduli=(6, 5)))
    assert tower.indices == [2, 3, 5]
    assert tower.levels[-1].order == 1


def test_make_tower_appends_trivial_level(fft_service: FFTService) -> None:
    """An explicit chain is closed with the trivial subgroup."""
    group = AbelianGroup(moduli=(8,))
    tower = fft_service.make_tower(group, [Subgroup(parent=group, members=(0, 4))])
    assert tower.indices == [4, 2]


def test_make_tower_rejects_bad_chain(fft_service: FFTService) -> None:
    """A chain that is not decreasing by inclusion is an INVALID_TOWER."""
    group = AbelianGroup(moduli=(6,))
    levels = [Subgroup(parent=group, members=(0, 3)), Subgroup(parent=group, members=(0, 2, 4))]
    with pytest.raises(ApplicationServiceError) as exc_info:
        fft_service.make_tower(group, levels)
    assert exc_info.value.error_code == "INVALID_TOWER"


@pytest.mark.parametrize("n", range(1, 13))
def test_radix2_matches_dense_oracle(
    fft_service: FFTService, fourier_service: FourierService, rng: np.random.Generator, n: int
) -> None:
    """Radix-2 agrees with the dense transform on Z_{2^n}."""
    group = AbelianGroup(moduli=(1 << n,))
    values = _random_batch(rng, group.order)
    spectrum, _ = fft_service.fft_radix2(n, values)
    assert np.max(np.abs(spectrum - fourier_service.apply_dense(group, values))) < TOLERANCE


@pytest.mark.parametrize("moduli", [(2, 3), (4, 4), (6, 5), (12,), (2, 2, 3), (9,)])
def test_tower_matches_dense_oracle(
    fft_service: FFTService, fourier_service: FourierService, rng: np.random.Generator, moduli: tuple[int, ...]
) -> None:
    """The tower FFT agrees with the dense transform."""
    group = AbelianGroup(moduli=moduli)
    values = _random_batch(rng, group.order)
    spectrum, _ = fft_service.fft_tower(group, fft_service.build_tower(group), values)
    assert np.max(np.abs(spectrum - fourier_service.apply_dense(group, values))) < TOLERANCE


def test_tower_with_explicit_uneven_chain(
    fft_service: FFTService, fourier_service: FourierService, rng: np.random.Generator
) -> None:
    """Single-subgroup recursion G > H > {0} with I = 4, |H| = 6."""
    group = AbelianGroup(moduli=(4, 6))
    h = Subgroup(parent=group, members=tuple(group.index_of((a, b)) for a in (0, 2) for b in (0, 2, 4)))
    tower = fft_service.make_tower(group, [h])
    values = _random_batch(rng, group.order, 5)
    spectrum, counts = fft_service.fft_tower(group, tower, values)
    assert np.max(np.abs(spectrum - fourier_service.apply_dense(group, values))) < TOLERANCE
    assert counts.complex_multiplies == 24 * 4 + 24 * 6
    assert counts.predicted_bound == 24 * (6 + 4)


def test_tower_accepts_single_vector(fft_service: FFTService, fourier_service: FourierService) -> None:
    """A one-dimensional input comes back one-dimensional."""
    group = AbelianGroup(moduli=(3, 3))
    values = np.arange(9, dtype=np.complex128)
    spectrum, _ = fft_service.fft_tower(group, fft_service.build_tower(group), values)
    assert spectrum.shape == (9,)
    assert np.max(np.abs(spectrum - fourier_service.apply_dense(group, values))) < TOLERANCE


def test_tower_for_trivial_group(fft_service: FFTService) -> None:
    """The trivial group transform is the identity at no cost."""
    group = AbelianGroup(moduli=(1,))
    spectrum, counts = fft_service.fft_tower(group, fft_service.build_tower(group), np.array([2.5 + 0j]))
    assert spectrum.tolist() == [2.5 + 0j]
    assert counts.complex_multiplies == 0


def test_tower_rejects_foreign_tower(fft_service: FFTService) -> None:
    """A tower built for another group is refused."""
    tower = fft_service.build_tower(AbelianGroup(moduli=(4,)))
    with pytest.raises(ApplicationServiceError) as exc_info:
        fft_service.fft_tower(AbelianGroup(moduli=(2, 2)), tower, np.ones(4))
    assert exc_info.value.error_code == "INVALID_TOWER"


def test_radix2_count_recursion(fft_service: FFTService) -> None:
    """count(2^m) - 2 count(2^(m-1)) = a 2^m with one integer a, and count(2^12) < 2^12 * 12 * (a + 1)."""
    counts = {}
    for m in range(1, 13):
        _, report = fft_service.fft_radix2(m, np.ones(1 << m, dtype=np.complex128))
        counts[m] = report.complex_multiplies
    increments = {(counts[m] - 2 * counts[m - 1]) // (1 << m) for m in range(2, 13)}
    assert all((counts[m] - 2 * counts[m - 1]) % (1 << m) == 0 for m in range(2, 13))
    assert len(increments) == 1
    a = increments.pop()
    assert a == 1
    assert counts[12] < (1 << 12) * 12 * (a + 1)


def test_radix2_beats_dense_by_fifty_at_4096(fft_service: FFTService, rng: np.random.Generator) -> None:
    """At 4096 entries radix-2 uses under a fiftieth of the dense multiplies."""
    group = AbelianGroup(moduli=(4096,))
    values = rng.standard_normal(4096) + 0j
    _, radix = fft_service.transform(group, values, FFTMethod.RADIX2)
    _, dense = fft_service.transform(group, values, FFTMethod.DENSE)
    assert radix.complex_multiplies * 50 < dense.complex_multiplies
    assert dense.complex_adds == 4096 * 4095


def test_radix2_rejects_non_power_of_two(fft_service: FFTService) -> None:
    """Radix-2 refuses lengths that are not powers of two."""
    with pytest.raises(ApplicationServiceError) as exc_info:
        fft_service.fft_radix2(2, np.ones(3))
    assert exc_info.value.error_code == "NOT_POWER_OF_TWO"


def test_radix2_rejects_wrong_length(fft_service: FFTService) -> None:
    """Radix-2 refuses an input whose length differs from 2^m."""
    with pytest.raises(ApplicationServiceError) as exc_info:
        fft_service.fft_radix2(3, np.ones(4))
    assert exc_info.value.error_code == "LENGTH_MISMATCH"


@pytest.mark.parametrize("n", [1, 3, 6])
def test_walsh_matches_dense_on_cube(
    fft_service: FFTService, fourier_service: FourierService, rng: np.random.Generator, n: int
) -> None:
    """Walsh-Hadamard agrees with the dense transform on Z2^n."""
    group = AbelianGroup(moduli=(2,) * n)
    values = _random_batch(rng, group.order, 10)
    spectrum, counts = fft_service.walsh_hadamard_counted(n, values)
    assert np.max(np.abs(spectrum - fourier_service.apply_dense(group, values))) < TOLERANCE
    assert counts.complex_adds == n * (1 << n)
    assert counts.complex_multiplies == 1 << n


def test_walsh_is_involution(fft_service: FFTService, rng: np.random.Generator) -> None:
    """Applying Walsh-Hadamard twice returns the input."""
    values = rng.standard_normal(32) + 1j * rng.standard_normal(32)
    twice = fft_service.walsh_hadamard(5, fft_service.walsh_hadamard(5, values))
    assert np.max(np.abs(twice - values)) < 1e-12


def test_transform_method_group_mismatch(fft_service: FFTService) -> None:
    """Radix-2 and Walsh are refused on groups they do not cover."""
    with pytest.raises(ApplicationServiceError) as exc_info:
        fft_service.transform(AbelianGroup(moduli=(2, 4)), np.ones(8), FFTMethod.RADIX2)
    assert exc_info.value.error_code == "METHOD_GROUP_MISMATCH"
    with pytest.raises(ApplicationServiceError) as exc_info:
        fft_service.transform(AbelianGroup(moduli=(8,)), np.ones(8), FFTMethod.WALSH)
    assert exc_info.value.error_code == "METHOD_GROUP_MISMATCH"


@pytest.mark.parametrize("method", list(FFTMethod))
def test_transform_dispatch_agrees_on_z2(
    fft_service: FFTService, fourier_service: FourierService, method: FFTMethod
) -> None:
    """Every method agrees with the dense transform on Z2."""
    group = AbelianGroup(moduli=(2,))
    values = np.array([1.0, 3.0], dtype=np.complex128)
    spectrum, counts = fft_service.transform(group, values, method)
    assert np.max(np.abs(spectrum - fourier_service.apply_dense(group, values))) < TOLERANCE
    assert counts.complex_multiplies >= 0


@pytest.mark.parametrize("method", list(FFTMethod))
def test_transform_checks_length_before_building_anything(fft_service: FFTService, method: FFTMethod) -> None:
    """A short input to a huge group is a LENGTH_MISMATCH, whatever the method."""
    huge = AbelianGroup(moduli=(2,) * 40)
    with pytest.raises(ApplicationServiceError) as exc_info:
        fft_service.transform(huge, np.ones(8), method)
    assert exc_info.value.error_code == "LENGTH_MISMATCH"
    assert "8" in exc_info.value.message


def test_transform_refuses_groups_past_the_length_cap(
    fft_service: FFTService, monkeypatch: pytest.MonkeyPatch
) -> None:
    """MAX_TRANSFORM_LENGTH is enforced after the length check."""
    monkeypatch.setenv("MAX_TRANSFORM_LENGTH", "8")
    with pytest.raises(ApplicationServiceError) as exc_info:
        fft_service.transform(AbelianGroup(moduli=(16,)), np.ones(16), FFTMethod.TOWER)
    assert exc_info.value.error_code == "SIZE_CAP_EXCEEDED"
    spectrum, _ = fft_service.transform(AbelianGroup(moduli=(8,)), np.ones(8), FFTMethod.TOWER)
    assert spectrum.shape == (8,)


@pytest.mark.parametrize("moduli", [(8,), (2, 3), (4, 6), (3, 3, 2)])
def test_tower_is_linear(fft_service: FFTService, rng: np.random.Generator, moduli: tuple[int, ...]) -> None:
    """F(a·u + b·v) = a·F(u) + b·F(v) for random complex a, b, u, v."""
    group = AbelianGroup(moduli=moduli)
    tower = fft_service.build_tower(group)
    for _ in range(5):
        u, v = _random_batch(rng, group.order, 2).T
        a, b = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        combined, _ = fft_service.fft_tower(group, tower, a * u + b * v)
        fu, _ = fft_service.fft_tower(group, tower, u)
        fv, _ = fft_service.fft_tower(group, tower, v)
        assert np.max(np.abs(combined - (a * fu + b * fv))) < TOLERANCE


def test_twiddles_are_cached_per_renormalisation_interval(
    fft_service: FFTService, fourier_service: FourierService, monkeypatch: pytest.MonkeyPatch
) -> None:
    """Changing TWIDDLE_RENORMALISE_EVERY reaches the twiddle table instead of a stale cache entry."""
    radix2_twiddles.cache_clear()
    first = radix2_twiddles(10, 64)
    assert radix2_twiddles(10, 1) is not first
    assert radix2_twiddles(10, 64) is first
    assert np.max(np.abs(radix2_twiddles(10, 1) - first)) < 1e-12

    monkeypatch.setenv("TWIDDLE_RENORMALISE_EVERY", "1")
    group = AbelianGroup(moduli=(1024,))
    values = np.arange(1024, dtype=np.complex128)
    spectrum, _ = fft_service.fft_radix2(10, values)
    assert np.max(np.abs(spectrum - fourier_service.apply_dense(group, values))) < 1e-8
    assert radix2_twiddles.cache_info().currsize >= 2
