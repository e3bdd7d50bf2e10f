"""Unit tests for vector models (src.models.vector)."""

import numpy as np
import pytest
from pydantic import ValidationError

from src.models.group import AbelianGroup
from src.models.vector import ComplexVector, FourierMatrix


def test_complex_vector_to_array() -> None:
    """Pairs [re, im] become a complex array."""
    vector = ComplexVector(amps=[(1.0, 0.0), (0.0, -2.0)])
    assert len(vector) == 2
    assert np.array_equal(vector.to_array(), np.array([1.0, -2.0j]))


def test_complex_vector_from_array_gives_pairs() -> None:
    """A complex array becomes [re, im] pairs."""
    vector = ComplexVector.from_array(np.array([0.5 + 0.25j, -1.0]))
    assert vector.amps == [(0.5, 0.25), (-1.0, 0.0)]


def test_complex_vector_rejects_non_finite_and_empty() -> None:
    """NaN entries and empty vectors fail validation."""
    with pytest.raises(ValidationError, match="not finite"):
        ComplexVector(amps=[(1.0, float("nan"))])
    with pytest.raises(ValidationError):
        ComplexVector(amps=[])


def test_fourier_matrix_shape_and_unitarity() -> None:
    """The normalised Hadamard matrix is unitary and shapes must match the group."""
    group = AbelianGroup(moduli=(2,))
    hadamard = FourierMatrix(group=group, entries=np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2))
    assert hadamard.is_unitary(1e-12)
    with pytest.raises(ValidationError):
        FourierMatrix(group=group, entries=np.eye(3, dtype=np.complex128))
    assert not FourierMatrix(group=group, entries=2 * np.eye(2, dtype=np.complex128)).is_unitary(1e-12)
