from src.factories.gate_factory import (
    make_gate,
    matrix_gate,
    program_from_pairs,
    program_from_payload,
)

__all__ = [
    "make_gate",
    "matrix_gate",
    "program_from_pairs",
    "program_from_payload",
]
