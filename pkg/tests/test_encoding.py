import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mdqft import (
    ArrayLayout,
    DegenerateInputError,
    LayoutError,
    MdArray,
    ScaleConvention,
    ValidationError,
    decode,
    encode,
    flat_index,
    register_map,
    unflatten,
    zero_state,
)


def test_layout_derived_quantities():
    layout = ArrayLayout((4, 2, 8))
    assert layout.qubit_counts == (2, 1, 3)
    assert layout.total_qubits == 6
    assert layout.total_elements == 64


@pytest.mark.parametrize("dims", [(3,), (0,), (4, 6), (1, 4)])
def test_layout_rejects_bad_dims(dims):
    # size-1 dimensions carry no qubits and are rejected, not squeezed
    with pytest.raises(ValidationError):
        ArrayLayout(dims)


def test_layout_respects_qubit_cap(monkeypatch):
    from mdqft import CapacityError

    monkeypatch.setenv("MDQFT_MAX_QUBITS", "5")
    with pytest.raises(CapacityError):
        ArrayLayout((8, 8))
    assert ArrayLayout((8, 4)).total_qubits == 5


def test_flat_index_origin():
    assert flat_index((0, 0), ArrayLayout((8, 8))) == 0


def test_flat_index_last_of_first_dimension():
    # (N_1 - 1, 0, ..., 0) sits at position N_1 - 1 of the flattening
    layout = ArrayLayout((8, 4, 2))
    assert flat_index((7, 0, 0), layout) == 7


def test_flat_index_4x2_against_enumeration():
    layout = ArrayLayout((4, 2))
    listing = [(k1, k2) for k2 in range(2) for k1 in range(4)]  # dim 1 fastest
    assert listing.index((1, 1)) == 5
    assert flat_index((1, 1), layout) == 5
    for position, digits in enumerate(listing):
        assert flat_index(digits, layout) == position


def test_flat_index_bounds():
    layout = ArrayLayout((4, 2))
    with pytest.raises(ValidationError):
        flat_index((4, 0), layout)
    with pytest.raises(ValidationError):
        flat_index((0, -1), layout)


@given(
    exponents=st.lists(st.integers(min_value=1, max_value=3), min_size=1, max_size=4),
    data=st.data(),
)
@settings(max_examples=100, deadline=None)
def test_flat_index_is_a_bijection(exponents, data):
    layout = ArrayLayout(tuple(1 << n for n in exponents))
    m = data.draw(st.integers(min_value=0, max_value=layout.total_elements - 1))
    assert flat_index(unflatten(m, layout), layout) == m


def test_register_map_8x8():
    assert register_map(ArrayLayout((8, 8))) == (range(0, 3), range(3, 6))


def test_register_map_single_dimension():
    assert register_map(ArrayLayout((2,))) == (range(0, 1),)


def test_register_map_cumulative():
    assert register_map(ArrayLayout((4, 2, 8))) == (range(0, 2), range(2, 3), range(3, 6))


def test_encode_delta():
    state, factor = encode(MdArray.from_values((4,), [1, 0, 0, 0]))
    np.testing.assert_array_equal(state.amplitudes, zero_state(2).amplitudes)
    assert factor == 1.0


def test_encode_three_four_five():
    state, factor = encode(MdArray.from_values((4,), [3, 4j, 0, 0]))
    assert factor == pytest.approx(5.0, abs=1e-15)
    np.testing.assert_allclose(state.amplitudes, [0.6, 0.8j, 0, 0], atol=1e-15)


def test_encode_rejects_zero_array():
    with pytest.raises(DegenerateInputError):
        encode(MdArray.from_values((2, 2), [0, 0, 0, 0]))


def test_encode_basis_indicator_is_exact_basis_state():
    layout = ArrayLayout((4, 2, 2))
    for digits in [(0, 0, 0), (3, 1, 0), (2, 0, 1), (1, 1, 1)]:
        data = np.zeros(16)
        data[flat_index(digits, layout)] = 1.0
        state, _ = encode(MdArray(layout, data))
        expected = np.zeros(16, dtype=complex)
        expected[flat_index(digits, layout)] = 1.0
        np.testing.assert_array_equal(state.amplitudes, expected)


def test_decode_raw_round_trip():
    rng = np.random.default_rng(3)
    layout = ArrayLayout((4, 4))
    array = MdArray(layout, rng.standard_normal(16) + 1j * rng.standard_normal(16))
    state, factor = encode(array)
    raw = decode(state, factor, layout, ScaleConvention.RAW)
    np.testing.assert_allclose(raw.data, array.data / array.norm(), atol=1e-15)
    unitary = decode(state, factor, layout, ScaleConvention.UNITARY)
    np.testing.assert_allclose(unitary.data, array.data, atol=1e-12)


def test_decode_classical_scale_of_zero_state():
    out = decode(zero_state(1), 1.0, ArrayLayout((2,)), ScaleConvention.CLASSICAL)
    np.testing.assert_allclose(out.data, [np.sqrt(2.0), 0.0], atol=1e-15)


def test_decode_shape_mismatch():
    with pytest.raises(LayoutError):
        decode(zero_state(3), 1.0, ArrayLayout((4,)), ScaleConvention.RAW)


def test_mdarray_multi_index_access():
    layout = ArrayLayout((4, 2))
    array = MdArray(layout, np.arange(8, dtype=complex))
    assert array[(1, 1)] == 5.0
    assert array[5] == 5.0


def test_mdarray_rejects_wrong_length():
    with pytest.raises(LayoutError):
        MdArray(ArrayLayout((4,)), [1, 2])
