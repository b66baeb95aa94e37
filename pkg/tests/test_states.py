"""Matrix algebra, state decomposition, sampling, and JSON round-trips."""

import json
import random
from fractions import Fraction

import numpy as np
import pytest

from luinv.exact import GaussianRational
from luinv.states import (
    Matrix,
    apply_local_unitary,
    decompose_state,
    gellmann_basis,
    partial_trace_qubit,
    partial_trace_qutrit,
    pauli_basis,
    random_local_unitary,
    random_state,
    recompose,
    scale_components,
    state_from_json,
    state_to_json,
    tensor_product,
    validate_state,
)


def random_exact_matrix(seed: int, n: int, m: int = None) -> Matrix:
    rng = random.Random(seed)
    m = n if m is None else m
    return Matrix(
        [
            [
                GaussianRational(
                    Fraction(rng.randint(-6, 6), rng.randint(1, 4)),
                    Fraction(rng.randint(-6, 6), rng.randint(1, 4)),
                )
                for _ in range(m)
            ]
            for _ in range(n)
        ]
    )


def random_exact_hermitian(seed: int, n: int) -> Matrix:
    a = random_exact_matrix(seed, n)
    return a + a.dagger()


class TestMatrix:
    def test_mode_inference(self):
        assert Matrix([[1, 2], [3, 4]]).exact
        assert not Matrix([[1.0, 2], [3, 4]]).exact
        assert not Matrix([[1j, 0], [0, 0]]).exact

    def test_shape_validation(self):
        with pytest.raises(ValueError):
            Matrix([[1, 2], [3]])
        with pytest.raises(ValueError):
            Matrix([])

    def test_identity_and_zeros(self):
        assert Matrix.identity(3).trace() == GaussianRational(3)
        assert Matrix.zeros(2, 3).shape == (2, 3)
        assert not Matrix.identity(2, exact=False).exact

    def test_exact_matmul_known(self):
        a = Matrix([[1, 2], [3, 4]])
        b = Matrix([[0, 1], [1, 0]])
        assert a @ b == Matrix([[2, 1], [4, 3]])

    @pytest.mark.parametrize("seed", range(5))
    def test_float_ops_match_numpy(self, seed):
        a = random_exact_matrix(seed, 3).to_float()
        b = random_exact_matrix(seed + 50, 3).to_float()
        assert np.allclose((a @ b).to_numpy(), a.to_numpy() @ b.to_numpy())
        assert np.allclose((a + b).to_numpy(), a.to_numpy() + b.to_numpy())
        assert np.allclose(a.dagger().to_numpy(), a.to_numpy().conj().T)
        assert np.isclose(complex(a.trace()), np.trace(a.to_numpy()))
        assert np.isclose(complex(a.det()), np.linalg.det(a.to_numpy()))

    @pytest.mark.parametrize("seed", range(3))
    def test_kron_matches_numpy(self, seed):
        a = random_exact_matrix(seed, 2).to_float()
        b = random_exact_matrix(seed + 9, 3).to_float()
        assert np.allclose(a.kron(b).to_numpy(), np.kron(a.to_numpy(), b.to_numpy()))
        assert tensor_product(a, b) == a.kron(b)

    def test_exact_det_3x3(self):
        m = Matrix([[2, 0, 1], [1, 1, 0], [0, 3, 1]])
        assert m.det() == GaussianRational(2 * 1 - 0 + 1 * 3)

    def test_det_size_limit(self):
        with pytest.raises(ValueError):
            Matrix.identity(4).det()

    def test_scalar_multiplication_and_promotion(self):
        m = Matrix([[1, 0], [0, 1]])
        assert (m * Fraction(1, 2)).exact
        assert not (m * 0.5).exact
        assert (m * Fraction(1, 2)).to_float() == m * 0.5
        with pytest.raises(TypeError):
            m * m

    def test_mixed_mode_addition_promotes(self):
        e = Matrix([[1, 0], [0, 1]])
        f = e.to_float()
        assert not (e + f).exact
        assert (e + f).max_abs_diff(f * 2.0) == 0.0

    def test_hermitian_checks(self):
        h = random_exact_hermitian(3, 3)
        assert h.is_hermitian()
        assert not (h + Matrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]])).is_hermitian()

    def test_immutability_and_hash(self):
        m = Matrix([[1]])
        with pytest.raises(AttributeError):
            m.rows = ()
        assert hash(Matrix([[1]])) == hash(m)


class TestBases:
    def test_pauli_orthogonality(self):
        paulis = pauli_basis()
        assert len(paulis) == 3
        for k, ek in enumerate(paulis):
            assert ek.exact and ek.is_hermitian()
            assert ek.trace() == GaussianRational(0)
            for l, el in enumerate(paulis):
                expected = GaussianRational(2 if k == l else 0)
                assert (ek @ el).trace() == expected

    def test_pauli_squares_are_identity(self):
        for e in pauli_basis():
            assert e @ e == Matrix.identity(2)

    def test_gellmann_orthogonality(self):
        gms = gellmann_basis()
        assert len(gms) == 8
        for a, ga in enumerate(gms):
            assert not ga.exact
            assert ga.is_hermitian(1e-12)
            assert abs(ga.trace()) < 1e-12
            for b, gb in enumerate(gms):
                expected = 2.0 if a == b else 0.0
                assert abs((ga @ gb).trace() - expected) < 1e-12


class TestPartialTraces:
    @pytest.mark.parametrize("seed", range(4))
    def test_kron_identities(self, seed):
        a = random_exact_matrix(seed, 2)
        b = random_exact_matrix(seed + 77, 3)
        full = a.kron(b)
        assert partial_trace_qutrit(full) == a * b.trace()
        assert partial_trace_qubit(full) == b * a.trace()

    @pytest.mark.parametrize("seed", range(3))
    def test_linearity_and_full_trace(self, seed):
        m = random_exact_matrix(seed, 6)
        n = random_exact_matrix(seed + 13, 6)
        assert partial_trace_qubit(m + n) == partial_trace_qubit(m) + partial_trace_qubit(n)
        assert partial_trace_qutrit(m).trace() == m.trace()
        assert partial_trace_qubit(m).trace() == m.trace()

    def test_shape_validation(self):
        with pytest.raises(ValueError):
            partial_trace_qubit(Matrix.identity(5))
        with pytest.raises(ValueError):
            partial_trace_qutrit(Matrix.identity(5))


class TestValidation:
    def test_accepts_maximally_mixed(self):
        validate_state(Matrix.identity(6) * Fraction(1, 6))

    def test_rejects_wrong_shape(self):
        with pytest.raises(ValueError, match="6x6"):
            validate_state(Matrix.identity(5) * Fraction(1, 5))

    def test_rejects_wrong_trace(self):
        with pytest.raises(ValueError, match="trace"):
            validate_state(Matrix.identity(6))

    def test_rejects_non_hermitian(self):
        rows = [[Fraction(1, 6) if i == j else 0 for j in range(6)] for i in range(6)]
        rows[0][1] = GaussianRational(0, 1)  # i, breaks hermiticity
        with pytest.raises(ValueError, match="hermitian"):
            validate_state(Matrix(rows))

    def test_float_tolerance(self):
        rho = (Matrix.identity(6) * Fraction(1, 6)).to_float()
        validate_state(rho, tolerance=1e-12)


class TestDecomposition:
    def test_pure_product_diagonal_pieces(self):
        rho = Matrix([[int(i == 0 and j == 0) for j in range(6)] for i in range(6)])
        dec = decompose_state(rho)
        s = Fraction(1, 6)
        assert dec.local_a == Matrix([[s, 0], [0, -s]])
        assert dec.local_b == Matrix(
            [[Fraction(1, 3), 0, 0], [0, -s, 0], [0, 0, -s]]
        )
        sz = Matrix([[1, 0], [0, -1]])
        assert dec.corr == sz.kron(dec.local_b)

    def test_maximally_mixed_has_no_structure(self):
        dec = decompose_state(Matrix.identity(6) * Fraction(1, 6))
        assert dec.local_a == Matrix.zeros(2)
        assert dec.local_b == Matrix.zeros(3)
        assert dec.corr == Matrix.zeros(6)

    @pytest.mark.parametrize("seed", range(8))
    def test_structural_properties_exact(self, seed):
        rho = random_state(seed, "rational")
        dec = decompose_state(rho)
        assert dec.exact
        # local parts: traceless hermitian of the right sizes
        assert dec.local_a.shape == (2, 2) and dec.local_a.is_hermitian()
        assert dec.local_b.shape == (3, 3) and dec.local_b.is_hermitian()
        assert dec.local_a.trace() == GaussianRational(0)
        assert dec.local_b.trace() == GaussianRational(0)
        # correlation part: hermitian with both partial traces zero
        assert dec.corr.is_hermitian()
        assert partial_trace_qubit(dec.corr) == Matrix.zeros(3)
        assert partial_trace_qutrit(dec.corr) == Matrix.zeros(2)
        # the Pauli expansion of the correlation part is exact
        paulis = pauli_basis()
        rebuilt = Matrix.zeros(6)
        for e, y in zip(paulis, dec.corr_parts):
            assert y.is_hermitian()
            rebuilt = rebuilt + e.kron(y)
        assert rebuilt == dec.corr
        # and the whole thing reassembles to the input
        assert recompose(dec) == rho

    @pytest.mark.parametrize("seed", range(4))
    def test_roundtrip_float(self, seed):
        rho = random_state(seed, "psd_float")
        dec = decompose_state(rho)
        assert not dec.exact
        assert recompose(dec).max_abs_diff(rho) < 1e-14

    def test_scale_components(self):
        dec = decompose_state(random_state(5, "rational"))
        scaled = scale_components(dec, 2, Fraction(1, 3), -1)
        assert scaled.local_a == dec.local_a * 2
        assert scaled.local_b == dec.local_b * Fraction(1, 3)
        assert scaled.corr == -dec.corr
        assert scaled.corr_parts[1] == -dec.corr_parts[1]


class TestRandomStates:
    def test_rational_states_are_valid_and_deterministic(self):
        a = random_state(123, "rational")
        assert a == random_state(123, "rational")
        assert a.exact
        validate_state(a)

    def test_rational_states_are_psd(self):
        for seed in range(5):
            evs = np.linalg.eigvalsh(random_state(seed, "rational").to_numpy())
            assert evs.min() > -1e-12

    def test_float_states_are_valid_and_psd(self):
        rho = random_state(9, "psd_float")
        assert not rho.exact
        validate_state(rho, tolerance=1e-9)
        assert np.linalg.eigvalsh(rho.to_numpy()).min() > -1e-12

    def test_distinct_seeds_differ(self):
        assert random_state(1, "rational") != random_state(2, "rational")

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            random_state(0, "bogus")


class TestLocalUnitaries:
    def test_special_unitarity(self):
        pair = random_local_unitary(31)
        for u, n in ((pair.u2, 2), (pair.u3, 3)):
            mat = u.to_numpy()
            assert np.allclose(mat.conj().T @ mat, np.eye(n), atol=1e-12)
            assert abs(np.linalg.det(mat) - 1) < 1e-12

    def test_determinism(self):
        assert random_local_unitary(8).u3 == random_local_unitary(8).u3

    def test_conjugation_preserves_state_properties(self):
        rho = random_state(17, "psd_float")
        moved = apply_local_unitary(rho, random_local_unitary(18))
        validate_state(moved, tolerance=1e-9)
        # spectrum is preserved by conjugation
        assert np.allclose(
            np.linalg.eigvalsh(moved.to_numpy()),
            np.linalg.eigvalsh(rho.to_numpy()),
            atol=1e-10,
        )


class TestJsonIO:
    def test_exact_roundtrip_uses_fraction_strings(self):
        rho = random_state(4, "rational")
        text = state_to_json(rho)
        payload = json.loads(text)
        assert payload["schema"] == "luinv.state.v1"
        assert payload["scalar"] == "rational"
        assert all(
            isinstance(part, str) for row in payload["matrix"] for e in row for part in e
        )
        assert state_from_json(text) == rho

    def test_float_roundtrip(self):
        rho = random_state(4, "psd_float")
        back = state_from_json(state_to_json(rho))
        assert not back.exact
        assert back.max_abs_diff(rho) == 0.0

    def test_rejects_wrong_schema(self):
        with pytest.raises(ValueError, match="schema"):
            state_from_json(json.dumps({"schema": "nope", "scalar": "float", "matrix": []}))

    def test_rejects_bad_shape(self):
        payload = {"schema": "luinv.state.v1", "scalar": "float", "matrix": [[[1, 0]] * 6] * 5}
        with pytest.raises(ValueError, match="6x6"):
            state_from_json(json.dumps(payload))

    def test_rejects_bad_entry(self):
        matrix = [[["1/6" if i == j else "0", "0"] for j in range(6)] for i in range(6)]
        matrix[0][0] = ["1/0", "0"]
        payload = {"schema": "luinv.state.v1", "scalar": "rational", "matrix": matrix}
        with pytest.raises(ValueError, match="entry"):
            state_from_json(json.dumps(payload))

    def test_rejects_garbage(self):
        with pytest.raises(ValueError, match="JSON"):
            state_from_json("{nope")
