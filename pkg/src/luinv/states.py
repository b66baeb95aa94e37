"""Qubit-qutrit density matrices and their Bloch-style decomposition.

A 6x6 density matrix on C^2 (x) C^3 (qubit factor major) splits uniquely
as

    rho = I6/6 + X (x) I3 + I2 (x) Y + Z

with X, Y traceless hermitian of sizes 2 and 3 and Z a 6x6 correlation
part whose partial traces over either factor vanish.  Z further expands
over the Pauli basis of the qubit side as Z = sum_k E_k (x) Y_k with
hermitian 3x3 parts Y_k.  These pieces are exactly the coordinates on
which the local-unitary invariants act, so the decomposition is the
bridge between raw states and invariant evaluation.

Matrices carry either exact Gaussian-rational entries or complex floats;
every operation preserves exactness unless a float operand forces a
promotion.  Exact random states come from A A^dagger / tr(A A^dagger)
with Gaussian-integer A, float ones from the Ginibre ensemble, and Haar
special unitaries from QR with the standard phase fix.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple, Union

import numpy as np

from luinv.exact import GaussianRational

STATE_SCHEMA = "luinv.state.v1"

Scalar = Union[int, Fraction, GaussianRational, float, complex]


def _is_float_entry(value) -> bool:
    return isinstance(value, (float, complex)) and not isinstance(value, bool)


def _as_exact(value) -> GaussianRational:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    raise TypeError(f"cannot use {type(value).__name__} in an exact matrix")


class Matrix:
    """Immutable dense matrix, exact (Gaussian rational) or complex float."""

    __slots__ = ("rows", "exact")

    def __init__(self, rows: Iterable[Iterable[Scalar]], exact: Optional[bool] = None):
        raw = tuple(tuple(row) for row in rows)
        if not raw or any(len(r) != len(raw[0]) for r in raw):
            raise ValueError("rows must be nonempty and of equal length")
        if exact is None:
            exact = not any(_is_float_entry(v) for r in raw for v in r)
        if exact:
            rows_c = tuple(tuple(_as_exact(v) for v in r) for r in raw)
        else:
            rows_c = tuple(tuple(complex(v) for v in r) for r in raw)
        object.__setattr__(self, "rows", rows_c)
        object.__setattr__(self, "exact", exact)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def zeros(cls, n: int, m: Optional[int] = None, exact: bool = True) -> "Matrix":
        m = n if m is None else m
        fill: Scalar = GaussianRational(0) if exact else 0j
        return cls([[fill] * m for _ in range(n)], exact=exact)

    @classmethod
    def identity(cls, n: int, exact: bool = True) -> "Matrix":
        if exact:
            return cls(
                [[GaussianRational(int(i == j)) for j in range(n)] for i in range(n)],
                exact=True,
            )
        return cls([[complex(i == j) for j in range(n)] for i in range(n)], exact=False)

    @property
    def shape(self) -> Tuple[int, int]:
        return (len(self.rows), len(self.rows[0]))

    def __getitem__(self, key: Tuple[int, int]):
        i, j = key
        return self.rows[i][j]

    def to_float(self) -> "Matrix":
        if not self.exact:
            return self
        return Matrix([[complex(v) for v in r] for r in self.rows], exact=False)

    def to_numpy(self) -> np.ndarray:
        return np.array([[complex(v) for v in r] for r in self.rows], dtype=complex)

    def _pair(self, other: "Matrix") -> Tuple["Matrix", "Matrix"]:
        if self.exact and not other.exact:
            return self.to_float(), other
        if other.exact and not self.exact:
            return self, other.to_float()
        return self, other

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError("shape mismatch in addition")
        a, b = self._pair(other)
        return Matrix(
            [
                [a.rows[i][j] + b.rows[i][j] for j in range(a.shape[1])]
                for i in range(a.shape[0])
            ],
            exact=a.exact,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return Matrix([[-v for v in r] for r in self.rows], exact=self.exact)

    def __mul__(self, scalar: Scalar) -> "Matrix":
        if isinstance(scalar, Matrix):
            raise TypeError("use @ for matrix products, * is scalar only")
        if _is_float_entry(scalar) and self.exact:
            return self.to_float() * scalar
        if not self.exact:
            scalar = complex(scalar)
        return Matrix([[v * scalar for v in r] for r in self.rows], exact=self.exact)

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape[1] != other.shape[0]:
            raise ValueError("shape mismatch in matrix product")
        a, b = self._pair(other)
        n, k, m = a.shape[0], a.shape[1], b.shape[1]
        return Matrix(
            [
                [
                    sum((a.rows[i][s] * b.rows[s][j] for s in range(k)),
                        GaussianRational(0) if a.exact else 0j)
                    for j in range(m)
                ]
                for i in range(n)
            ],
            exact=a.exact,
        )

    def dagger(self) -> "Matrix":
        n, m = self.shape
        if self.exact:
            return Matrix(
                [[self.rows[j][i].conjugate() for j in range(n)] for i in range(m)],
                exact=True,
            )
        return Matrix(
            [[self.rows[j][i].conjugate() for j in range(n)] for i in range(m)],
            exact=False,
        )

    def trace(self):
        n, m = self.shape
        if n != m:
            raise ValueError("trace needs a square matrix")
        start: Scalar = GaussianRational(0) if self.exact else 0j
        return sum((self.rows[i][i] for i in range(n)), start)

    def det(self):
        n, m = self.shape
        if n != m or n > 3:
            raise ValueError("determinant implemented for square sizes up to 3")
        r = self.rows
        if n == 1:
            return r[0][0]
        if n == 2:
            return r[0][0] * r[1][1] - r[0][1] * r[1][0]
        return (
            r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
            - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
            + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
        )

    def kron(self, other: "Matrix") -> "Matrix":
        a, b = self._pair(other)
        p, q = a.shape
        r, s = b.shape
        return Matrix(
            [
                [a.rows[i][k] * b.rows[j][l] for k in range(q) for l in range(s)]
                for i in range(p)
                for j in range(r)
            ],
            exact=a.exact,
        )

    def is_hermitian(self, tolerance: float = 0.0) -> bool:
        if self.shape[0] != self.shape[1]:
            return False
        if self.exact:
            return self == self.dagger()
        return self.max_abs_diff(self.dagger()) <= tolerance

    def max_abs_diff(self, other: "Matrix") -> float:
        if self.shape != other.shape:
            raise ValueError("shape mismatch in comparison")
        a, b = self.to_float(), other.to_float()
        return max(
            abs(a.rows[i][j] - b.rows[i][j])
            for i in range(a.shape[0])
            for j in range(a.shape[1])
        )

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.exact == other.exact
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.exact, self.rows))

    def __repr__(self):
        kind = "exact" if self.exact else "float"
        return f"Matrix({self.shape[0]}x{self.shape[1]}, {kind})"


def pauli_basis() -> Tuple[Matrix, Matrix, Matrix]:
    """The three Pauli matrices, exact, with tr(E_k E_l) = 2 delta_kl."""
    i = GaussianRational.i()
    return (
        Matrix([[0, 1], [1, 0]]),
        Matrix([[GaussianRational(0), -i], [i, GaussianRational(0)]]),
        Matrix([[1, 0], [0, -1]]),
    )


def gellmann_basis() -> Tuple[Matrix, ...]:
    """The eight Gell-Mann matrices with tr(G_a G_b) = 2 delta_ab.

    Float entries only: the diagonal generator carries a 1/sqrt(3)
    normalizer, which no rational rescaling can remove while keeping the
    trace-orthonormality convention, so there is no exact counterpart.
    """
    s3 = 1.0 / np.sqrt(3.0)
    mats = [
        [[0, 1, 0], [1, 0, 0], [0, 0, 0]],
        [[0, -1j, 0], [1j, 0, 0], [0, 0, 0]],
        [[1, 0, 0], [0, -1, 0], [0, 0, 0]],
        [[0, 0, 1], [0, 0, 0], [1, 0, 0]],
        [[0, 0, -1j], [0, 0, 0], [1j, 0, 0]],
        [[0, 0, 0], [0, 0, 1], [0, 1, 0]],
        [[0, 0, 0], [0, 0, -1j], [0, 1j, 0]],
        [[s3, 0, 0], [0, s3, 0], [0, 0, -2 * s3]],
    ]
    return tuple(Matrix([[complex(v) for v in row] for row in m], exact=False) for m in mats)


def tensor_product(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product with the first (qubit) factor major."""
    return a.kron(b)


def partial_trace_qutrit(m: Matrix) -> Matrix:
    """Trace out the qutrit factor of a 6x6 matrix, leaving 2x2."""
    if m.shape != (6, 6):
        raise ValueError("expected a 6x6 matrix")
    return Matrix(
        [
            [
                sum((m.rows[3 * i + j][3 * k + j] for j in range(3)),
                    GaussianRational(0) if m.exact else 0j)
                for k in range(2)
            ]
            for i in range(2)
        ],
        exact=m.exact,
    )


def partial_trace_qubit(m: Matrix) -> Matrix:
    """Trace out the qubit factor of a 6x6 matrix, leaving 3x3."""
    if m.shape != (6, 6):
        raise ValueError("expected a 6x6 matrix")
    return Matrix(
        [
            [
                sum((m.rows[3 * i + j][3 * i + l] for i in range(2)),
                    GaussianRational(0) if m.exact else 0j)
                for l in range(3)
            ]
            for j in range(3)
        ],
        exact=m.exact,
    )


@dataclass(frozen=True)
class StateDecomposition:
    """Bloch-style pieces of a state: rho = I/6 + X(x)I + I(x)Y + Z."""

    local_a: Matrix  # X: 2x2 traceless hermitian, qubit side
    local_b: Matrix  # Y: 3x3 traceless hermitian, qutrit side
    corr: Matrix  # Z: 6x6, both partial traces vanish
    corr_parts: Tuple[Matrix, Matrix, Matrix]  # Y_k with Z = sum E_k (x) Y_k

    @property
    def exact(self) -> bool:
        return self.corr.exact


def validate_state(rho: Matrix, tolerance: float = 1e-12) -> None:
    """Raise ValueError unless rho is 6x6 hermitian with unit trace."""
    if rho.shape != (6, 6):
        raise ValueError(f"expected a 6x6 matrix, got {rho.shape[0]}x{rho.shape[1]}")
    if rho.exact:
        if not rho.is_hermitian():
            raise ValueError("state is not hermitian")
        if rho.trace() != GaussianRational(1):
            raise ValueError(f"state trace is {rho.trace()}, not 1")
    else:
        if not rho.is_hermitian(tolerance):
            raise ValueError("state is not hermitian within tolerance")
        if abs(rho.trace() - 1) > tolerance:
            raise ValueError(f"state trace deviates from 1 by {abs(rho.trace() - 1):.3e}")


def decompose_state(rho: Matrix, tolerance: float = 1e-12) -> StateDecomposition:
    """Split a validated state into its local and correlation pieces."""
    validate_state(rho, tolerance)
    exact = rho.exact
    half = Fraction(1, 2) if exact else 0.5
    third = Fraction(1, 3) if exact else 1.0 / 3.0
    id2 = Matrix.identity(2, exact)
    id3 = Matrix.identity(3, exact)
    id6 = Matrix.identity(6, exact)
    local_a = (partial_trace_qutrit(rho) - id2 * half) * third
    local_b = (partial_trace_qubit(rho) - id3 * third) * half
    corr = rho - id6 * (third * half) - local_a.kron(id3) - id2.kron(local_b)
    paulis = pauli_basis() if exact else tuple(p.to_float() for p in pauli_basis())
    corr_parts = tuple(
        partial_trace_qubit(e.kron(id3) @ corr) * half for e in paulis
    )
    return StateDecomposition(local_a, local_b, corr, corr_parts)


def scale_components(dec: StateDecomposition, a: Scalar, b: Scalar, c: Scalar) -> StateDecomposition:
    """Scale the qubit, qutrit and correlation pieces independently.

    An invariant of multidegree (d1, d2, d3) picks up the factor
    a^d1 b^d2 c^d3 under this scaling, which is how the multidegrees
    are tested.
    """
    return StateDecomposition(
        dec.local_a * a,
        dec.local_b * b,
        dec.corr * c,
        tuple(p * c for p in dec.corr_parts),
    )


def recompose(dec: StateDecomposition) -> Matrix:
    """Rebuild the density matrix from its decomposition pieces."""
    exact = dec.exact
    sixth = Fraction(1, 6) if exact else 1.0 / 6.0
    id2 = Matrix.identity(2, exact)
    id3 = Matrix.identity(3, exact)
    return (
        Matrix.identity(6, exact) * sixth
        + dec.local_a.kron(id3)
        + id2.kron(dec.local_b)
        + dec.corr
    )


def random_state(seed: int, kind: str = "rational") -> Matrix:
    """Deterministic random density matrix.

    kind="rational": A A^dagger / tr(A A^dagger) with a Gaussian-integer
    A, so the result is exactly positive semidefinite with unit trace.
    kind="psd_float": the same construction from a complex Ginibre draw.
    """
    if kind == "rational":
        rng = random.Random(seed)
        while True:
            a = Matrix(
                [
                    [
                        GaussianRational(rng.randint(-3, 3), rng.randint(-3, 3))
                        for _ in range(6)
                    ]
                    for _ in range(6)
                ],
                exact=True,
            )
            gram = a @ a.dagger()
            tr = gram.trace()
            if tr != GaussianRational(0):
                return gram * (1 / tr)
    if kind == "psd_float":
        rng_np = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
        g = rng_np.normal(size=(6, 6)) + 1j * rng_np.normal(size=(6, 6))
        gram_np = g @ g.conj().T
        gram_np = gram_np / np.trace(gram_np).real
        return Matrix([[complex(v) for v in row] for row in gram_np], exact=False)
    raise ValueError(f"unknown state kind {kind!r}")


@dataclass(frozen=True)
class LocalUnitaryPair:
    """An element (u2, u3) of SU(2) x SU(3), float entries."""

    u2: Matrix
    u3: Matrix


def _haar_special_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(g)
    d = np.diagonal(r)
    q = q * (d / np.abs(d))
    # divide out an n-th root of the determinant to land in SU(n)
    det = np.linalg.det(q)
    return q / det ** (1.0 / n)


def random_local_unitary(seed) -> LocalUnitaryPair:
    """Haar-distributed SU(2) x SU(3) pair from a seed or Generator."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    u2 = _haar_special_unitary(2, rng)
    u3 = _haar_special_unitary(3, rng)
    as_matrix = lambda u: Matrix([[complex(v) for v in row] for row in u], exact=False)
    return LocalUnitaryPair(as_matrix(u2), as_matrix(u3))


def apply_local_unitary(rho: Matrix, pair: LocalUnitaryPair) -> Matrix:
    """Conjugate a state by u2 (x) u3."""
    u = pair.u2.kron(pair.u3)
    return u @ rho.to_float() @ u.dagger()


def _fraction_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}" if q.denominator != 1 else str(q.numerator)


def state_to_json(rho: Matrix, indent: Optional[int] = None) -> str:
    """Serialize a 6x6 state to the versioned JSON schema."""
    if rho.shape != (6, 6):
        raise ValueError("expected a 6x6 matrix")
    if rho.exact:
        matrix = [
            [[_fraction_str(v.re), _fraction_str(v.im)] for v in row]
            for row in rho.rows
        ]
        scalar = "rational"
    else:
        matrix = [[[v.real, v.imag] for v in row] for row in rho.rows]
        scalar = "float"
    payload = {"schema": STATE_SCHEMA, "scalar": scalar, "matrix": matrix}
    return json.dumps(payload, indent=indent)


def state_from_json(text: str) -> Matrix:
    """Parse a state from the versioned JSON schema, validating shape."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as err:
        raise ValueError(f"state file is not valid JSON: {err}") from err
    if not isinstance(payload, dict) or payload.get("schema") != STATE_SCHEMA:
        raise ValueError(f"expected schema {STATE_SCHEMA!r}")
    scalar = payload.get("scalar")
    if scalar not in ("rational", "float"):
        raise ValueError("scalar must be 'rational' or 'float'")
    matrix = payload.get("matrix")
    if (
        not isinstance(matrix, list)
        or len(matrix) != 6
        or any(not isinstance(r, list) or len(r) != 6 for r in matrix)
    ):
        raise ValueError("matrix must be a 6x6 array of [re, im] pairs")
    rows: List[List[Scalar]] = []
    for r in matrix:
        row: List[Scalar] = []
        for entry in r:
            if not isinstance(entry, list) or len(entry) != 2:
                raise ValueError("each entry must be an [re, im] pair")
            re_part, im_part = entry
            if scalar == "rational":
                try:
                    row.append(GaussianRational(Fraction(str(re_part)), Fraction(str(im_part))))
                except (ValueError, ZeroDivisionError) as err:
                    raise ValueError(f"bad rational entry {entry!r}: {err}") from err
            else:
                row.append(complex(float(re_part), float(im_part)))
        rows.append(row)
    return Matrix(rows, exact=(scalar == "rational"))
