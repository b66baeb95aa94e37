"""Exact trivariate Laurent polynomials on bounded exponent windows.

Coefficients are Python ints stored in a dense numpy object array; the
entry for monomial x^a y^b z^c sits at index (a, b, c) - lo.  Windows
are kept tight (no all-zero boundary slabs), so equality is plain
blockwise comparison.  Dense blocks trade memory for a predictable,
cache-friendly sweep when multiplying a big block by a polynomial with
few terms, which is the dominant operation in the series engine.

Every value is immutable after construction and every operation returns
a fresh value; concurrent use needs no coordination.
"""

from __future__ import annotations

from typing import Iterator, Mapping, Optional, Tuple

import numpy as np

Exponents = Tuple[int, int, int]

#: Rough bytes-per-coefficient estimate used for the memory budget
#: (object pointer plus a small int object).
BYTES_PER_CELL = 64

#: Default cap on the size of any single coefficient block (1 GiB).
DEFAULT_MEMORY_BUDGET = 1 << 30


class MemoryBudgetError(MemoryError):
    """A requested coefficient block would exceed the memory budget."""


class InexactDivisionError(ArithmeticError):
    """Elementwise division left a remainder where exactness was required."""


def _check_budget(shape: Exponents, memory_budget: Optional[int]) -> None:
    budget = DEFAULT_MEMORY_BUDGET if memory_budget is None else memory_budget
    cells = shape[0] * shape[1] * shape[2]
    if cells * BYTES_PER_CELL > budget:
        raise MemoryBudgetError(
            f"coefficient window of shape {shape} needs about "
            f"{cells * BYTES_PER_CELL} bytes, over the budget of {budget}"
        )


def _zero_block() -> np.ndarray:
    return np.empty((0, 0, 0), dtype=object)


class LaurentPoly3:
    """Laurent polynomial in three variables with exact int coefficients."""

    __slots__ = ("lo", "block")

    def __init__(self, lo: Exponents, block: np.ndarray, *, _trim: bool = True):
        if block.dtype != object:
            block = block.astype(object)
        if _trim:
            lo, block = self._trimmed(lo, block)
        object.__setattr__(self, "lo", tuple(lo))
        object.__setattr__(self, "block", block)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly3 is immutable")

    @staticmethod
    def _trimmed(lo, block):
        if block.size == 0 or not block.any():
            return (0, 0, 0), _zero_block()
        index = block.nonzero()
        bounds = [(int(ax.min()), int(ax.max())) for ax in index]
        slices = tuple(slice(a, b + 1) for a, b in bounds)
        return (
            tuple(lo[i] + bounds[i][0] for i in range(3)),
            block[slices],
        )

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly3":
        return cls((0, 0, 0), _zero_block(), _trim=False)

    @classmethod
    def one(cls) -> "LaurentPoly3":
        return cls.monomial(1, (0, 0, 0))

    @classmethod
    def monomial(cls, coeff: int, exps: Exponents) -> "LaurentPoly3":
        if coeff == 0:
            return cls.zero()
        block = np.empty((1, 1, 1), dtype=object)
        block[0, 0, 0] = coeff
        return cls(tuple(exps), block, _trim=False)

    @classmethod
    def from_terms(cls, terms: Mapping[Exponents, int]) -> "LaurentPoly3":
        terms = {e: c for e, c in terms.items() if c != 0}
        if not terms:
            return cls.zero()
        lo = tuple(min(e[i] for e in terms) for i in range(3))
        hi = tuple(max(e[i] for e in terms) for i in range(3))
        block = np.zeros(tuple(hi[i] - lo[i] + 1 for i in range(3)), dtype=object)
        for e, c in terms.items():
            block[e[0] - lo[0], e[1] - lo[1], e[2] - lo[2]] = c
        return cls(lo, block, _trim=False)

    # -- inspection ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.block.size == 0

    @property
    def window(self) -> Optional[Tuple[Tuple[int, int], ...]]:
        """((ex_min, ex_max), (ey_min, ey_max), (ez_min, ez_max)); None if zero."""
        if self.is_zero:
            return None
        return tuple(
            (self.lo[i], self.lo[i] + self.block.shape[i] - 1) for i in range(3)
        )

    @property
    def nnz(self) -> int:
        return int(np.count_nonzero(self.block)) if self.block.size else 0

    def coefficient(self, exps: Exponents) -> int:
        idx = tuple(exps[i] - self.lo[i] for i in range(3))
        for i in range(3):
            if not 0 <= idx[i] < self.block.shape[i]:
                return 0
        return self.block[idx]

    def constant_term(self) -> int:
        return self.coefficient((0, 0, 0))

    def terms(self) -> Iterator[Tuple[Exponents, int]]:
        """Nonzero (exponents, coefficient) pairs."""
        if self.is_zero:
            return
        for idx in zip(*self.block.nonzero()):
            exps = tuple(int(idx[i]) + self.lo[i] for i in range(3))
            yield exps, self.block[idx]

    def eval_ones(self) -> int:
        """Value at x = y = z = 1, i.e. the sum of all coefficients."""
        return int(self.block.sum()) if self.block.size else 0

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "LaurentPoly3") -> "LaurentPoly3":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        lo = tuple(min(self.lo[i], other.lo[i]) for i in range(3))
        hi = tuple(
            max(
                self.lo[i] + self.block.shape[i],
                other.lo[i] + other.block.shape[i],
            )
            for i in range(3)
        )
        block = np.zeros(tuple(hi[i] - lo[i] for i in range(3)), dtype=object)
        for part in (self, other):
            sl = tuple(
                slice(part.lo[i] - lo[i], part.lo[i] - lo[i] + part.block.shape[i])
                for i in range(3)
            )
            block[sl] += part.block
        return LaurentPoly3(lo, block)

    def __sub__(self, other: "LaurentPoly3") -> "LaurentPoly3":
        return self + (-other)

    def __neg__(self) -> "LaurentPoly3":
        return LaurentPoly3(self.lo, -self.block, _trim=False)

    def __mul__(self, other) -> "LaurentPoly3":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly3.zero()
            return LaurentPoly3(self.lo, self.block * other, _trim=False)
        if isinstance(other, LaurentPoly3):
            return self.mul(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def mul(
        self, other: "LaurentPoly3", memory_budget: Optional[int] = None
    ) -> "LaurentPoly3":
        """Exact product; the window is the Minkowski sum of the inputs'.

        Sweeps the sparser operand as a stencil over the denser one's
        block.  Raises MemoryBudgetError if the output window is too big.
        """
        if self.is_zero or other.is_zero:
            return LaurentPoly3.zero()
        lo = tuple(self.lo[i] + other.lo[i] for i in range(3))
        shape = tuple(
            self.block.shape[i] + other.block.shape[i] - 1 for i in range(3)
        )
        _check_budget(shape, memory_budget)
        stencil, dense = (self, other) if self.nnz <= other.nnz else (other, self)
        out = np.zeros(shape, dtype=object)
        for exps, coeff in stencil.terms():
            off = tuple(exps[i] - stencil.lo[i] for i in range(3))
            sl = tuple(
                slice(off[i], off[i] + dense.block.shape[i]) for i in range(3)
            )
            if coeff == 1:
                out[sl] += dense.block
            elif coeff == -1:
                out[sl] -= dense.block
            else:
                out[sl] += coeff * dense.block
        return LaurentPoly3(lo, out)

    def substitute_power(self, k: int) -> "LaurentPoly3":
        """Replace (x, y, z) by (x^k, y^k, z^k): every exponent times k."""
        if k < 1:
            raise ValueError("power substitution requires k >= 1")
        if k == 1 or self.is_zero:
            return self
        shape = tuple((s - 1) * k + 1 for s in self.block.shape)
        block = np.zeros(shape, dtype=object)
        block[::k, ::k, ::k] = self.block
        return LaurentPoly3(tuple(e * k for e in self.lo), block, _trim=False)

    def reverse(self) -> "LaurentPoly3":
        """Negate all exponents (coefficients untouched)."""
        if self.is_zero:
            return self
        hi = tuple(self.lo[i] + self.block.shape[i] - 1 for i in range(3))
        return LaurentPoly3(
            tuple(-h for h in hi), self.block[::-1, ::-1, ::-1], _trim=False
        )

    def divide_exact(self, n: int) -> "LaurentPoly3":
        """Divide every coefficient by n, which must leave no remainder."""
        if self.is_zero:
            return self
        quot = self.block // n
        if (self.block - quot * n).any():
            raise InexactDivisionError(f"coefficients are not all divisible by {n}")
        return LaurentPoly3(self.lo, quot, _trim=False)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly3):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        return (
            self.lo == other.lo
            and self.block.shape == other.block.shape
            and bool((self.block == other.block).all())
        )

    def __hash__(self):
        return hash((self.lo, tuple(sorted(self.terms()))))

    def __repr__(self):
        if self.is_zero:
            return "LaurentPoly3(0)"
        parts = [f"{c}*x^{e[0]}*y^{e[1]}*z^{e[2]}" for e, c in self.terms()]
        shown = " + ".join(parts[:5])
        if len(parts) > 5:
            shown += f" + ... ({len(parts)} terms)"
        return f"LaurentPoly3({shown})"


def lp_mul(
    a: LaurentPoly3, b: LaurentPoly3, memory_budget: Optional[int] = None
) -> LaurentPoly3:
    """Exact product of two Laurent polynomials."""
    return a.mul(b, memory_budget=memory_budget)


def lp_substitute_power(f: LaurentPoly3, k: int) -> LaurentPoly3:
    """f(x^k, y^k, z^k)."""
    return f.substitute_power(k)


def lp_constant_term(f: LaurentPoly3) -> int:
    """Coefficient of x^0 y^0 z^0 (equals the normalized torus integral)."""
    return f.constant_term()
