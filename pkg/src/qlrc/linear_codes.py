"""Linear codes over a FieldSpec: RREF generators, duals, and exact
brute-force oracles for minimum distance and coset minimum weight.

Generator matrices are kept in reduced row echelon form with leftmost
pivots, so two codes are equal exactly when their generator matrices are
equal entry for entry.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .errors import (
    BudgetExceeded,
    EmptyInput,
    FieldMismatch,
    InvalidParameter,
    LengthMismatch,
    NotQuadraticExtension,
    NotSubcode,
)
from .gf import FieldSpec, field_from_json, field_to_json

_BLOCK = 1 << 16
_DEFAULT_BUDGET = 1 << 24


def default_budget(fallback: int = _DEFAULT_BUDGET) -> int:
    """Enumeration budget; the QLRC_BUDGET environment variable wins."""
    raw = os.environ.get("QLRC_BUDGET")
    if raw is None:
        return fallback
    try:
        value = int(raw)
    except ValueError as exc:
        raise InvalidParameter(f"QLRC_BUDGET must be an integer, got {raw!r}") from exc
    if value < 1:
        raise InvalidParameter(f"QLRC_BUDGET must be positive, got {value}")
    return value


@dataclass(frozen=True, eq=False)
class CodeVector:
    field: FieldSpec
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values",
                           np.asarray(self.values, dtype=np.int64))

    def weight(self) -> int:
        return int(np.count_nonzero(self.values))

    def __len__(self):
        return int(self.values.shape[0])

    def __eq__(self, other):
        return (
            isinstance(other, CodeVector)
            and self.field == other.field
            and np.array_equal(self.values, other.values)
        )


def weight(v) -> int:
    if isinstance(v, CodeVector):
        return v.weight()
    return int(np.count_nonzero(np.asarray(v)))


def _rref(field: FieldSpec, mat: np.ndarray) -> tuple[np.ndarray, tuple[int, ...]]:
    M = np.array(mat, dtype=np.int64, copy=True)
    rows, n = M.shape
    pivots = []
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, rows):
            if M[i, c] != 0:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        M[r] = field.vscale(field.inv(int(M[r, c])), M[r])
        for i in range(rows):
            if i != r and M[i, c] != 0:
                M[i] = field.vsub(M[i], field.vscale(int(M[i, c]), M[r]))
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return M[:r], tuple(pivots)


class LinearCode:
    """A k-dimensional subspace of GF(q)^n with a canonical RREF generator."""

    __slots__ = ("field", "n", "generator", "pivots")

    def __init__(self, field: FieldSpec, n: int, generator: np.ndarray,
                 pivots: tuple[int, ...]):
        self.field = field
        self.n = int(n)
        self.generator = generator
        self.pivots = pivots

    @property
    def k(self) -> int:
        return int(self.generator.shape[0])

    def __eq__(self, other):
        return (
            isinstance(other, LinearCode)
            and self.field == other.field
            and self.n == other.n
            and np.array_equal(self.generator, other.generator)
        )

    def __repr__(self):
        return f"LinearCode([{self.n}, {self.k}]_{self.field.q})"

    def codeword(self, message) -> np.ndarray:
        msg = np.asarray(message, dtype=np.int64)
        f = self.field
        out = np.zeros(self.n, dtype=np.int64)
        for j in range(self.k):
            out = f.vadd(out, f.vscale(int(msg[j]), self.generator[j]))
        return out


def _coerce_rows(field: FieldSpec, vectors) -> np.ndarray:
    rows = []
    length = None
    for v in vectors:
        if isinstance(v, CodeVector):
            if v.field != field:
                raise FieldMismatch("vector field differs from the target field")
            arr = v.values
        else:
            arr = np.asarray(v, dtype=np.int64)
        if arr.ndim != 1:
            raise InvalidParameter("spanning vectors must be one-dimensional")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise FieldMismatch(
                f"entries must be encodings in [0, {field.q})")
        if length is None:
            length = arr.shape[0]
        elif arr.shape[0] != length:
            raise LengthMismatch(
                f"vector length {arr.shape[0]} differs from {length}")
        rows.append(arr)
    if not rows:
        raise EmptyInput("cannot build a code from an empty spanning set")
    return np.stack(rows)


def from_spanning_set(field: FieldSpec, vectors) -> LinearCode:
    mat = _coerce_rows(field, vectors)
    R, pivots = _rref(field, mat)
    return LinearCode(field, mat.shape[1], R, pivots)


def zero_code(field: FieldSpec, n: int) -> LinearCode:
    return LinearCode(field, n, np.zeros((0, n), dtype=np.int64), ())


def full_code(field: FieldSpec, n: int) -> LinearCode:
    return LinearCode(field, n, np.eye(n, dtype=np.int64), tuple(range(n)))


def euclidean_dual(code: LinearCode) -> LinearCode:
    field, n = code.field, code.n
    pivot_set = set(code.pivots)
    free = [c for c in range(n) if c not in pivot_set]
    if not free:
        return zero_code(field, n)
    rows = np.zeros((len(free), n), dtype=np.int64)
    for row, f in enumerate(free):
        rows[row, f] = 1
        for i, pc in enumerate(code.pivots):
            rows[row, pc] = field.neg(int(code.generator[i, f]))
    R, pivots = _rref(field, rows)
    return LinearCode(field, n, R, pivots)


def frobenius_map(code: LinearCode, power: int) -> LinearCode:
    """Entrywise x -> x^power; an automorphism image when power = p^t."""
    field = code.field
    table = np.array([field.pow(x, power) for x in range(field.q)],
                     dtype=np.int64)
    R, pivots = _rref(field, table[code.generator])
    return LinearCode(field, code.n, R, pivots)


def hermitian_dual(code: LinearCode) -> LinearCode:
    field = code.field
    if field.m % 2 != 0:
        raise NotQuadraticExtension(
            f"GF({field.q}) is not a quadratic extension; Hermitian dual undefined")
    q0 = field.p ** (field.m // 2)
    return euclidean_dual(frobenius_map(code, q0))


def in_row_space(code: LinearCode, vec: np.ndarray) -> bool:
    field = code.field
    v = np.array(vec, dtype=np.int64, copy=True)
    if v.shape[0] != code.n:
        raise LengthMismatch(f"vector length {v.shape[0]} != code length {code.n}")
    for i, pc in enumerate(code.pivots):
        if v[pc] != 0:
            v = field.vsub(v, field.vscale(int(v[pc]), code.generator[i]))
    return not v.any()


def contains(outer: LinearCode, inner: LinearCode) -> bool:
    if outer.field != inner.field:
        raise FieldMismatch("codes live over different fields")
    if outer.n != inner.n:
        raise LengthMismatch(f"code lengths differ: {outer.n} vs {inner.n}")
    return all(in_row_space(outer, inner.generator[i]) for i in range(inner.k))


def _message_block(q: int, k: int, start: int, stop: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    pws = q ** np.arange(k, dtype=np.int64)
    return (idx[:, None] // pws[None, :]) % q


def _encode_block(code: LinearCode, msgs: np.ndarray) -> np.ndarray:
    field = code.field
    if field.m == 1:
        return (msgs @ code.generator) % field.p
    out = np.zeros((msgs.shape[0], code.n), dtype=np.int64)
    for j in range(code.k):
        term = field.vmul(msgs[:, j:j + 1], code.generator[j:j + 1, :])
        out = field.vadd(out, term)
    return out


def _field_row_sums(field: FieldSpec, mat: np.ndarray) -> np.ndarray:
    """Sum of each row of mat in the field."""
    if field.m == 1:
        return mat.sum(axis=1) % field.p
    if field.p == 2:
        return np.bitwise_xor.reduce(mat, axis=1)
    out = np.zeros(mat.shape[0], dtype=np.int64)
    pw = 1
    for _ in range(field.m):
        out += (((mat // pw) % field.p).sum(axis=1) % field.p) * pw
        pw *= field.p
    return out


def _check_budget(code: LinearCode, budget) -> tuple[int, int]:
    if budget is None:
        budget = default_budget()
    total = code.field.q ** code.k
    if total > budget:
        raise BudgetExceeded(
            f"enumeration of {code.field.q}^{code.k} = {total} codewords "
            f"exceeds budget {budget}")
    return total, budget


def min_distance_bruteforce(code: LinearCode, budget: int | None = None) -> int:
    """Exact d_H by enumerating every nonzero codeword."""
    if code.k == 0:
        raise InvalidParameter("the zero code has no minimum distance")
    total, _ = _check_budget(code, budget)
    best = code.n + 1
    for start in range(1, total, _BLOCK):
        stop = min(start + _BLOCK, total)
        msgs = _message_block(code.field.q, code.k, start, stop)
        words = _encode_block(code, msgs)
        w = np.count_nonzero(words, axis=1)
        best = min(best, int(w.min()))
        if best == 1:
            break
    return best


def coset_min_weight_bruteforce(code: LinearCode, sub: LinearCode,
                                budget: int | None = None) -> int:
    """Exact min Hamming weight over codewords of `code` outside `sub`."""
    if not contains(code, sub):
        raise NotSubcode("second argument is not a subcode of the first")
    if sub.k == code.k:
        raise InvalidParameter("subcode equals the code; the coset is empty")
    total, _ = _check_budget(code, budget)
    field = code.field
    parity = euclidean_dual(sub).generator
    best = code.n + 1
    for start in range(0, total, _BLOCK):
        stop = min(start + _BLOCK, total)
        msgs = _message_block(field.q, code.k, start, stop)
        words = _encode_block(code, msgs)
        if field.m == 1:
            synd = (words @ parity.T) % field.p
            outside = synd.any(axis=1)
        else:
            outside = np.zeros(words.shape[0], dtype=bool)
            for r in range(parity.shape[0]):
                prods = field.vmul(words, parity[r:r + 1, :])
                outside |= _field_row_sums(field, prods) != 0
        if outside.any():
            w = np.count_nonzero(words[outside], axis=1)
            best = min(best, int(w.min()))
            if best == 1:
                break
    if best > code.n:
        raise InvalidParameter("no codeword outside the subcode was found")
    return best


def code_to_json(code: LinearCode) -> dict:
    field = code.field
    return {
        "field": field_to_json(field),
        "n": code.n,
        "k": code.k,
        "generator": [
            [list(field.coeffs(int(v))) for v in row] for row in code.generator
        ],
    }


def code_from_json(data: dict) -> LinearCode:
    field = field_from_json(data["field"])
    rows = [
        np.array([field.encode(entry) for entry in row], dtype=np.int64)
        for row in data["generator"]
    ]
    if not rows:
        return zero_code(field, int(data["n"]))
    code = from_spanning_set(field, rows)
    if code.k != int(data["k"]) or code.n != int(data["n"]):
        raise InvalidParameter("serialized code is inconsistent with its matrix")
    return code
