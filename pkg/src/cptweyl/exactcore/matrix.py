"""Dense exact matrices and vectors over dyadic Gaussians.

A matrix is stored as flat integer numerator tuples ``re`` and ``im``
sharing one power-of-two denominator.  A second, optional scale factor
``1/sqrt(2)`` (``root2=True``) lets the Hadamard gate and the braid
matrix ``R`` be represented exactly; products of two such factors fold
back into the dyadic denominator.
"""

from __future__ import annotations

import hashlib
import json
from typing import Iterable, Optional, Sequence

from .scalar import DyadicGaussian


class DimensionMismatch(ValueError):
    pass


def _canonical(re, im, den_pow: int, root2: bool):
    """Return (re, im, den_pow, root2) with the denominator fully reduced."""
    re = tuple(int(v) for v in re)
    im = None if im is None else tuple(int(v) for v in im)
    if im is not None and not any(im):
        im = None
    acc = 0
    for v in re:
        acc |= v
    if im is not None:
        for v in im:
            acc |= v
    if acc == 0:
        return re, None, 0, False
    if den_pow > 0:
        tz = (acc & -acc).bit_length() - 1
        shift = min(tz, den_pow)
        if shift:
            re = tuple(v >> shift for v in re)
            if im is not None:
                im = tuple(v >> shift for v in im)
            den_pow -= shift
    return re, im, den_pow, bool(root2)


def _flatten(rows) -> tuple[int, list]:
    rows = [list(r) for r in rows]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise DimensionMismatch("matrix data must be a non-empty square array")
    return n, [v for r in rows for v in r]


class _Scaled:
    """Shared storage for exact arrays: ``(re + i*im) / (2**den_pow * sqrt2**root2)``."""

    __slots__ = ("re", "im", "den_pow", "root2", "_hash")

    def _set(self, re, im, den_pow, root2):
        re, im, den_pow, root2 = _canonical(re, im, den_pow, root2)
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)
        object.__setattr__(self, "den_pow", den_pow)
        object.__setattr__(self, "root2", root2)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @property
    def is_real(self) -> bool:
        return self.im is None

    def _imag(self):
        return self.im if self.im is not None else (0,) * len(self.re)

    def _key(self):
        return (self.den_pow, self.root2, self.re, self.im or ())

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return len(self.re) == len(other.re) and self._key() == other._key()

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((len(self.re), self._key()))
            object.__setattr__(self, "_hash", h)
        return h

    def serialize(self) -> str:
        im = self.im or ()
        return f"{len(self.re)}|{self.den_pow}|{int(self.root2)}|{self.re}|{im}"

    def content_hash(self) -> str:
        return hashlib.sha256(self.serialize().encode()).hexdigest()

    def scalar_at(self, k: int) -> DyadicGaussian:
        if self.root2:
            raise ValueError("entry carries a 1/sqrt(2) factor and is not dyadic")
        im = self.im[k] if self.im is not None else 0
        return DyadicGaussian(self.re[k], im, self.den_pow)

    def to_complex(self) -> list[complex]:
        scale = 2.0**-self.den_pow * (2.0**-0.5 if self.root2 else 1.0)
        im = self._imag()
        return [complex(a * scale, b * scale) for a, b in zip(self.re, im)]


class ExactMatrix(_Scaled):
    """Immutable square matrix with exact entries.

    ``name`` is a display label only; it takes no part in equality or hashing.
    """

    __slots__ = ("dim", "name")

    def __init__(
        self,
        rows: Optional[Sequence[Sequence[int]]] = None,
        den_pow: int = 0,
        im_rows: Optional[Sequence[Sequence[int]]] = None,
        *,
        root2: bool = False,
        name: Optional[str] = None,
        _flat: Optional[tuple] = None,
    ):
        if _flat is not None:
            dim, re, im = _flat
        else:
            dim, re = _flatten(rows)
            im = None
            if im_rows is not None:
                dim_i, im = _flatten(im_rows)
                if dim_i != dim:
                    raise DimensionMismatch("real and imaginary parts differ in size")
        if den_pow < 0:
            raise ValueError("den_pow must be non-negative")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "name", name)
        self._set(re, im, den_pow, root2)

    # -- constructors -----------------------------------------------------
    @classmethod
    def _raw(cls, dim, re, im, den_pow, root2, name=None) -> "ExactMatrix":
        return cls(den_pow=den_pow, root2=root2, name=name, _flat=(dim, re, im))

    @classmethod
    def identity(cls, dim: int, name: Optional[str] = None) -> "ExactMatrix":
        re = [1 if i == j else 0 for i in range(dim) for j in range(dim)]
        return cls._raw(dim, re, None, 0, False, name or f"I{dim}")

    @classmethod
    def from_entries(cls, rows: Sequence[Sequence], name: Optional[str] = None) -> "ExactMatrix":
        """Build from a square array of ints / DyadicGaussian values."""
        n, flat = _flatten(rows)
        vals = [DyadicGaussian.coerce(v) for v in flat]
        k = max(v.den_pow for v in vals)
        re = [v.re_num << (k - v.den_pow) for v in vals]
        im = [v.im_num << (k - v.den_pow) for v in vals]
        return cls._raw(n, re, im, k, False, name)

    @classmethod
    def diagonal(cls, values: Sequence, name: Optional[str] = None) -> "ExactMatrix":
        n = len(values)
        rows = [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]
        return cls.from_entries(rows, name)

    @classmethod
    def permutation(cls, images: Sequence[int], name: Optional[str] = None) -> "ExactMatrix":
        """Matrix sending basis vector ``e_j`` to ``e_images[j]``."""
        n = len(images)
        re = [0] * (n * n)
        for j, i in enumerate(images):
            re[i * n + j] = 1
        return cls._raw(n, re, None, 0, False, name)

    def renamed(self, name: Optional[str]) -> "ExactMatrix":
        return ExactMatrix._raw(self.dim, self.re, self.im, self.den_pow, self.root2, name)

    # -- access -----------------------------------------------------------
    def __getitem__(self, ij: tuple[int, int]) -> DyadicGaussian:
        i, j = ij
        return self.scalar_at(i * self.dim + j)

    def row(self, i: int) -> "ExactVector":
        n = self.dim
        im = None if self.im is None else self.im[i * n:(i + 1) * n]
        return ExactVector._raw(self.re[i * n:(i + 1) * n], im, self.den_pow, self.root2)

    def rows_int(self) -> list[list[int]]:
        n = self.dim
        return [list(self.re[i * n:(i + 1) * n]) for i in range(n)]

    def is_identity(self) -> bool:
        return self == ExactMatrix.identity(self.dim)

    def is_unitary(self) -> bool:
        return (self @ self.dagger()).is_identity()

    # -- algebra ----------------------------------------------------------
    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            return mat_mul(self, other)
        if isinstance(other, ExactVector):
            return apply(self, other)
        return NotImplemented

    def __neg__(self):
        im = None if self.im is None else tuple(-v for v in self.im)
        return ExactMatrix._raw(self.dim, tuple(-v for v in self.re), im, self.den_pow, self.root2)

    def scale(self, c) -> "ExactMatrix":
        """Multiply every entry by a dyadic Gaussian scalar."""
        c = DyadicGaussian.coerce(c)
        a, b = c.re_num, c.im_num
        im = self._imag()
        re2 = [a * x - b * y for x, y in zip(self.re, im)]
        im2 = [a * y + b * x for x, y in zip(self.re, im)]
        return ExactMatrix._raw(self.dim, re2, im2, self.den_pow + c.den_pow, self.root2)

    def dagger(self) -> "ExactMatrix":
        return dagger(self)

    def transpose(self) -> "ExactMatrix":
        n = self.dim
        idx = [j * n + i for i in range(n) for j in range(n)]
        im = None if self.im is None else [self.im[k] for k in idx]
        return ExactMatrix._raw(n, [self.re[k] for k in idx], im, self.den_pow, self.root2)

    def conjugate(self) -> "ExactMatrix":
        im = None if self.im is None else [-v for v in self.im]
        return ExactMatrix._raw(self.dim, self.re, im, self.den_pow, self.root2)

    def add(self, other: "ExactMatrix") -> "ExactMatrix":
        _check_dims(self, other)
        if self.root2 != other.root2:
            raise ValueError("cannot add matrices with different sqrt(2) scale")
        k = max(self.den_pow, other.den_pow)
        sa, sb = k - self.den_pow, k - other.den_pow
        re = [(x << sa) + (y << sb) for x, y in zip(self.re, other.re)]
        im = [(x << sa) + (y << sb) for x, y in zip(self._imag(), other._imag())]
        return ExactMatrix._raw(self.dim, re, im, k, self.root2)

    def power(self, e: int) -> "ExactMatrix":
        result = ExactMatrix.identity(self.dim)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<ExactMatrix{label} dim={self.dim} den=2^{self.den_pow}{' /sqrt2' if self.root2 else ''}>"

    def pretty(self) -> str:
        scale = f"1/2^{self.den_pow}" + (" * 1/sqrt2" if self.root2 else "")
        lines = [f"{self.name or 'matrix'} = {scale} *"]
        n = self.dim
        im = self._imag()
        for i in range(n):
            cells = []
            for j in range(n):
                a, b = self.re[i * n + j], im[i * n + j]
                if b == 0:
                    cells.append(f"{a:>3}")
                elif a == 0:
                    cells.append(f"{b:>2}i")
                else:
                    cells.append(f"{a}{b:+}i")
            lines.append("  [" + " ".join(cells) + "]")
        return "\n".join(lines)

    # -- serialization ----------------------------------------------------
    def to_json(self) -> dict:
        doc = {"dim": self.dim, "den_pow": self.den_pow, "re": self.rows_int()}
        if self.im is not None:
            n = self.dim
            doc["im"] = [list(self.im[i * n:(i + 1) * n]) for i in range(n)]
        if self.root2:
            doc["sqrt2_den"] = 1
        if self.name:
            doc["name"] = self.name
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "ExactMatrix":
        n = int(doc["dim"])
        re = doc["re"]
        if len(re) != n:
            raise DimensionMismatch(f"'re' has {len(re)} rows, expected {n}")
        return cls(re, int(doc.get("den_pow", 0)), doc.get("im"),
                   root2=bool(doc.get("sqrt2_den", 0)), name=doc.get("name"))


class ExactVector(_Scaled):
    """Immutable exact column vector, same scaling convention as ExactMatrix."""

    __slots__ = ("dim",)

    def __init__(self, entries: Sequence[int], den_pow: int = 0,
                 im: Optional[Sequence[int]] = None, *, root2: bool = False):
        entries = list(entries)
        if not entries:
            raise DimensionMismatch("vector must be non-empty")
        if im is not None and len(im) != len(entries):
            raise DimensionMismatch("real and imaginary parts differ in length")
        object.__setattr__(self, "dim", len(entries))
        self._set(entries, im, den_pow, root2)

    @classmethod
    def _raw(cls, re, im, den_pow, root2) -> "ExactVector":
        return cls(re, den_pow, im, root2=root2)

    @classmethod
    def basis(cls, dim: int, k: int) -> "ExactVector":
        return cls([1 if i == k else 0 for i in range(dim)])

    @classmethod
    def from_scalars(cls, values: Sequence) -> "ExactVector":
        vals = [DyadicGaussian.coerce(v) for v in values]
        k = max(v.den_pow for v in vals)
        return cls([v.re_num << (k - v.den_pow) for v in vals], k,
                   [v.im_num << (k - v.den_pow) for v in vals])

    def __getitem__(self, k: int) -> DyadicGaussian:
        return self.scalar_at(k)

    def scalars(self) -> list[DyadicGaussian]:
        """Entries as dyadic scalars, dropping a global 1/sqrt(2) factor if present."""
        im = self._imag()
        return [DyadicGaussian(a, b, self.den_pow) for a, b in zip(self.re, im)]

    def sort_key(self):
        return (self.den_pow, self.root2, self.re, self.im or ())

    def inner(self, other: "ExactVector"):
        """Exact <self|other> as a (DyadicGaussian, sqrt2_power) pair."""
        if self.dim != other.dim:
            raise DimensionMismatch("vector dimensions differ")
        a_re, a_im, b_re, b_im = self.re, self._imag(), other.re, other._imag()
        re = sum(x * u + y * v for x, y, u, v in zip(a_re, a_im, b_re, b_im))
        im = sum(x * v - y * u for x, y, u, v in zip(a_re, a_im, b_re, b_im))
        r = int(self.root2) + int(other.root2)
        k = self.den_pow + other.den_pow
        if r == 2:
            k, r = k + 1, 0
        return DyadicGaussian(re, im, k), r

    def to_json(self) -> dict:
        doc = {"dim": self.dim, "den_pow": self.den_pow, "re": list(self.re)}
        if self.im is not None:
            doc["im"] = list(self.im)
        if self.root2:
            doc["sqrt2_den"] = 1
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "ExactVector":
        return cls(doc["re"], int(doc.get("den_pow", 0)), doc.get("im"),
                   root2=bool(doc.get("sqrt2_den", 0)))

    def __repr__(self):
        return f"ExactVector({list(self.to_complex())})"


def _check_dims(a: ExactMatrix, b: ExactMatrix):
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimension mismatch: {a.dim} vs {b.dim}")


def _fold_root2(da: int, ra: bool, db: int, rb: bool) -> tuple[int, bool]:
    k = da + db
    r = int(ra) + int(rb)
    if r == 2:
        return k + 1, False
    return k, bool(r)


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Exact product ``a @ b``."""
    _check_dims(a, b)
    n = a.dim
    k, r = _fold_root2(a.den_pow, a.root2, b.den_pow, b.root2)
    ar = [a.re[i * n:(i + 1) * n] for i in range(n)]
    bc = [b.re[j::n] for j in range(n)]
    if a.im is None and b.im is None:
        re = [sum(x * y for x, y in zip(row, col)) for row in ar for col in bc]
        return ExactMatrix._raw(n, re, None, k, r)
    ai = [a._imag()[i * n:(i + 1) * n] for i in range(n)]
    bi = [b._imag()[j::n] for j in range(n)]
    re, im = [], []
    for i in range(n):
        rr, ri = ar[i], ai[i]
        for j in range(n):
            cr, ci = bc[j], bi[j]
            re.append(sum(x * y for x, y in zip(rr, cr)) - sum(x * y for x, y in zip(ri, ci)))
            im.append(sum(x * y for x, y in zip(rr, ci)) + sum(x * y for x, y in zip(ri, cr)))
    return ExactMatrix._raw(n, re, im, k, r)


def apply(m: ExactMatrix, v: ExactVector) -> ExactVector:
    """Matrix acting on a column vector."""
    if m.dim != v.dim:
        raise DimensionMismatch(f"dimension mismatch: {m.dim} vs {v.dim}")
    n = m.dim
    k, r = _fold_root2(m.den_pow, m.root2, v.den_pow, v.root2)
    rows = [m.re[i * n:(i + 1) * n] for i in range(n)]
    if m.im is None and v.im is None:
        re = [sum(x * y for x, y in zip(row, v.re)) for row in rows]
        return ExactVector._raw(re, None, k, r)
    mi = m._imag()
    irows = [mi[i * n:(i + 1) * n] for i in range(n)]
    vr, vi = v.re, v._imag()
    re = [sum(x * y for x, y in zip(a, vr)) - sum(x * y for x, y in zip(b, vi))
          for a, b in zip(rows, irows)]
    im = [sum(x * y for x, y in zip(a, vi)) + sum(x * y for x, y in zip(b, vr))
          for a, b in zip(rows, irows)]
    return ExactVector._raw(re, im, k, r)


def dagger(a: ExactMatrix) -> ExactMatrix:
    """Conjugate transpose."""
    return a.transpose().conjugate()


def tensor(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Kronecker product; the left factor indexes the most significant qubit."""
    n, m = a.dim, b.dim
    k, r = _fold_root2(a.den_pow, a.root2, b.den_pow, b.root2)
    ai, bi = a._imag(), b._imag()
    N = n * m
    re = [0] * (N * N)
    im = [0] * (N * N)
    for i1 in range(n):
        for j1 in range(n):
            xr, xi = a.re[i1 * n + j1], ai[i1 * n + j1]
            if xr == 0 and xi == 0:
                continue
            for i2 in range(m):
                row = (i1 * m + i2) * N + j1 * m
                for j2 in range(m):
                    yr, yi = b.re[i2 * m + j2], bi[i2 * m + j2]
                    re[row + j2] = xr * yr - xi * yi
                    im[row + j2] = xr * yi + xi * yr
    return ExactMatrix._raw(N, re, im, k, r)


def tensor_all(factors: Iterable[ExactMatrix]) -> ExactMatrix:
    factors = list(factors)
    out = factors[0]
    for f in factors[1:]:
        out = tensor(out, f)
    return out


def load_matrices(path) -> list[ExactMatrix]:
    """Read one matrix object or a JSON array of them."""
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    if isinstance(doc, list):
        return [ExactMatrix.from_json(d) for d in doc]
    return [ExactMatrix.from_json(doc)]


def dump_matrices(mats: Sequence[ExactMatrix], path) -> None:
    payload = [m.to_json() for m in mats]
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload[0] if len(payload) == 1 else payload, fh, indent=1)
