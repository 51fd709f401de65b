"""Cyclic tridiagonal symmetric matrices: block structure, low rank, reconstruction.

A :class:`CycleMatrix` stores the diagonal ``a_1..a_n`` and the cycle
entries ``b_1..b_n`` (``b_i`` at (i, i+1), ``b_n`` at (n, 1)). Indices in
the public API are 1-based, matching the cycle's vertex labels.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .arith import as_fraction
from .dihedral import Dihedral
from .errors import VerificationError
from .linalg import clear_denominators, determinant, nullspace, rank_exact

NUM_RANGE = (-20, 20)
DEN_RANGE = (1, 9)


@dataclass(frozen=True)
class CycleMatrix:
    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]

    def __post_init__(self):
        a = tuple(as_fraction(x) for x in self.a)
        b = tuple(as_fraction(x) for x in self.b)
        if len(a) < 3 or len(a) != len(b):
            raise ValueError(f"need n >= 3 diagonal and n cycle entries, got {len(a)} and {len(b)}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def n(self) -> int:
        return len(self.a)

    def to_dense(self) -> list[list[Fraction]]:
        n = self.n
        m = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            m[i][i] = self.a[i]
        for i in range(n):
            j = (i + 1) % n
            # For n = 3 every pair is adjacent; each b still lands on its own pair.
            m[i][j] = m[j][i] = self.b[i]
        return m

    @classmethod
    def from_dense(cls, m: Sequence[Sequence]) -> CycleMatrix:
        n = len(m)
        for i in range(n):
            for j in range(n):
                if m[i][j] != m[j][i]:
                    raise ValueError("matrix is not symmetric")
                if 1 < abs(i - j) < n - 1 and m[i][j] != 0:
                    raise ValueError(f"entry ({i + 1},{j + 1}) lies off the cycle support")
        return cls(tuple(m[i][i] for i in range(n)), tuple(m[i][(i + 1) % n] for i in range(n)))

    def zeros(self) -> list[int]:
        """Z(A): the indices i with b_i = 0."""
        return [i + 1 for i, x in enumerate(self.b) if x == 0]

    def rank(self) -> int:
        return rank_exact(self.to_dense())

    def act(self, g: Dihedral) -> CycleMatrix:
        """The matrix with a'_{g(i)} = a_i and b'_{g(edge i)} = b_i."""
        if g.n != self.n:
            raise ValueError("dihedral element acts on a cycle of a different length")
        a = [Fraction(0)] * self.n
        b = [Fraction(0)] * self.n
        for i in range(1, self.n + 1):
            a[g.vertex(i) - 1] = self.a[i - 1]
            b[g.edge(i) - 1] = self.b[i - 1]
        return CycleMatrix(tuple(a), tuple(b))


def submatrix(m: Sequence[Sequence], idx: Sequence[int]) -> list[list]:
    """Rows and columns ``idx`` (1-based, in the given order)."""
    return [[m[i - 1][j - 1] for j in idx] for i in idx]


@dataclass
class Block:
    indices: tuple[int, ...]
    matrix: list[list[Fraction]]
    rank: int

    @property
    def size(self) -> int:
        return len(self.indices)

    @property
    def deficient(self) -> bool:
        return self.rank == self.size - 1


@dataclass
class BlockDecomposition:
    zeros: list[int]
    blocks: list[Block]

    @property
    def sizes(self) -> list[int]:
        return [blk.size for blk in self.blocks]

    @property
    def type(self) -> list[int] | None:
        """Block sizes if every block has rank one less than its size, else None."""
        return self.sizes if all(blk.deficient for blk in self.blocks) else None


def _blocks_between(dense, cuts: Sequence[int], n: int) -> list[Block]:
    blocks = []
    for prev, cur in zip([cuts[-1]] + list(cuts[:-1]), cuts):
        size = (cur - prev) % n or n
        idx = tuple((prev + t) % n + 1 for t in range(size))
        sub = submatrix(dense, idx)
        blocks.append(Block(idx, sub, rank_exact(sub)))
    return blocks


def decompose(A: CycleMatrix) -> BlockDecomposition:
    """Split A into the tridiagonal blocks between consecutive zeros of b.

    Block B_i covers z_{i-1}+1, ..., z_i; B_1 wraps from z_k+1 through n to z_1.
    """
    z = A.zeros()
    if not z:
        raise ValueError("matrix has no zero cycle entry, so it is not in cyclic-block form")
    return BlockDecomposition(z, _blocks_between(A.to_dense(), z, A.n))


@dataclass
class BlockRankReport:
    ranks: list[int]
    sizes: list[int]
    rank: int


def check_block_rank(A: CycleMatrix) -> BlockRankReport:
    """Each block has rank |B| or |B|-1, and rank A is the sum of block ranks."""
    d = decompose(A)
    total = A.rank()
    for blk in d.blocks:
        if blk.rank not in (blk.size, blk.size - 1):
            raise VerificationError(f"block {blk.indices} has rank {blk.rank}, size {blk.size}")
    if total != sum(blk.rank for blk in d.blocks):
        raise VerificationError(f"rank {total} differs from the sum of block ranks {[b.rank for b in d.blocks]}")
    return BlockRankReport([b.rank for b in d.blocks], d.sizes, total)


def lowrank_minor(A: CycleMatrix) -> Fraction:
    """Minor of A without its first two rows and last two columns."""
    if A.n < 4:
        raise ValueError("the minor needs n >= 4")
    dense = A.to_dense()
    return determinant([row[: A.n - 2] for row in dense[2:]])


def lowrank_minor_product(A: CycleMatrix) -> Fraction:
    """b_2 b_3 ... b_{n-2} b_n, which equals the minor up to sign."""
    prod = A.b[-1]
    for x in A.b[1 : A.n - 2]:
        prod *= x
    return prod


def check_lowrank_matrix(A: CycleMatrix) -> int:
    """For A with every b_i nonzero: the minor is +-b_2..b_{n-2} b_n and rank A >= n - 2."""
    if A.zeros():
        raise ValueError("the contrapositive check needs every b_i nonzero")
    minor, prod = lowrank_minor(A), lowrank_minor_product(A)
    if minor not in (prod, -prod):
        raise VerificationError(f"minor {minor} is not +-{prod}")
    rank = A.rank()
    if rank < A.n - 2:
        raise VerificationError(f"rank {rank} < n - 2 with all b nonzero")
    return rank


@dataclass
class SweepReport:
    n: int
    samples: int
    seed: int
    failures: list[tuple[int, str]] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return self.samples - len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures


def sample_rng(seed: int, index: int) -> random.Random:
    """Independent stream for sample ``index`` of a sweep seeded with ``seed``."""
    return random.Random(seed * 1000003 + index)


def random_rational(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        x = Fraction(rng.randint(*NUM_RANGE), rng.randint(*DEN_RANGE))
        if x or not nonzero:
            return x


def random_generic(n: int, rng: random.Random, singular: bool = False) -> CycleMatrix:
    """All b_i nonzero; if ``singular``, a_n is solved for so that det A = 0."""
    while True:
        a = [random_rational(rng) for _ in range(n)]
        b = [random_rational(rng, nonzero=True) for _ in range(n)]
        if not singular:
            return CycleMatrix(tuple(a), tuple(b))
        # det is affine in a_n: det = a_n * C + D.
        a[-1] = Fraction(0)
        dense = CycleMatrix(tuple(a), tuple(b)).to_dense()
        c = determinant([row[:-1] for row in dense[:-1]])
        if c == 0:
            continue
        a[-1] = -determinant(dense) / c
        return CycleMatrix(tuple(a), tuple(b))


def _tridiagonal_dets(diag: Sequence[Fraction], off: Sequence[Fraction]) -> list[Fraction]:
    dets = [Fraction(1), diag[0]] if diag else [Fraction(1)]
    for k in range(1, len(diag)):
        dets.append(diag[k] * dets[-1] - off[k - 1] ** 2 * dets[-2])
    return dets


def random_block_form(n: int, rng: random.Random, singular: bool = True) -> CycleMatrix:
    """Random matrix with at least one zero b_i; some blocks are made rank deficient.

    A deficient block gets its last diagonal entry
    a_t = b_{t-1}^2 det(B_{t-2}) / det(B_{t-1}), with a_t = 0 for t = 1. With
    ``singular`` at least one block is deficient.
    """
    while True:
        k = rng.randint(1, n)
        zeros = sorted(rng.sample(range(1, n + 1), k))
        a = [random_rational(rng) for _ in range(n)]
        b = [Fraction(0) if i + 1 in zeros else random_rational(rng, nonzero=True) for i in range(n)]
        cuts = zeros
        spans = []
        for prev, cur in zip([cuts[-1]] + cuts[:-1], cuts):
            size = (cur - prev) % n or n
            spans.append([(prev + t) % n + 1 for t in range(size)])
        make = [rng.random() < 0.5 for _ in spans]
        if singular and not any(make):
            make[rng.randrange(len(spans))] = True
        ok = True
        for idx, deficient in zip(spans, make):
            if not deficient:
                continue
            t = len(idx)
            if t == 1:
                a[idx[0] - 1] = Fraction(0)
                continue
            diag = [a[i - 1] for i in idx[:-1]]
            off = [b[i - 1] for i in idx[:-1]]
            dets = _tridiagonal_dets(diag, off)
            if dets[t - 1] == 0:
                ok = False
                break
            a[idx[-1] - 1] = off[-1] ** 2 * dets[t - 2] / dets[t - 1]
        if ok:
            return CycleMatrix(tuple(a), tuple(b))


def random_subspace(n: int, rng: random.Random) -> list[list[Fraction]]:
    """n - 2 random rational vectors in Q^n (a basis with probability close to 1)."""
    return [[random_rational(rng) for _ in range(n)] for _ in range(n - 2)]


# --------------------------------------------------------------------------
# block-form normalization


@dataclass
class NormalForm:
    sigma: Dihedral
    type: list[int]
    matrix: CycleMatrix


def normalize_block_form(A: CycleMatrix) -> NormalForm:
    """Rotate so that b_n = 0, then merge full-rank blocks into deficient blocks.

    Blocks B_j of full rank with j > 1 are merged into B_{j-1}, scanning j
    from the right; a full-rank B_1 is merged with B_2. The result has every
    block of rank one less than its size.
    """
    z = A.zeros()
    if not z:
        raise ValueError("matrix is not in cyclic-block form")
    n = A.n
    dense = A.to_dense()
    if rank_exact(dense) == n:
        raise ValueError("matrix is regular; block form needs a singular matrix")
    sigma = Dihedral(n, n - z[-1])
    B = A.act(sigma)
    d = decompose(B)
    blocks = [[list(blk.indices), blk.rank] for blk in d.blocks]
    dense_b = B.to_dense()

    def merge(i: int):
        idx = blocks[i][0] + blocks[i + 1][0]
        blocks[i : i + 2] = [[idx, rank_exact(submatrix(dense_b, idx))]]

    while True:
        full = [i for i, (idx, rk) in enumerate(blocks) if rk == len(idx)]
        if not full:
            break
        if len(blocks) == 1:
            raise VerificationError("merging ended in a single full-rank block")
        j = full[-1]
        merge(j - 1 if j > 0 else 0)
    return NormalForm(sigma, [len(idx) for idx, _ in blocks], B)


def check_normal_form(A: CycleMatrix, nf: NormalForm) -> None:
    """sigma(A) splits into consecutive blocks of the sizes T, each of rank t - 1."""
    B = A.act(nf.sigma)
    n = A.n
    if B != nf.matrix or sum(nf.type) != n:
        raise VerificationError("normal form does not describe sigma(A)")
    if B.b[-1] != 0:
        raise VerificationError("normal form must have b_n = 0")
    dense = B.to_dense()
    start = 1
    for t in nf.type:
        end = start + t - 1
        if B.b[end - 1] != 0:
            raise VerificationError(f"entry b_{end} joins two blocks")
        rk = rank_exact(submatrix(dense, range(start, end + 1)))
        if rk != t - 1:
            raise VerificationError(f"block {start}..{end} has rank {rk}, expected {t - 1}")
        start = end + 1
    rank = rank_exact(dense)
    if len(nf.type) != n - rank:
        raise VerificationError(f"{len(nf.type)} blocks but n - rank = {n - rank}")


# --------------------------------------------------------------------------
# reconstruction from the image


def _stack_rank(rows) -> int:
    return rank_exact([list(r) for r in rows])


def check_image_precondition(U: Sequence[Sequence]) -> None:
    """U has dimension n - 2 and meets no coordinate plane span(e_i, e_j) nontrivially."""
    n = len(U[0]) if U else 0
    if n < 3 or len(U) != n - 2 or any(len(u) != n for u in U):
        raise ValueError("expected n - 2 vectors in Q^n with n >= 3")
    ints = clear_denominators(U)
    if rank_exact(ints) != n - 2:
        raise ValueError("vectors do not span an (n-2)-dimensional subspace")
    # U meets span(e_i, e_j) only in 0 iff deleting columns i, j keeps full rank.
    for i in range(n):
        for j in range(i + 1, n):
            if rank_exact([[x for k, x in enumerate(u) if k != i and k != j] for u in ints]) != n - 2:
                raise ValueError(f"subspace contains a vector supported on coordinates {i + 1}, {j + 1}")


def reconstruct_from_image(U: Sequence[Sequence]) -> CycleMatrix:
    """The matrix of the cycle space whose image is U, normalized by a_11 = 1.

    Row k is the unique (up to scale) vector of U vanishing off k-1, k, k+1.
    Row 1 is scaled to a_11 = 1 and row k to a_{k,k-1} = a_{k-1,k}.
    """
    U = [[as_fraction(x) for x in u] for u in U]
    check_image_precondition(U)
    n = len(U[0])
    rows = []
    for k in range(n):
        allowed = {(k - 1) % n, k, (k + 1) % n}
        eqs = [[u[j] for u in U] for j in range(n) if j not in allowed]
        ns = nullspace(eqs, n_cols=n - 2)
        if len(ns) != 1:
            raise ValueError(f"row {k + 1} is not determined up to scale ({len(ns)} free parameters)")
        row = [sum((c * u[j] for c, u in zip(ns[0], U)), Fraction(0)) for j in range(n)]
        if k == 0:
            pivot, target = row[0], Fraction(1)
        else:
            pivot, target = row[k - 1], rows[k - 1][k]
        if pivot == 0:
            raise ValueError(f"row {k + 1} has a zero normalizing entry")
        rows.append([x * target / pivot for x in row])
    out = CycleMatrix.from_dense(rows) if _symmetric(rows) else None
    if out is None:
        raise VerificationError("reconstructed matrix is not symmetric (a_1n != a_n1)")
    check_reconstruction(U, out)
    return out


def _symmetric(m) -> bool:
    n = len(m)
    return all(m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n))


def check_reconstruction(U: Sequence[Sequence], A: CycleMatrix) -> None:
    """Symmetry, support, rank n - 2 and Im A = U."""
    dense = A.to_dense()
    n = A.n
    if dense[0][n - 1] != dense[n - 1][0] or not _symmetric(dense):
        raise VerificationError("reconstruction is not symmetric")
    CycleMatrix.from_dense(dense)
    if rank_exact(dense) != n - 2:
        raise VerificationError(f"reconstruction has rank {rank_exact(dense)}, expected {n - 2}")
    if _stack_rank(list(U) + dense) != n - 2:
        raise VerificationError("image of the reconstruction is not contained in U")
    if A.a[0] != 1:
        raise VerificationError("reconstruction is not normalized to a_11 = 1")


def image_basis(A: CycleMatrix) -> list[list[Fraction]]:
    """A basis of the column space of A (its independent rows, by symmetry)."""
    basis: list[list[Fraction]] = []
    for row in A.to_dense():
        if _stack_rank(basis + [row]) > len(basis):
            basis.append(row)
    return basis


# --------------------------------------------------------------------------
# sweeps


def _sweep(n: int, samples: int, seed: int, one) -> SweepReport:
    report = SweepReport(n, samples, seed)
    for index in range(samples):
        try:
            one(sample_rng(seed, index))
        except (VerificationError, ValueError) as exc:
            report.failures.append((index, str(exc)))
    return report


def sweep_block_rank(n: int, samples: int, seed: int) -> SweepReport:
    return _sweep(n, samples, seed, lambda rng: check_block_rank(random_block_form(n, rng, singular=rng.random() < 0.5)))


def check_lowrank_contrapositive(n: int, samples: int, seed: int) -> SweepReport:
    """Random matrices with every b_i nonzero, a third of them singular, all of rank >= n - 2."""
    if n < 4:
        raise ValueError("the contrapositive check needs n >= 4")
    return _sweep(n, samples, seed, lambda rng: check_lowrank_matrix(random_generic(n, rng, singular=rng.random() < 1 / 3)))


def sweep_normal_form(n: int, samples: int, seed: int) -> SweepReport:
    def one(rng):
        A = random_block_form(n, rng, singular=True)
        check_normal_form(A, normalize_block_form(A))

    return _sweep(n, samples, seed, one)


def sweep_reconstruct(n: int, samples: int, seed: int) -> SweepReport:
    def one(rng):
        while True:
            U = random_subspace(n, rng)
            try:
                check_image_precondition(U)
                break
            except ValueError:
                continue
        A = reconstruct_from_image(U)
        # Feeding the image back must give the same matrix.
        if reconstruct_from_image(image_basis(A)) != A:
            raise VerificationError("reconstruction is not a fixed point on its own image")

    return _sweep(n, samples, seed, one)
