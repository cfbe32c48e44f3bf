"""rho-counit cocycles: linear maps eta with eta(ab) = rho(a)eta(b) + eta(a)counit(b).

A cocycle is stored by its letter values, the grids V[j][k] = eta(u[j,k]) and
W[j][k] = eta(u*[j,k]) of vectors in the carrier of rho.  Constructors
validate eta(r) = 0 on every relation of the presentation; vanishing on the
generating relations forces vanishing on the whole *-ideal, so validated
cocycles descend to the quotient.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import Element, Letter, Presentation, antipode_element, letters
from .errors import RelationViolation
from .linalg import QMatrix, QVector, inner_product, kernel_basis
from .representation import (
    GeneratorSubstitution,
    Representation,
    counit_rep,
    direct_sum_rep,
    pullback_rep,
)
from .scalars import ZERO, Qi, rational

VGrid = tuple[tuple[QVector, ...], ...]


@dataclass(frozen=True)
class Cocycle:
    rep: Representation
    V: VGrid
    W: VGrid
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Cocycle)
            and self.rep == other.rep
            and self.V == other.V
            and self.W == other.W
        )

    def __hash__(self):
        return hash((self.rep, self.V, self.W))

    @property
    def presentation(self) -> Presentation:
        return self.rep.presentation

    @property
    def d(self) -> int:
        return self.rep.d

    @property
    def n(self) -> int:
        return self.rep.n

    def letter_value(self, l: Letter) -> QVector:
        grid = self.W if l.star else self.V
        return grid[l.row - 1][l.col - 1]


def _as_vgrid(d: int, n: int, grid: Sequence[Sequence[QVector]], name: str) -> VGrid:
    if len(grid) != d or any(len(row) != d for row in grid):
        raise ValueError(f"{name} must be a {d} x {d} grid of vectors")
    for row in grid:
        for v in row:
            if len(v) != n:
                raise ValueError(f"{name} entries must have length {n}")
    return tuple(tuple(row) for row in grid)


def evaluate_cocycle(eta: Cocycle, a: Element) -> QVector:
    """eta(a); words peel from the leftmost letter."""
    if a.d != eta.d:
        raise ValueError(f"ambient size mismatch: element {a.d}, cocycle {eta.d}")
    out = QVector.zero(eta.n)
    for w, c in a.terms.items():
        out = out + _eta_word(eta, w).scale(c)
    return out


def _eta_word(eta: Cocycle, w) -> QVector:
    cache = eta._cache
    v = cache.get(w)
    if v is not None:
        return v
    if not w:
        v = QVector.zero(eta.n)
    else:
        head, tail = w[0], w[1:]
        v = eta.rep.image(*head).apply(_eta_word(eta, tail))
        if all(l.row == l.col for l in tail):
            v = v + eta.letter_value(head)
    cache[w] = v
    return v


def cocycle_general(
    rep: Representation, V: Sequence[Sequence[QVector]], W: Sequence[Sequence[QVector]]
) -> Cocycle:
    """Validated cocycle from both letter-value grids."""
    d, n = rep.d, rep.n
    eta = Cocycle(rep, _as_vgrid(d, n, V, "V"), _as_vgrid(d, n, W, "W"))
    violations = [
        (lbl, val)
        for lbl, r in rep.presentation.relations
        if not (val := evaluate_cocycle(eta, r)).is_zero()
    ]
    if violations:
        raise RelationViolation("cocycle", violations)
    return eta


def _block_sums(rep: Representation, V: VGrid):
    """(R*V)^t and Rbar V^t with operator blocks acting on the value vectors.

    (R*V)_jk = sum_p adjoint(R[p][j]) V[p][k]; the bar is the entrywise
    adjoint of the block, matching the operator-valued conjugate matrix.
    """
    d = rep.d
    rstar_v_t = [
        [
            _sum_vectors(
                rep.n,
                (rep.R_star[p][k].apply(V[p][j]) for p in range(d)),
            )
            for k in range(d)
        ]
        for j in range(d)
    ]
    rbar_v_t = [
        [
            _sum_vectors(
                rep.n,
                (rep.R_star[j][p].apply(V[k][p]) for p in range(d)),
            )
            for k in range(d)
        ]
        for j in range(d)
    ]
    return rstar_v_t, rbar_v_t


def _sum_vectors(n: int, vs) -> QVector:
    out = QVector.zero(n)
    for v in vs:
        out = out + v
    return out


def cocycle_unitary_from_V(rep: Representation, V: Sequence[Sequence[QVector]]) -> Cocycle:
    """Fast path for u_plus: V extends to a cocycle iff (R*V)^t = Rbar V^t,
    and then W = -Rbar V^t."""
    if rep.presentation.kind != "u_plus":
        raise ValueError("cocycle_unitary_from_V requires a u_plus presentation")
    grid = _as_vgrid(rep.d, rep.n, V, "V")
    rstar_v_t, rbar_v_t = _block_sums(rep, grid)
    bad = [
        (f"(R*V)t vs RbarVt at ({j + 1},{k + 1})", rstar_v_t[j][k] - rbar_v_t[j][k])
        for j in range(rep.d)
        for k in range(rep.d)
        if rstar_v_t[j][k] != rbar_v_t[j][k]
    ]
    if bad:
        raise RelationViolation("unitary cocycle condition", bad)
    W = [[-rbar_v_t[j][k] for k in range(rep.d)] for j in range(rep.d)]
    return cocycle_general(rep, grid, W)


def cocycle_orth_from_V(rep: Representation, V: Sequence[Sequence[QVector]]) -> Cocycle:
    """Fast path for o_plus: requires (R*V)^t = Rbar V^t = -V, and W = V."""
    if rep.presentation.kind != "o_plus":
        raise ValueError("cocycle_orth_from_V requires an o_plus presentation")
    grid = _as_vgrid(rep.d, rep.n, V, "V")
    rstar_v_t, rbar_v_t = _block_sums(rep, grid)
    bad = []
    for j in range(rep.d):
        for k in range(rep.d):
            if rstar_v_t[j][k] != rbar_v_t[j][k]:
                bad.append(
                    (f"(R*V)t vs RbarVt at ({j + 1},{k + 1})", rstar_v_t[j][k])
                )
            if rbar_v_t[j][k] != -grid[j][k]:
                bad.append((f"RbarVt vs -V at ({j + 1},{k + 1})", rbar_v_t[j][k]))
    if bad:
        raise RelationViolation("orthogonal cocycle condition", bad)
    return cocycle_general(rep, grid, grid)


def gaussian_cocycle(presentation: Presentation, V: Sequence[Sequence[QVector]]) -> Cocycle:
    """Cocycle for rho = counit * id with W = -V^t, validated against all relations."""
    if not V or not V[0]:
        raise ValueError("V must be a nonempty grid")
    if not hasattr(V[0][0], "__len__"):
        raise TypeError(
            "V entries must be vectors; for a grid of scalars use scalar_gaussian_cocycle"
        )
    n = len(V[0][0])
    rep = counit_rep(presentation, n)
    d = presentation.d
    grid = _as_vgrid(d, n, V, "V")
    W = [[-grid[k][j] for k in range(d)] for j in range(d)]
    return cocycle_general(rep, grid, W)


def scalar_gaussian_cocycle(presentation: Presentation, M: QMatrix) -> Cocycle:
    """Gaussian cocycle with one-dimensional carrier from a d x d scalar matrix."""
    d = presentation.d
    return gaussian_cocycle(
        presentation,
        [[QVector([M[j][k]]) for k in range(d)] for j in range(d)],
    )


@dataclass(frozen=True)
class BMatrices:
    """b[j][k] = sum_p <eta(u[j,p]), eta(u[k,p])>, b_tilde likewise on starred letters."""

    b: QMatrix
    b_tilde: QMatrix


def b_matrices(eta: Cocycle) -> BMatrices:
    d = eta.d
    b = QMatrix(
        [
            [
                _qi_sum(inner_product(eta.V[j][p], eta.V[k][p]) for p in range(d))
                for k in range(d)
            ]
            for j in range(d)
        ],
        cols=d,
    )
    bt = QMatrix(
        [
            [
                _qi_sum(inner_product(eta.W[j][p], eta.W[k][p]) for p in range(d))
                for k in range(d)
            ]
            for j in range(d)
        ],
        cols=d,
    )
    if not (b.is_hermitian() and bt.is_hermitian()):
        raise ArithmeticError("b matrices must be Hermitian")
    return BMatrices(b, bt)


def _qi_sum(vals) -> Qi:
    acc = ZERO
    for v in vals:
        acc = acc + v
    return acc


def gram_vvstar(V: Sequence[Sequence[QVector]]) -> QMatrix:
    """(V V*)_jk = sum_p <V[k][p], V[j][p]>; for scalar grids this is
    sum_p V[j][p] conj(V[k][p])."""
    d = len(V)
    return QMatrix(
        [
            [
                _qi_sum(inner_product(V[k][p], V[j][p]) for p in range(d))
                for k in range(d)
            ]
            for j in range(d)
        ],
        cols=d,
    )


def direct_sum_cocycle(e1: Cocycle, e2: Cocycle) -> Cocycle:
    if e1.presentation != e2.presentation:
        raise ValueError("direct sum requires the same presentation")
    rep = direct_sum_rep(e1.rep, e2.rep)
    d = e1.d
    V = [[e1.V[j][k].concat(e2.V[j][k]) for k in range(d)] for j in range(d)]
    W = [[e1.W[j][k].concat(e2.W[j][k]) for k in range(d)] for j in range(d)]
    return cocycle_general(rep, V, W)


def pullback_cocycle(eta: Cocycle, sub: GeneratorSubstitution) -> Cocycle:
    """eta∘pi along a generator substitution; validated on the source relations."""
    if eta.presentation != sub.target:
        raise ValueError("cocycle does not live over the substitution target")
    rep = pullback_rep(eta.rep, sub)
    d = sub.source.d
    V = [
        [evaluate_cocycle(eta, sub.images[j][k]) for k in range(d)] for j in range(d)
    ]
    W = [
        [evaluate_cocycle(eta, sub.images[j][k].star()) for k in range(d)]
        for j in range(d)
    ]
    return cocycle_general(rep, V, W)


def reality_pair(eta: Cocycle, a: Element, b: Element) -> tuple[Qi, Qi]:
    """The two sides <eta(a), eta(b)> and <eta(S(b)*), eta(S(a*))> of the
    reality condition at (a, b).  Requires a Kac presentation."""
    if not eta.presentation.kac:
        raise ValueError("reality check requires a Kac presentation")
    lhs = inner_product(evaluate_cocycle(eta, a), evaluate_cocycle(eta, b))
    rhs = inner_product(
        evaluate_cocycle(eta, antipode_element(b).star()),
        evaluate_cocycle(eta, antipode_element(a.star())),
    )
    return lhs, rhs


def is_real_cocycle(
    eta: Cocycle,
    sample_words: Sequence[Element] | None = None,
    max_word_len: int = 3,
    seed: int = 0,
    samples: int = 12,
):
    """Check <eta(a), eta(b)> = <eta(S(b)*), eta(S(a*))> on letters and samples.

    Requires a Kac presentation (the antipode must exist).  Returns
    (True, None) or (False, (a, b, lhs, rhs)) with the first failing pair.
    """
    pool: list[Element] = [
        Element.generator(eta.d, l.row, l.col, l.star) for l in letters(eta.d)
    ]
    if sample_words is None:
        rng = random.Random(seed)
        alpha = letters(eta.d)
        for _ in range(samples):
            n = rng.randint(1, max_word_len)
            w = tuple(rng.choice(alpha) for _ in range(n))
            pool.append(Element.from_word(eta.d, w))
    else:
        pool.extend(sample_words)
    for a in pool:
        for b in pool:
            lhs, rhs = reality_pair(eta, a, b)
            if lhs != rhs:
                return False, (a, b, lhs, rhs)
    return True, None


@dataclass(frozen=True)
class CocycleSpace:
    """Exact basis of the space of (V, W) letter-value pairs for a fixed rho."""

    rep: Representation
    basis: tuple[Cocycle, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def random_element(self, rng: random.Random) -> Cocycle:
        """Random Q(i)-combination of the basis with small rational coefficients."""
        d, n = self.rep.d, self.rep.n
        V = [[QVector.zero(n) for _ in range(d)] for _ in range(d)]
        W = [[QVector.zero(n) for _ in range(d)] for _ in range(d)]
        for eta in self.basis:
            c = Qi(
                rational(rng.randint(-3, 3)) / rng.randint(1, 3),
                rational(rng.randint(-3, 3)) / rng.randint(1, 3),
            )
            for j in range(d):
                for k in range(d):
                    V[j][k] = V[j][k] + eta.V[j][k].scale(c)
                    W[j][k] = W[j][k] + eta.W[j][k].scale(c)
        return cocycle_general(self.rep, V, W)


def solve_cocycles(rep: Representation) -> CocycleSpace:
    """All cocycles for rho, by exact kernel computation in the letter values.

    For fixed rho the map (V, W) -> (eta(r))_r is linear; the solution space
    is the kernel of the stacked coefficient matrix over Q(i).
    """
    d, n = rep.d, rep.n
    nvars = 2 * d * d * n

    def var_index(star: bool, j: int, k: int, coord: int) -> int:
        base = (d * d * n) if star else 0
        return base + ((j - 1) * d + (k - 1)) * n + coord

    rows: list[list[Qi]] = []
    for _, r in rep.presentation.relations:
        rel_rows = [[ZERO] * nvars for _ in range(n)]
        touched = False
        for w, c in r.terms.items():
            prefix = QMatrix.identity(n)
            for m, l in enumerate(w):
                # counit of the suffix after position m
                if all(x.row == x.col for x in w[m + 1 :]):
                    for e in range(n):
                        row = rel_rows[e]
                        for coord in range(n):
                            idx = var_index(l.star, l.row, l.col, coord)
                            row[idx] = row[idx] + c * prefix[e][coord]
                    touched = True
                prefix = prefix @ rep.image(*l)
        if touched:
            rows.extend(rel_rows)
    matrix = QMatrix(rows, cols=nvars) if rows else QMatrix.zero(0, nvars)
    basis = []
    for vec in kernel_basis(matrix):
        V = [
            [
                QVector([vec[var_index(False, j, k, c)] for c in range(n)])
                for k in range(1, d + 1)
            ]
            for j in range(1, d + 1)
        ]
        W = [
            [
                QVector([vec[var_index(True, j, k, c)] for c in range(n)])
                for k in range(1, d + 1)
            ]
            for j in range(1, d + 1)
        ]
        basis.append(cocycle_general(rep, V, W))
    return CocycleSpace(rep, tuple(basis))
