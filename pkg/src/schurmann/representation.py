"""Finite dimensional *-representations of the presented algebras.

A representation is a d x d grid R of n x n matrices over Q(i), with
rho(u[j,k]) = R[j][k] and rho(u*[j,k]) = adjoint(R[j][k]), extended
multiplicatively to words and linearly to elements.  Construction is eager:
every relation of the presentation must evaluate to the zero matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .algebra import Element, Presentation, counit
from .errors import RelationViolation
from .linalg import QMatrix, QVector, kernel_basis
from .scalars import ONE, ZERO, Qi

Grid = tuple[tuple[QMatrix, ...], ...]


@dataclass(frozen=True)
class Representation:
    presentation: Presentation
    n: int
    R: Grid
    R_star: Grid = field(repr=False)
    _cache: dict = field(
        default_factory=dict, compare=False, repr=False, hash=False
    )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Representation)
            and self.presentation == other.presentation
            and self.n == other.n
            and self.R == other.R
        )

    def __hash__(self):
        return hash((self.presentation, self.n, self.R))

    @property
    def d(self) -> int:
        return self.presentation.d

    def image(self, row: int, col: int, star: bool = False) -> QMatrix:
        """rho of the letter u[row,col] (or u*[row,col]); 1-indexed."""
        grid = self.R_star if star else self.R
        return grid[row - 1][col - 1]


def _as_grid(presentation: Presentation, blocks: Sequence[Sequence[QMatrix]], n: int) -> Grid:
    d = presentation.d
    if len(blocks) != d or any(len(row) != d for row in blocks):
        raise ValueError(f"R must be a {d} x {d} grid")
    for row in blocks:
        for m in row:
            if m.shape != (n, n):
                raise ValueError(f"each block must be {n} x {n}, got {m.shape}")
    return tuple(tuple(row) for row in blocks)


def evaluate_rep(rep: Representation, a: Element) -> QMatrix:
    """rho(a) as an n x n matrix; words multiply left to right."""
    if a.d != rep.d:
        raise ValueError(f"ambient size mismatch: element {a.d}, representation {rep.d}")
    out = QMatrix.zero(rep.n, rep.n)
    for w, c in a.terms.items():
        out = out + _rho_word(rep, w).scale(c)
    return out


def _rho_word(rep: Representation, w) -> QMatrix:
    cache = rep._cache
    m = cache.get(w)
    if m is not None:
        return m
    if not w:
        m = QMatrix.identity(rep.n)
    else:
        m = rep.image(*w[0]) @ _rho_word(rep, w[1:])
    cache[w] = m
    return m


def representation(
    presentation: Presentation, blocks: Sequence[Sequence[QMatrix]], n: int | None = None
) -> Representation:
    """Validated representation; raises RelationViolation listing failures."""
    if n is None:
        n = blocks[0][0].rows if blocks and blocks[0] else 0
    grid = _as_grid(presentation, blocks, n)
    star = tuple(tuple(m.adjoint() for m in row) for row in grid)
    rep = Representation(presentation, n, grid, star)
    violations = [
        (lbl, val)
        for lbl, r in presentation.relations
        if not (val := evaluate_rep(rep, r)).is_zero()
    ]
    if violations:
        raise RelationViolation("representation", violations)
    return rep


def counit_rep(presentation: Presentation, n: int = 1) -> Representation:
    """The Gaussian representation rho = counit * id on a carrier of dimension n."""
    d = presentation.d
    eye = QMatrix.identity(n)
    zero = QMatrix.zero(n, n)
    return representation(
        presentation,
        [[eye if j == k else zero for k in range(d)] for j in range(d)],
        n,
    )


def sign_rep(presentation: Presentation, n: int = 1) -> Representation:
    """rho(u[j,k]) = -delta_jk id; valid on the unitarity-only presentations."""
    d = presentation.d
    eye = QMatrix.identity(n).scale(Qi(-1))
    zero = QMatrix.zero(n, n)
    return representation(
        presentation,
        [[eye if j == k else zero for k in range(d)] for j in range(d)],
        n,
    )


def direct_sum_rep(r1: Representation, r2: Representation) -> Representation:
    if r1.presentation != r2.presentation:
        raise ValueError("direct sum requires the same presentation")
    d = r1.d
    blocks = [
        [QMatrix.block_diag(r1.R[j][k], r2.R[j][k]) for k in range(d)]
        for j in range(d)
    ]
    return representation(r1.presentation, blocks, r1.n + r2.n)


@dataclass(frozen=True)
class GeneratorSubstitution:
    """A unital *-morphism candidate source -> target, given on generators.

    images[j][k] is the target element replacing u[j,k]; starred letters map
    to the starred image.  Counit compatibility counit(images[j][k]) = delta_jk
    is enforced at construction; relation compatibility is checked only on
    the pulled back objects.
    """

    source: Presentation
    target: Presentation
    images: tuple[tuple[Element, ...], ...]

    def __post_init__(self):
        d = self.source.d
        if len(self.images) != d or any(len(row) != d for row in self.images):
            raise ValueError(f"images must be a {d} x {d} grid")
        for j in range(d):
            for k in range(d):
                img = self.images[j][k]
                if img.d != self.target.d:
                    raise ValueError("image elements must live over the target size")
                expected = ONE if j == k else ZERO
                if counit(img) != expected:
                    raise ValueError(
                        f"counit(images[{j + 1}][{k + 1}]) must be {expected!r}"
                    )

    def apply(self, a: Element) -> Element:
        """Substitute generators in a source element."""
        if a.d != self.source.d:
            raise ValueError("element does not live over the source size")
        out = Element.zero(self.target.d)
        for w, c in a.terms.items():
            prod = Element.one(self.target.d)
            for l in w:
                img = self.images[l.row - 1][l.col - 1]
                prod = prod * (img.star() if l.star else img)
            out = out + prod.scale(c)
        return out


def pullback_rep(rep: Representation, sub: GeneratorSubstitution) -> Representation:
    """The representation rho∘pi on the source presentation; validated eagerly."""
    if rep.presentation != sub.target:
        raise ValueError("representation does not live over the substitution target")
    d = sub.source.d
    blocks = [
        [evaluate_rep(rep, sub.images[j][k]) for k in range(d)] for j in range(d)
    ]
    return representation(sub.source, blocks, rep.n)


def gaussian_subspace(rep: Representation) -> list[QVector]:
    """Exact basis of {v : rho(a) v = counit(a) v for all a}.

    Equals the joint kernel of R[j][k] - delta_jk and adjoint(R[j][k]) - delta_jk
    over all letters.
    """
    n = rep.n
    eye = QMatrix.identity(n)
    rows: list = []
    for j in range(rep.d):
        for k in range(rep.d):
            delta = eye if j == k else QMatrix.zero(n, n)
            for m in (rep.R[j][k] - delta, rep.R_star[j][k] - delta):
                rows.extend(m.data)
    if not rows:
        return kernel_basis(QMatrix.identity(n) - QMatrix.identity(n))
    return kernel_basis(QMatrix(rows, cols=n))
