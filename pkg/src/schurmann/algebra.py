"""Free *-algebra on d x d matrix generators and the presentation catalogue.

Elements are finitely supported linear combinations of words in the letters
u[j,k] and u*[j,k] (1-indexed).  A presentation is a *-closed list of labelled
relation elements r with counit(r) = 0; the catalogue covers the free unitary
algebra K<d>, the universal unitary algebras U_d+ and U_Q+ (diagonal Q > 0),
the free orthogonal algebras O_d+ and O_F+ (F Fbar = +-I), and the twisted
determinant algebras SU_q(d) with 0 < q < 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .linalg import QMatrix
from .scalars import ONE, ZERO, Qi, Rational, rational


class Letter(NamedTuple):
    row: int
    col: int
    star: bool

    def adjoint(self) -> "Letter":
        return Letter(self.row, self.col, not self.star)

    def __repr__(self) -> str:
        return f"u{'*' if self.star else ''}[{self.row},{self.col}]"


Word = tuple[Letter, ...]


def word_key(w: Word):
    """Length-lex canonical order, letters compared by (row, col, starred)."""
    return (len(w), tuple((l.row, l.col, l.star) for l in w))


def format_word(w: Word) -> str:
    if not w:
        return "1"
    return "·".join(repr(l) for l in w)


class Element:
    """Finitely supported word -> Q(i) map over the ambient size d."""

    __slots__ = ("d", "terms")

    def __init__(self, d: int, terms: dict[Word, Qi] | None = None):
        if d < 1:
            raise ValueError("ambient size d must be >= 1")
        clean: dict[Word, Qi] = {}
        for w, c in (terms or {}).items():
            if not c.is_zero():
                self._check_word(d, w)
                clean[w] = c
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    @staticmethod
    def _check_word(d: int, w: Word) -> None:
        for l in w:
            if not (1 <= l.row <= d and 1 <= l.col <= d):
                raise ValueError(f"letter {l!r} out of range for d={d}")

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero(d: int) -> "Element":
        return Element(d, {})

    @staticmethod
    def one(d: int) -> "Element":
        return Element(d, {(): ONE})

    @staticmethod
    def generator(d: int, row: int, col: int, star: bool = False) -> "Element":
        return Element(d, {(Letter(row, col, star),): ONE})

    @staticmethod
    def from_word(d: int, w: Word, coeff: Qi = ONE) -> "Element":
        return Element(d, {tuple(w): coeff})

    # -- ring structure ---------------------------------------------------

    def _same_d(self, other: "Element") -> None:
        if self.d != other.d:
            raise ValueError(f"ambient size mismatch: {self.d} vs {other.d}")

    def __add__(self, other: "Element") -> "Element":
        self._same_d(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, ZERO) + c
        return Element(self.d, terms)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __neg__(self) -> "Element":
        return Element(self.d, {w: -c for w, c in self.terms.items()})

    def scale(self, c: Qi) -> "Element":
        return Element(self.d, {w: c * cw for w, cw in self.terms.items()})

    def __mul__(self, other: "Element") -> "Element":
        self._same_d(other)
        terms: dict[Word, Qi] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                terms[w] = terms.get(w, ZERO) + c
        return Element(self.d, terms)

    def star(self) -> "Element":
        """The *-involution: reverse words, star letters, conjugate coefficients."""
        return Element(
            self.d,
            {
                tuple(l.adjoint() for l in reversed(w)): c.conj()
                for w, c in self.terms.items()
            },
        )

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Element)
            and self.d == other.d
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.d, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[Word, Qi]]:
        return sorted(self.terms.items(), key=lambda t: word_key(t[0]))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = [f"({c!r})·{format_word(w)}" for w, c in self.sorted_terms()]
        return " + ".join(parts)


def counit(a: Element) -> Qi:
    """The character with counit(u[j,k]) = counit(u*[j,k]) = delta_jk.

    Multiplicative on words, linear on elements.
    """
    acc = ZERO
    for w, c in a.terms.items():
        if all(l.row == l.col for l in w):
            acc = acc + c
    return acc


def antipode_element(a: Element) -> Element:
    """Linear anti-homomorphism with S(u[j,k]) = u*[k,j], S(u*[j,k]) = u[k,j].

    Valid exactly on Kac presentations; the presentation object guards that.
    """
    return Element(
        a.d,
        {
            tuple(Letter(l.col, l.row, not l.star) for l in reversed(w)): c
            for w, c in a.terms.items()
        },
    )


def inversion_count(images: Sequence[int]) -> int:
    """Number of inverted pairs of a permutation given as a 1-indexed image tuple."""
    n = len(images)
    if sorted(images) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {images}")
    return sum(
        1
        for a in range(n)
        for b in range(a + 1, n)
        if images[a] > images[b]
    )


def all_permutations(d: int) -> list[tuple[int, ...]]:
    return [tuple(p) for p in itertools.permutations(range(1, d + 1))]


def letters(d: int, starred: bool = True) -> list[Letter]:
    out = [
        Letter(j, k, s)
        for s in ((False, True) if starred else (False,))
        for j in range(1, d + 1)
        for k in range(1, d + 1)
    ]
    return out


def words_up_to(d: int, max_len: int, starred: bool = True) -> Iterator[Word]:
    """All words over the letter alphabet, lengths 0..max_len, canonical order."""
    alpha = letters(d, starred=starred)
    for n in range(max_len + 1):
        for combo in itertools.product(alpha, repeat=n):
            yield combo


PRESENTATION_KINDS = ("k_d", "u_plus", "u_q", "o_plus", "o_f", "su_q")


@dataclass(frozen=True)
class Presentation:
    """A *-closed labelled relation list over the free algebra of size d."""

    kind: str
    d: int
    relations: tuple[tuple[str, Element], ...]
    kac: bool
    q_diag: tuple[Rational, ...] | None = None
    F: QMatrix | None = None
    q: Rational | None = None

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Presentation)
            and self.kind == other.kind
            and self.d == other.d
            and self.q_diag == other.q_diag
            and self.F == other.F
            and self.q == other.q
        )

    def __hash__(self):
        return hash((self.kind, self.d, self.q_diag, self.F, self.q))

    def relation_elements(self) -> list[Element]:
        return [r for _, r in self.relations]

    def determinant_relations(self) -> list[tuple[str, Element]]:
        """The unstarred twisted-determinant family (empty unless kind su_q)."""
        return [(lbl, r) for lbl, r in self.relations if lbl.startswith("det(")]

    def antipode(self, a: Element) -> Element:
        if not self.kac:
            raise ValueError(f"antipode undefined: {self.kind} presentation is not Kac")
        return antipode_element(a)

    # Index bijections of a canonical (monomial) form matrix F: row_hat(j) is
    # the column of the unique nonzero entry in row j, col_check(k) the row of
    # the unique nonzero entry in column k.

    def row_hat(self, j: int) -> int:
        return self._monomial_maps()[0][j]

    def col_check(self, k: int) -> int:
        return self._monomial_maps()[1][k]

    def _monomial_maps(self) -> tuple[dict[int, int], dict[int, int]]:
        if self.kind != "o_f" or self.F is None:
            raise ValueError("index bijections exist only for o_f presentations")
        hat: dict[int, int] = {}
        check: dict[int, int] = {}
        for j in range(1, self.d + 1):
            nz = [k for k in range(1, self.d + 1) if not self.F[j - 1][k - 1].is_zero()]
            if len(nz) != 1:
                raise ValueError("F is not in canonical (monomial) form")
            hat[j] = nz[0]
        for k in range(1, self.d + 1):
            nz = [j for j in range(1, self.d + 1) if not self.F[j - 1][k - 1].is_zero()]
            if len(nz) != 1:
                raise ValueError("F is not in canonical (monomial) form")
            check[k] = nz[0]
        return hat, check


def _unitarity_relations(d: int) -> list[tuple[str, Element]]:
    rels = []
    for j in range(1, d + 1):
        for k in range(1, d + 1):
            row = Element.zero(d)
            col = Element.zero(d)
            for p in range(1, d + 1):
                row = row + Element.generator(d, j, p) * Element.generator(d, k, p, True)
                col = col + Element.generator(d, p, j, True) * Element.generator(d, p, k)
            if j == k:
                row = row - Element.one(d)
                col = col - Element.one(d)
            rels.append((f"uu*({j},{k})", row))
            rels.append((f"u*u({j},{k})", col))
    return rels


def _transpose_unitarity_relations(d: int) -> list[tuple[str, Element]]:
    rels = []
    for j in range(1, d + 1):
        for k in range(1, d + 1):
            row = Element.zero(d)
            col = Element.zero(d)
            for p in range(1, d + 1):
                row = row + Element.generator(d, j, p, True) * Element.generator(d, k, p)
                col = col + Element.generator(d, p, j) * Element.generator(d, p, k, True)
            if j == k:
                row = row - Element.one(d)
                col = col - Element.one(d)
            rels.append((f"ubar·ut({j},{k})", row))
            rels.append((f"ut·ubar({j},{k})", col))
    return rels


def _q_weighted_relations(d: int, q_diag: Sequence[Rational]) -> list[tuple[str, Element]]:
    rels = []
    for j in range(1, d + 1):
        for k in range(1, d + 1):
            row = Element.zero(d)
            col = Element.zero(d)
            for p in range(1, d + 1):
                w_row = Qi(q_diag[p - 1] / q_diag[k - 1])
                w_col = Qi(q_diag[j - 1] / q_diag[p - 1])
                row = row + (
                    Element.generator(d, p, j) * Element.generator(d, p, k, True)
                ).scale(w_row)
                col = col + (
                    Element.generator(d, j, p, True) * Element.generator(d, k, p)
                ).scale(w_col)
            if j == k:
                row = row - Element.one(d)
                col = col - Element.one(d)
            rels.append((f"q_row({j},{k})", row))
            rels.append((f"q_col({j},{k})", col))
    return rels


def _symmetry_relations(d: int) -> list[tuple[str, Element]]:
    return [
        (
            f"sym({j},{k})",
            Element.generator(d, j, k) - Element.generator(d, j, k, True),
        )
        for j in range(1, d + 1)
        for k in range(1, d + 1)
    ]


def _form_relations(d: int, F: QMatrix) -> list[tuple[str, Element]]:
    # entrywise uF = F ubar, i.e. sum_p u[j,p] F[p,k] - sum_p F[j,p] u*[p,k]
    rels = []
    for j in range(1, d + 1):
        for k in range(1, d + 1):
            r = Element.zero(d)
            for p in range(1, d + 1):
                r = r + Element.generator(d, j, p).scale(F[p - 1][k - 1])
                r = r - Element.generator(d, p, k, True).scale(F[j - 1][p - 1])
            rels.append((f"uF-Fubar({j},{k})", r))
    return rels


def _determinant_relations(d: int, q: Rational) -> list[tuple[str, Element]]:
    minus_q = Qi(-q)
    rels = []
    for tau in all_permutations(d):
        r = Element.zero(d)
        for sigma in all_permutations(d):
            w = tuple(Letter(sigma[m], tau[m], False) for m in range(d))
            coeff = ONE
            for _ in range(inversion_count(sigma)):
                coeff = coeff * minus_q
            r = r + Element.from_word(d, w, coeff)
        coeff = ONE
        for _ in range(inversion_count(tau)):
            coeff = coeff * minus_q
        r = r - Element.one(d).scale(coeff)
        rels.append((f"det({','.join(map(str, tau))})", r))
    return rels


def _star_close(rels: list[tuple[str, Element]]) -> tuple[tuple[str, Element], ...]:
    present = {r for _, r in rels}
    out = list(rels)
    for lbl, r in rels:
        rs = r.star()
        if rs not in present:
            out.append((f"{lbl}*", rs))
            present.add(rs)
    return tuple(out)


def build_presentation(
    kind: str,
    d: int,
    *,
    q_diag: Sequence | None = None,
    F: QMatrix | None = None,
    q=None,
) -> Presentation:
    """Build a catalogue presentation; validates parameters exactly."""
    if kind not in PRESENTATION_KINDS:
        raise ValueError(f"unknown presentation kind {kind!r}")
    if d < 1:
        raise ValueError("d must be >= 1")

    if kind == "k_d":
        rels = _unitarity_relations(d)
        return Presentation("k_d", d, _star_close(rels), kac=True)

    if kind == "u_plus":
        rels = _unitarity_relations(d) + _transpose_unitarity_relations(d)
        return Presentation("u_plus", d, _star_close(rels), kac=True)

    if kind == "u_q":
        if q_diag is None or len(q_diag) != d:
            raise ValueError("u_q requires q_diag with d positive rational entries")
        qd = tuple(rational(x) for x in q_diag)
        if any(x <= 0 for x in qd):
            raise ValueError("q_diag entries must be positive")
        rels = _unitarity_relations(d) + _q_weighted_relations(d, qd)
        return Presentation("u_q", d, _star_close(rels), kac=False, q_diag=qd)

    if kind == "o_plus":
        rels = (
            _unitarity_relations(d)
            + _transpose_unitarity_relations(d)
            + _symmetry_relations(d)
        )
        return Presentation("o_plus", d, _star_close(rels), kac=True)

    if kind == "o_f":
        if F is None or F.shape != (d, d):
            raise ValueError("o_f requires a d x d form matrix F")
        prod = F @ F.conj()
        ident = QMatrix.identity(d)
        if prod != ident and prod != -ident:
            raise ValueError("o_f requires F·conj(F) = I or -I")
        rels = _unitarity_relations(d) + _form_relations(d, F)
        is_kac = F.adjoint() @ F == ident
        return Presentation("o_f", d, _star_close(rels), kac=is_kac, F=F)

    # su_q
    if q is None:
        raise ValueError("su_q requires the deformation parameter q")
    qr = rational(q)
    if not (0 < qr < 1):
        raise ValueError("su_q requires rational q with 0 < q < 1")
    # Q = F*F for the canonical diagonal form F_jj = q^(j-d); only the ratios
    # Q_pp/Q_kk = q^(2(p-k)) enter the relations.
    qd = tuple(qr ** (2 * (j - d)) for j in range(1, d + 1))
    rels = (
        _unitarity_relations(d)
        + _q_weighted_relations(d, qd)
        + _determinant_relations(d, qr)
    )
    return Presentation("su_q", d, _star_close(rels), kac=False, q=qr)
