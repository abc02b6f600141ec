"""Invariants of closed totally orientable Seifert fibered spaces.

A space is given by its invariant tuple: base genus g, the integer b, and
coprime pairs (alpha_i, beta_i) describing the exceptional fibers.  From
the tuple the module computes the rational Euler number b + sum(beta/alpha),
the standard fundamental-group presentation, first homology with exact
torsion via Smith reduction, the rank of second homology, the covering
degree of a horizontal surface, torus-link component counts, and a
classification of the structure of the space's surface complex.

Terminology note: the integer b alone is sometimes also called the Euler
number.  Horizontal surfaces exist exactly when the rational quantity
b + sum(beta_i/alpha_i) vanishes, so that is what the classifier keys on;
reports carry both b and the rational value.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from .exactlin import invariant_factors

__all__ = [
    "SeifertInvariants",
    "PresentationData",
    "HomologySummary",
    "StructureReport",
    "Verdict",
    "normalize",
    "euler_number",
    "horizontal_degree",
    "pi1_presentation",
    "h1",
    "h2_rank",
    "relative_h2_rank_disk_base",
    "torus_link_components",
    "classify_surface_complex",
    "info_json_dict",
]


@dataclass(frozen=True)
class SeifertInvariants:
    """Invariant tuple <g, b, (alpha_1, beta_1), ..., (alpha_k, beta_k)>.

    genus is the (orientable) base genus, b an integer, and each fiber pair
    must satisfy alpha >= 1 and gcd(alpha, beta) == 1.  Canonical form
    (alpha >= 2, beta in [1, alpha-1], fibers sorted) is produced by
    `normalize`; alpha == 1 pairs are legal input and get folded into b.
    """

    genus: int
    b: int
    fibers: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "fibers", tuple(tuple(f) for f in self.fibers))
        if not isinstance(self.genus, int) or self.genus < 0:
            raise ValueError(f"genus must be a nonnegative integer, got {self.genus!r}")
        if not isinstance(self.b, int):
            raise ValueError(f"b must be an integer, got {self.b!r}")
        for f in self.fibers:
            if len(f) != 2 or not all(isinstance(e, int) for e in f):
                raise ValueError(f"fiber must be an integer pair, got {f!r}")
            alpha, beta = f
            if alpha <= 0:
                raise ValueError(f"fiber multiplicity must be positive, got {alpha}")
            if math.gcd(alpha, beta) != 1:
                raise ValueError(f"fiber pair {f} is not coprime")

    @property
    def fiber_count(self) -> int:
        return len(self.fibers)

    @property
    def is_normalized(self) -> bool:
        return self == normalize(self)

    def __str__(self) -> str:
        parts = [str(self.genus), str(self.b)]
        parts += [f"({a},{b})" for a, b in self.fibers]
        return "<" + ", ".join(parts) + ">"


def normalize(inv: SeifertInvariants) -> SeifertInvariants:
    """Canonical form: beta reduced into [1, alpha-1] with the excess folded
    into b, alpha == 1 fibers removed, fibers sorted.  The Euler number is
    unchanged, so equal manifolds compare equal after normalization."""
    b = inv.b
    kept = []
    for alpha, beta in inv.fibers:
        q, r = divmod(beta, alpha)
        b += q
        if alpha == 1:
            continue
        kept.append((alpha, r))
    return SeifertInvariants(inv.genus, b, tuple(sorted(kept)))


def euler_number(inv: SeifertInvariants) -> Fraction:
    """e = b + sum(beta_i / alpha_i), exact; invariant under `normalize`.

    Horizontal surfaces exist exactly when e == 0."""
    return Fraction(inv.b) + sum(
        (Fraction(beta, alpha) for alpha, beta in inv.fibers), Fraction(0)
    )


def horizontal_degree(inv: SeifertInvariants) -> int:
    """Covering degree of a horizontal surface over the base orbifold:
    lcm(alpha_1, ..., alpha_k), and 1 when there are no exceptional fibers.

    Defined only for Euler number 0 (no horizontal surface otherwise)."""
    e = euler_number(inv)
    if e != 0:
        raise ValueError(f"no horizontal surface: Euler number is {e}, not 0")
    return math.lcm(*(alpha for alpha, _ in inv.fibers)) if inv.fibers else 1


@dataclass(frozen=True)
class PresentationData:
    """Fundamental-group presentation: generator names and Tietze relators.

    Generators are ordered a1, b1, ..., ag, bg, x1, ..., xk, h.  A relator
    is a word of signed 1-based generator indices (negative = inverse).
    There is one surface relator, one commutator [gen, h] per non-central
    generator, and one x_i^alpha_i h^beta_i relator per fiber; an empty
    surface relator (the S^2 x S^1-like case) is dropped.
    """

    generators: tuple[str, ...]
    relators: tuple[tuple[int, ...], ...]


def pi1_presentation(inv: SeifertInvariants) -> PresentationData:
    g, k = inv.genus, inv.fiber_count
    names: list[str] = []
    for i in range(1, g + 1):
        names += [f"a{i}", f"b{i}"]
    names += [f"x{i}" for i in range(1, k + 1)]
    names.append("h")
    h = 2 * g + k + 1

    surface: list[int] = [-h] * inv.b if inv.b > 0 else [h] * (-inv.b)
    for i in range(g):
        ai, bi = 2 * i + 1, 2 * i + 2
        surface += [ai, bi, -ai, -bi]
    surface += [2 * g + 1 + j for j in range(k)]

    relators: list[tuple[int, ...]] = []
    if surface:
        relators.append(tuple(surface))
    for idx in range(1, 2 * g + k + 1):
        relators.append((idx, h, -idx, -h))
    for j, (alpha, beta) in enumerate(inv.fibers):
        xj = 2 * g + 1 + j
        word = [xj] * alpha + ([h] * beta if beta > 0 else [-h] * (-beta))
        relators.append(tuple(word))
    return PresentationData(tuple(names), tuple(relators))


@dataclass(frozen=True)
class HomologySummary:
    """First homology: free rank, exact torsion, and whether the
    distinguished extra generator is the fiber class itself.

    torsion entries are >= 2 and each divides the next.
    eta_is_fiber_class is True exactly in the product case (no exceptional
    fibers, b == 0 after normalization), where the class dual to a
    horizontal surface is the regular fiber; otherwise it is a reduced
    combination of fiber generators.
    """

    free_rank: int
    torsion: tuple[int, ...]
    eta_is_fiber_class: bool


def h1(inv: SeifertInvariants) -> HomologySummary:
    """First homology from the abelianized presentation.

    The a_i, b_i generators contribute Z^{2g} untouched; the block over
    (x_1, ..., x_k, h) has the rows (1, ..., 1, -b) and alpha_i x_i +
    beta_i h, and is reduced by Smith normal form.
    """
    g, k = inv.genus, inv.fiber_count
    rows = [[1] * k + [-inv.b]]
    for j, (alpha, beta) in enumerate(inv.fibers):
        row = [0] * (k + 1)
        row[j] = alpha
        row[k] = beta
        rows.append(row)
    diag = invariant_factors(rows)
    nonzero = [d for d in diag if d != 0]
    corank = (k + 1) - len(nonzero)
    norm = normalize(inv)
    return HomologySummary(
        free_rank=2 * g + corank,
        torsion=tuple(d for d in nonzero if d > 1),
        eta_is_fiber_class=(norm.fiber_count == 0 and norm.b == 0),
    )


def h2_rank(inv: SeifertInvariants) -> int:
    """Rank of second homology: equal to the free rank of first homology
    (universal coefficients plus duality), hence 2g + 1 when the Euler
    number vanishes and 2g otherwise."""
    return h1(inv).free_rank


def relative_h2_rank_disk_base(k: int) -> int:
    """Rank of second relative homology for a space fibered over the disk
    with k exceptional fibers: always 1, independent of k."""
    if k < 0:
        raise ValueError("fiber count must be nonnegative")
    return 1


def torus_link_components(m: int, n: int) -> int:
    """Components of the (m, n) multicurve on a torus: gcd(|m|, |n|)."""
    if m == 0 and n == 0:
        raise ValueError("(0, 0) is not a multicurve class")
    return math.gcd(m, n)


class Verdict(enum.Enum):
    ISO_CURVE_COMPLEX = "IsoCurveComplex"
    CONE_BOUNDED = "ConeBounded"
    CONE_EXACT = "ConeExact"
    CONNECTED_AT_LEVEL_D = "ConnectedAtLevelD"
    PRODUCT_S1_CONNECTED = "ProductS1Connected"


@dataclass(frozen=True)
class StructureReport:
    """Classifier output for the structure of the surface complex.

    base_surface is (genus, punctures) of the surface obtained from the
    base orbifold by deleting cone-point neighborhoods.  d is the
    horizontal covering degree, present exactly when the Euler number is
    0.  diameter_bound is set only in the product branch.  theorem names
    the classification rule that fired.
    """

    verdict: Verdict
    base_surface: tuple[int, int]
    d: int | None
    diameter_bound: int | None
    theorem: str


def classify_surface_complex(inv: SeifertInvariants) -> StructureReport:
    """Verdict table for the surface complex, applied in order.

    1. e != 0: the complex is isomorphic to the curve complex of the
       punctured base surface (vertical surfaces are everything).
    2. e == 0, genus 0, four or five exceptional fibers with identical
       invariants: exactly the cone on that curve complex.
    3. e == 0, genus 0 otherwise: contains the curve complex and is
       contained in its cone.
    4. e == 0, positive genus, no exceptional fibers, b == 0 (a product
       with the circle): connected at intersection level 1 with diameter
       at most 4.
    5. e == 0, positive genus otherwise: connected at level
       d = lcm(alpha_i).
    """
    norm = normalize(inv)
    g, k = norm.genus, norm.fiber_count
    base = (g, k)
    if euler_number(norm) != 0:
        return StructureReport(
            Verdict.ISO_CURVE_COMPLEX, base, None, None, "nonzero-euler-number"
        )
    d = horizontal_degree(norm)
    if g == 0:
        if k in (4, 5) and len(set(norm.fibers)) == 1:
            return StructureReport(
                Verdict.CONE_EXACT, base, d, None, "identical-fibers-cone"
            )
        return StructureReport(
            Verdict.CONE_BOUNDED, base, d, None, "spherical-base-cone-bound"
        )
    if k == 0 and norm.b == 0:
        return StructureReport(
            Verdict.PRODUCT_S1_CONNECTED, base, d, 4, "product-diameter-bound"
        )
    return StructureReport(
        Verdict.CONNECTED_AT_LEVEL_D, base, d, None, "lcm-connectivity-level"
    )


def info_json_dict(inv: SeifertInvariants) -> dict:
    """Machine-readable report over the normalized invariants.

    Schema: {"genus": int, "b": int, "fibers": [[alpha, beta], ...],
    "euler_number": "p/q", "d": int|null, "h1": {"free_rank": int,
    "torsion": [int, ...]}, "h2_rank": int, "verdict": str,
    "theorem": str, "diameter_bound": int|null}.
    """
    norm = normalize(inv)
    e = euler_number(norm)
    hom = h1(norm)
    report = classify_surface_complex(norm)
    return {
        "genus": norm.genus,
        "b": norm.b,
        "fibers": [list(f) for f in norm.fibers],
        "euler_number": f"{e.numerator}/{e.denominator}",
        "d": report.d,
        "h1": {"free_rank": hom.free_rank, "torsion": list(hom.torsion)},
        "h2_rank": hom.free_rank,
        "verdict": report.verdict.value,
        "theorem": report.theorem,
        "diameter_bound": report.diameter_bound,
    }
