"""Hom groups of the free abelian category, as presented abelian groups.

The morphisms between two objects form the subquotient of the middle-level
Hom group cut out by the two witness systems (numerator) and the image of
the null-homotopy map plus the relation lattice (denominator).  Both
lattices are computed exactly: the numerator as the projection of the joint
solution lattice of the witness systems, the denominator as a generating set
of image rows.  Generators are reported in HNF-reduced coordinates, so the
presentation is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .addclosure import HomBasis, MatMorphism, left_compose_rows, right_compose_rows
from .adelman import AdelMorphism, AdelObject, make_morphism
from .intlinalg import (
    FpAbGroup,
    IntMatrix,
    lattice_basis,
    left_kernel,
    solve_left,
    vstack,
)


@dataclass(frozen=True)
class HomGroupPresentation:
    """Hom(X, Y) with explicit generating morphisms.

    ``group`` presents the quotient on the listed generators; ``basis`` holds
    the generator data as rows over the flattened path coordinates of the
    middle-level Hom space.
    """

    source: AdelObject
    target: AdelObject
    group: FpAbGroup
    generators: tuple[AdelMorphism, ...]
    basis: IntMatrix
    _hom: HomBasis

    def coordinates(self, f: Union[AdelMorphism, MatMorphism]) -> tuple[int, ...]:
        """Coordinate vector of a morphism datum on the generators.

        Raises ValueError if the datum does not define a morphism (i.e. lies
        outside the solution lattice of the witness systems).
        """
        datum = f.datum if isinstance(f, AdelMorphism) else f
        flat = IntMatrix.row_vector(self._hom.flatten(datum))
        sol = solve_left(self.basis, flat)
        if sol is None:
            raise ValueError("datum is not a well-defined morphism between these objects")
        return sol.row(0)

    def element(self, coords: Sequence[int]) -> AdelMorphism:
        """The morphism with the given generator coordinates."""
        coords = tuple(coords)
        if len(coords) != self.group.ngens:
            raise ValueError(f"expected {self.group.ngens} coordinates")
        vec = [0] * self.basis.cols
        for i, c in enumerate(coords):
            if c:
                row = self.basis.row(i)
                for j in range(self.basis.cols):
                    vec[j] += c * row[j]
        datum = self._hom.unflatten(vec)
        made = make_morphism(self.source, self.target, datum)
        if made is None:  # pragma: no cover - lattice rows are well-defined
            raise RuntimeError("generator combination failed well-definedness")
        return made

    def is_zero_class(self, f: Union[AdelMorphism, MatMorphism]) -> bool:
        return self.group.is_zero_element(self.coordinates(f))

    def classes_equal(self, f, g) -> bool:
        return self.group.elements_equal(self.coordinates(f), self.coordinates(g))


def hom_group(x: AdelObject, y: AdelObject) -> HomGroupPresentation:
    """Present Hom(X, Y) with generators and relations.

    Numerator: data admitting relation and corelation witnesses, i.e. the
    projection onto the datum block of the solution lattice of

        rel_x * datum == omega * rel_y      (mod relations)
        datum * corel_y == corel_x * psi    (mod relations)

    Denominator: the null-homotopy image ``sigma1 * rel_y + corel_x * sigma2``
    together with the relation lattice of the ambient Hom space.
    """
    cat = x.cat
    hom = HomBasis(x.middle, y.middle)
    n = hom.dim

    h_omega = HomBasis(x.rel_source, y.rel_source)
    h_psi = HomBasis(x.corel_target, y.corel_target)
    eq1 = HomBasis(x.rel_source, y.middle)
    eq2 = HomBasis(x.middle, y.corel_target)

    alpha_eq1 = left_compose_rows(x.rel, hom, eq1)
    alpha_eq2 = right_compose_rows(hom, y.corel, eq2)
    omega_eq1 = right_compose_rows(h_omega, y.rel, eq1)
    psi_eq2 = left_compose_rows(x.corel, h_psi, eq2)
    rel1 = eq1.rel_rows()
    rel2 = eq2.rel_rows()

    rows: list[list[int]] = []
    for r1, r2 in zip(alpha_eq1, alpha_eq2):
        rows.append(r1 + r2)
    for r in omega_eq1:
        rows.append([-c for c in r] + [0] * eq2.dim)
    for r in rel1:
        rows.append(r + [0] * eq2.dim)
    for r in psi_eq2:
        rows.append([0] * eq1.dim + [-c for c in r])
    for r in rel2:
        rows.append([0] * eq1.dim + r)
    system = IntMatrix.from_rows(rows, cols=eq1.dim + eq2.dim)

    solutions = left_kernel(system)
    datum_block = IntMatrix.from_rows(
        [list(solutions.row(i))[:n] for i in range(solutions.rows)], cols=n)
    basis = lattice_basis(datum_block)
    k = basis.rows

    h_s1 = HomBasis(x.middle, y.rel_source)
    h_s2 = HomBasis(x.corel_target, y.middle)
    null_rows = right_compose_rows(h_s1, y.rel, hom)
    null_rows += left_compose_rows(x.corel, h_s2, hom)
    null_rows += hom.rel_rows()
    denominator = IntMatrix.from_rows(null_rows, cols=n)

    stacked = vstack(basis, denominator)
    kern = left_kernel(stacked)
    relation_rows = IntMatrix.from_rows(
        [list(kern.row(i))[:k] for i in range(kern.rows)], cols=k)
    group = FpAbGroup(k, lattice_basis(relation_rows))

    generators = []
    for i in range(k):
        datum = hom.unflatten(basis.row(i))
        gen = make_morphism(x, y, datum)
        if gen is None:  # pragma: no cover - rows come from the solution lattice
            raise RuntimeError("solution-lattice row is not a well-defined morphism")
        generators.append(gen)

    return HomGroupPresentation(x, y, group, tuple(generators), basis, hom)
