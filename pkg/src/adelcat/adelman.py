"""The free abelian category over an additive quiver category.

Objects are composable pairs (a relation morphism into a middle object and a
corelation morphism out of it); morphisms are middle-level matrix morphisms
that admit witnesses making both squares commute, taken modulo
null-homotopies.  Every "yes" answer of a decision procedure carries a
witness pair that re-verifies by plain matrix arithmetic, and all
constructions (kernels, cokernels, lifts, colifts, images, homology) are
carried out on explicit block matrices.

Sign conventions follow the matrices with the fewest minus signs; witnesses
are computed once at construction time and cached inside each value, so all
values are immutable and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .addclosure import (
    MatMorphism,
    TupleObject,
    compose_mat,
    decide_homotopy,
    dual_mat,
    from_blocks,
    hstack_mat,
    identity_mat,
    single,
    vstack_mat,
    zero_mat,
    zero_obj,
)
from .quivercat import EndpointError, LinMorphism, QuiverCategory


class WitnessError(ValueError):
    """A provided witness fails its defining equation."""


class NotMonoError(ValueError):
    pass


class NotEpiError(ValueError):
    pass


class SideConditionError(ValueError):
    """A lift/colift side condition does not hold."""


class CompositeNotZeroError(ValueError):
    pass


@dataclass(frozen=True)
class AdelObject:
    """Composable pair: relation morphism ``rel`` into the middle object and
    corelation morphism ``corel`` out of it."""

    rel: MatMorphism
    corel: MatMorphism

    def __post_init__(self):
        if self.rel.target != self.corel.source:
            raise EndpointError("relation target and corelation source differ")

    @property
    def middle(self) -> TupleObject:
        return self.rel.target

    @property
    def rel_source(self) -> TupleObject:
        return self.rel.source

    @property
    def corel_target(self) -> TupleObject:
        return self.corel.target

    @property
    def cat(self) -> QuiverCategory:
        return self.rel.source.cat

    def __repr__(self) -> str:
        return f"AdelObject({self.rel_source!r} -> {self.middle!r} -> {self.corel_target!r})"


@dataclass(frozen=True)
class WitnessPair:
    """Certificate that a morphism datum is null-homotopic:
    ``datum == sigma1 * rel(target) + corel(source) * sigma2``."""

    sigma1: MatMorphism
    sigma2: MatMorphism

    def verifies(self, source: AdelObject, target: AdelObject, datum: MatMorphism) -> bool:
        lhs = compose_mat(self.sigma1, target.rel) + compose_mat(source.corel, self.sigma2)
        return lhs == datum


@dataclass(frozen=True)
class AdelMorphism:
    """Morphism datum together with its relation and corelation witnesses.

    Construction validates the two witness squares exactly, so every value
    of this type is a well-defined morphism.
    """

    source: AdelObject
    target: AdelObject
    datum: MatMorphism
    rel_witness: MatMorphism
    corel_witness: MatMorphism

    def __post_init__(self):
        if self.datum.source != self.source.middle or self.datum.target != self.target.middle:
            raise EndpointError("datum does not run between the middle objects")
        if compose_mat(self.source.rel, self.datum) != compose_mat(self.rel_witness, self.target.rel):
            raise WitnessError("relation witness square does not commute")
        if compose_mat(self.source.corel, self.corel_witness) != compose_mat(self.datum, self.target.corel):
            raise WitnessError("corelation witness square does not commute")

    def __add__(self, other: "AdelMorphism") -> "AdelMorphism":
        if self.source != other.source or self.target != other.target:
            raise EndpointError("cannot add morphisms with different endpoints")
        return AdelMorphism(
            self.source, self.target,
            self.datum + other.datum,
            self.rel_witness + other.rel_witness,
            self.corel_witness + other.corel_witness,
        )

    def __neg__(self) -> "AdelMorphism":
        return AdelMorphism(self.source, self.target, -self.datum,
                            -self.rel_witness, -self.corel_witness)

    def __sub__(self, other: "AdelMorphism") -> "AdelMorphism":
        return self + (-other)

    def scale(self, c: int) -> "AdelMorphism":
        return AdelMorphism(self.source, self.target, self.datum.scale(c),
                            self.rel_witness.scale(c), self.corel_witness.scale(c))


def compose(f: AdelMorphism, g: AdelMorphism) -> AdelMorphism:
    """Diagrammatic composite; data and witnesses compose componentwise."""
    if f.target != g.source:
        raise EndpointError("composable pair objects do not match")
    return AdelMorphism(
        f.source, g.target,
        compose_mat(f.datum, g.datum),
        compose_mat(f.rel_witness, g.rel_witness),
        compose_mat(f.corel_witness, g.corel_witness),
    )


def identity_morphism(x: AdelObject) -> AdelMorphism:
    return AdelMorphism(x, x, identity_mat(x.middle),
                        identity_mat(x.rel_source), identity_mat(x.corel_target))


def zero_morphism(x: AdelObject, y: AdelObject) -> AdelMorphism:
    return AdelMorphism(x, y, zero_mat(x.middle, y.middle),
                        zero_mat(x.rel_source, y.rel_source),
                        zero_mat(x.corel_target, y.corel_target))


# -- the full embedding -----------------------------------------------------

def emb_object(x: TupleObject) -> AdelObject:
    """Image of a tuple object under the canonical full embedding:
    zero relations, zero corelations."""
    z = zero_obj(x.cat)
    return AdelObject(zero_mat(z, x), zero_mat(x, z))


def emb_vertex(cat: QuiverCategory, v: str) -> AdelObject:
    return emb_object(TupleObject(cat, (v,)))


def emb_morphism(f: MatMorphism) -> AdelMorphism:
    """Image of a matrix morphism under the embedding; witnesses are the
    empty morphisms between zero objects."""
    src = emb_object(f.source)
    tgt = emb_object(f.target)
    z = zero_obj(f.cat)
    return AdelMorphism(src, tgt, f, zero_mat(z, z), zero_mat(z, z))


def emb_lin(f: LinMorphism) -> AdelMorphism:
    return emb_morphism(single(f))


def zero_adel_object(cat: QuiverCategory) -> AdelObject:
    return emb_object(zero_obj(cat))


def direct_sum_object(x: AdelObject, y: AdelObject) -> AdelObject:
    """Pointwise direct sum of composable pairs."""
    from .addclosure import direct_sum_mat
    return AdelObject(direct_sum_mat(x.rel, y.rel), direct_sum_mat(x.corel, y.corel))


def direct_sum_morphism(f: AdelMorphism, g: AdelMorphism) -> AdelMorphism:
    from .addclosure import direct_sum_mat
    return AdelMorphism(
        direct_sum_object(f.source, g.source),
        direct_sum_object(f.target, g.target),
        direct_sum_mat(f.datum, g.datum),
        direct_sum_mat(f.rel_witness, g.rel_witness),
        direct_sum_mat(f.corel_witness, g.corel_witness),
    )


def morphism_from_sum(f: AdelMorphism, g: AdelMorphism) -> AdelMorphism:
    """The morphism out of a direct sum with the given components into a
    common target."""
    if f.target != g.target:
        raise EndpointError("components do not share a target")
    return AdelMorphism(
        direct_sum_object(f.source, g.source), f.target,
        vstack_mat(f.datum, g.datum),
        vstack_mat(f.rel_witness, g.rel_witness),
        vstack_mat(f.corel_witness, g.corel_witness),
    )


# -- equality and the zero test ---------------------------------------------

def zero_witness(source: AdelObject, target: AdelObject,
                 datum: MatMorphism) -> Optional[WitnessPair]:
    """Witness pair for a datum being null-homotopic between two objects, or
    None when it is not."""
    found = decide_homotopy(datum, target.rel, source.corel)
    if found is None:
        return None
    return WitnessPair(*found)


def make_morphism(source: AdelObject, target: AdelObject,
                  datum: MatMorphism) -> Optional[AdelMorphism]:
    """Morphism with computed witnesses, or None when no witnesses exist.

    Each witness is a one-sided homotopy equation: the relation witness
    solves ``rel_s * datum = w * rel_t`` and the corelation witness solves
    ``corel_s * w = datum * corel_t``.
    """
    if datum.source != source.middle or datum.target != target.middle:
        raise EndpointError("datum does not run between the middle objects")
    z = zero_obj(datum.cat)
    rel_eq = decide_homotopy(
        compose_mat(source.rel, datum), target.rel, zero_mat(source.rel_source, z))
    if rel_eq is None:
        return None
    corel_eq = decide_homotopy(
        compose_mat(datum, target.corel), zero_mat(z, target.corel_target), source.corel)
    if corel_eq is None:
        return None
    return AdelMorphism(source, target, datum, rel_eq[0], corel_eq[1])


def is_zero_morphism(f: AdelMorphism) -> Optional[WitnessPair]:
    """Certified zero test; a returned pair always re-verifies."""
    return zero_witness(f.source, f.target, f.datum)


def is_equal(f: AdelMorphism, g: AdelMorphism) -> Optional[WitnessPair]:
    """Certificate that ``f - g`` is null-homotopic, or None."""
    if f.source != g.source or f.target != g.target:
        raise EndpointError("morphisms do not have the same endpoints")
    return zero_witness(f.source, f.target, f.datum - g.datum)


# -- kernels and cokernels ---------------------------------------------------

@dataclass(frozen=True)
class CokernelResult:
    obj: AdelObject
    proj: AdelMorphism
    composite_zero_wp: WitnessPair  # certifies morphism * proj == 0


@dataclass(frozen=True)
class KernelResult:
    obj: AdelObject
    emb: AdelMorphism
    composite_zero_wp: WitnessPair  # certifies emb * morphism == 0


def cokernel(f: AdelMorphism) -> CokernelResult:
    """Cokernel projection, built on explicit block matrices."""
    a, b = f.source, f.target
    rel = from_blocks([
        [b.rel, zero_mat(b.rel_source, a.corel_target)],
        [f.datum, a.corel],
    ])
    corel = from_blocks([
        [b.corel, zero_mat(b.middle, a.corel_target)],
        [zero_mat(a.corel_target, b.corel_target), identity_mat(a.corel_target)],
    ])
    obj = AdelObject(rel, corel)
    proj = AdelMorphism(
        b, obj,
        hstack_mat(identity_mat(b.middle), zero_mat(b.middle, a.corel_target)),
        hstack_mat(identity_mat(b.rel_source), zero_mat(b.rel_source, a.middle)),
        hstack_mat(identity_mat(b.corel_target), zero_mat(b.corel_target, a.corel_target)),
    )
    wp = WitnessPair(
        hstack_mat(zero_mat(a.middle, b.rel_source), identity_mat(a.middle)),
        hstack_mat(zero_mat(a.corel_target, b.middle), -identity_mat(a.corel_target)),
    )
    if not wp.verifies(a, obj, compose_mat(f.datum, proj.datum)):
        raise RuntimeError("canonical cokernel witness failed to verify")
    return CokernelResult(obj, proj, wp)


def cokernel_colift(f: AdelMorphism, tau: AdelMorphism,
                    wp: Optional[WitnessPair] = None) -> AdelMorphism:
    """Morphism induced on the cokernel by a test morphism ``tau`` with
    ``f * tau == 0``; the certifying pair is re-verified (or computed)."""
    if tau.source != f.target:
        raise EndpointError("test morphism must start at the cokernel base")
    composite_datum = compose_mat(f.datum, tau.datum)
    if wp is None:
        wp = zero_witness(f.source, tau.target, composite_datum)
        if wp is None:
            raise SideConditionError("composite with the test morphism is not zero")
    elif not wp.verifies(f.source, tau.target, composite_datum):
        raise WitnessError("invalid witness pair for the colift side condition")
    ck = cokernel(f)
    t = tau.target
    datum = vstack_mat(tau.datum, -wp.sigma2)
    omega = vstack_mat(tau.rel_witness, wp.sigma1)
    psi = vstack_mat(tau.corel_witness, -compose_mat(wp.sigma2, t.corel))
    return AdelMorphism(ck.obj, t, datum, omega, psi)


def kernel(f: AdelMorphism) -> KernelResult:
    """Kernel embedding; the exact dual of the cokernel construction."""
    a, b = f.source, f.target
    rel = from_blocks([
        [a.rel, zero_mat(a.rel_source, b.rel_source)],
        [zero_mat(b.rel_source, a.middle), identity_mat(b.rel_source)],
    ])
    corel = from_blocks([
        [a.corel, f.datum],
        [zero_mat(b.rel_source, a.corel_target), b.rel],
    ])
    obj = AdelObject(rel, corel)
    emb = AdelMorphism(
        obj, a,
        vstack_mat(identity_mat(a.middle), zero_mat(b.rel_source, a.middle)),
        vstack_mat(identity_mat(a.rel_source), zero_mat(b.rel_source, a.rel_source)),
        vstack_mat(identity_mat(a.corel_target), zero_mat(b.middle, a.corel_target)),
    )
    wp = WitnessPair(
        vstack_mat(zero_mat(a.middle, b.rel_source), -identity_mat(b.rel_source)),
        vstack_mat(zero_mat(a.corel_target, b.middle), identity_mat(b.middle)),
    )
    if not wp.verifies(obj, b, compose_mat(emb.datum, f.datum)):
        raise RuntimeError("canonical kernel witness failed to verify")
    return KernelResult(obj, emb, wp)


def kernel_lift(f: AdelMorphism, tau: AdelMorphism,
                wp: Optional[WitnessPair] = None) -> AdelMorphism:
    """Morphism induced into the kernel by a test morphism ``tau`` with
    ``tau * f == 0``."""
    if tau.target != f.source:
        raise EndpointError("test morphism must end at the kernel base")
    composite_datum = compose_mat(tau.datum, f.datum)
    if wp is None:
        wp = zero_witness(tau.source, f.target, composite_datum)
        if wp is None:
            raise SideConditionError("composite with the test morphism is not zero")
    elif not wp.verifies(tau.source, f.target, composite_datum):
        raise WitnessError("invalid witness pair for the lift side condition")
    kr = kernel(f)
    t = tau.source
    datum = hstack_mat(tau.datum, -wp.sigma1)
    omega = hstack_mat(tau.rel_witness, -compose_mat(t.rel, wp.sigma1))
    psi = hstack_mat(tau.corel_witness, wp.sigma2)
    return AdelMorphism(t, kr.obj, datum, omega, psi)


# -- duality -----------------------------------------------------------------

def dualize_object(x: AdelObject) -> AdelObject:
    """The same data read in the opposite category, roles of relations and
    corelations exchanged; an involution."""
    return AdelObject(dual_mat(x.corel), dual_mat(x.rel))


def dualize_morphism(f: AdelMorphism) -> AdelMorphism:
    return AdelMorphism(
        dualize_object(f.target), dualize_object(f.source),
        dual_mat(f.datum),
        dual_mat(f.corel_witness), dual_mat(f.rel_witness),
    )


def dualize(x: Union[AdelObject, AdelMorphism]):
    if isinstance(x, AdelObject):
        return dualize_object(x)
    return dualize_morphism(x)


# -- predicates ---------------------------------------------------------------

def zero_object_witness(x: AdelObject) -> Optional[WitnessPair]:
    """An object is zero exactly when its identity is null-homotopic."""
    return zero_witness(x, x, identity_mat(x.middle))


def is_zero_object(x: AdelObject) -> bool:
    return zero_object_witness(x) is not None


def is_mono(f: AdelMorphism) -> bool:
    return is_zero_object(kernel(f).obj)


def is_epi(f: AdelMorphism) -> bool:
    return is_zero_object(cokernel(f).obj)


def is_iso(f: AdelMorphism) -> bool:
    return is_mono(f) and is_epi(f)


def subobject_leq(i1: AdelMorphism, i2: AdelMorphism) -> bool:
    """Subobject comparison: ``i1 <= i2`` iff ``i1`` composed with the
    cokernel projection of ``i2`` vanishes.  Both inputs must be monos into
    the same object."""
    if i1.target != i2.target:
        raise EndpointError("subobjects of different objects")
    if not is_mono(i1) or not is_mono(i2):
        raise NotMonoError("subobject comparison needs monomorphisms")
    return is_zero_morphism(compose(i1, cokernel(i2).proj)) is not None


# -- epis as cokernels of their kernels ---------------------------------------

@dataclass(frozen=True)
class EpiAsCokernel:
    """Data identifying an epi with the cokernel of its kernel: the kernel,
    the cokernel of its embedding, the comparison morphism out of the epi's
    target, and the explicit pair certifying the commuting triangle."""

    epi: AdelMorphism
    ker: KernelResult
    cok_of_kernel: CokernelResult
    comparison: AdelMorphism
    triangle_wp: WitnessPair


def epi_as_cokernel(eps: AdelMorphism) -> EpiAsCokernel:
    """Identify an epi with the cokernel projection of its kernel.

    The comparison morphism's datum, witnesses, and the triangle witness
    pair are written down explicitly from a witness pair for the epi's own
    cokernel projection being zero and re-verified, not searched for.
    """
    a, b = eps.source, eps.target
    ck = cokernel(eps)
    pz = is_zero_morphism(ck.proj)
    if pz is None:
        raise NotEpiError("morphism is not an epimorphism")
    # sigma1: b -> rel_source(b) (+) middle(a); sigma2: corel_target(b) -> middle(b) (+) corel_target(a)
    n_rb = len(b.rel_source)
    sigma7 = _take_cols(pz.sigma1, 0, n_rb)
    sigma8 = _take_cols(pz.sigma1, n_rb, len(a.middle))
    n_b = len(b.middle)
    sigma5 = _take_cols(pz.sigma2, 0, n_b)
    sigma6 = _take_cols(pz.sigma2, n_b, len(a.corel_target))
    kr = kernel(eps)
    c2 = cokernel(kr.emb)
    gb = b.corel
    datum = hstack_mat(sigma8, -compose_mat(gb, sigma6), -compose_mat(gb, sigma5))
    omega = hstack_mat(
        zero_mat(b.rel_source, a.rel_source),
        compose_mat(b.rel, sigma8),
        compose_mat(b.rel, sigma7) - identity_mat(b.rel_source),
    )
    psi = hstack_mat(-sigma6, -sigma6, -sigma5)
    comparison = AdelMorphism(b, c2.obj, datum, omega, psi)
    triangle_wp = WitnessPair(
        hstack_mat(
            zero_mat(a.middle, a.rel_source),
            compose_mat(eps.datum, sigma8) - identity_mat(a.middle),
            compose_mat(eps.datum, sigma7),
        ),
        hstack_mat(
            zero_mat(a.corel_target, a.middle),
            identity_mat(a.corel_target),
            zero_mat(a.corel_target, b.middle),
        ),
    )
    diff = compose_mat(eps.datum, comparison.datum) - c2.proj.datum
    if not triangle_wp.verifies(a, c2.obj, diff):
        raise RuntimeError("explicit triangle witness failed to verify")
    return EpiAsCokernel(eps, kr, c2, comparison, triangle_wp)


def _take_cols(f: MatMorphism, start: int, count: int) -> MatMorphism:
    tgt = TupleObject(f.cat, f.target.summands[start : start + count])
    entries = tuple(tuple(row[start : start + count]) for row in f.entries)
    return MatMorphism(f.source, tgt, entries)


def colift_along_epi(eps: AdelMorphism, tau: AdelMorphism) -> AdelMorphism:
    """Unique morphism ``c`` with ``eps * c == tau``, for ``eps`` epi and
    ``tau`` killed by the kernel of ``eps``."""
    if tau.source != eps.source:
        raise EndpointError("test morphism must share the epi's source")
    data = epi_as_cokernel(eps)
    side = compose(data.ker.emb, tau)
    wp = is_zero_morphism(side)
    if wp is None:
        raise SideConditionError("kernel of the epi does not kill the test morphism")
    nu = cokernel_colift(data.ker.emb, tau, wp)
    return compose(data.comparison, nu)


def lift_along_mono(iota: AdelMorphism, tau: AdelMorphism) -> AdelMorphism:
    """Unique morphism ``l`` with ``l * iota == tau``, for ``iota`` mono and
    ``tau`` killed by the cokernel of ``iota``; computed by dualizing the
    colift construction."""
    if tau.target != iota.target:
        raise EndpointError("test morphism must share the mono's target")
    try:
        colift = colift_along_epi(dualize_morphism(iota), dualize_morphism(tau))
    except NotEpiError:
        raise NotMonoError("morphism is not a monomorphism") from None
    except SideConditionError:
        raise SideConditionError("cokernel of the mono does not kill the test morphism") from None
    return dualize_morphism(colift)


# -- images, homology, exactness ----------------------------------------------

@dataclass(frozen=True)
class ImageResult:
    obj: AdelObject
    emb: AdelMorphism            # image -> target, a mono
    corestriction: AdelMorphism  # source -> image
    cok_of: CokernelResult       # cokernel the image is the kernel of


def image(f: AdelMorphism) -> ImageResult:
    """Image factorization: the kernel of the cokernel projection, together
    with the induced map from the source."""
    ck = cokernel(f)
    kr = kernel(ck.proj)
    core = kernel_lift(ck.proj, f, ck.composite_zero_wp)
    return ImageResult(kr.obj, kr.emb, core, ck)


@dataclass(frozen=True)
class HomologyResult:
    """Homology of a composable pair: the image of the composite
    ``kernel embedding * cokernel projection``."""

    obj: AdelObject
    first: AdelMorphism
    second: AdelMorphism
    via: AdelMorphism           # ker(second) -> coker(first)
    ker: KernelResult           # of the second morphism
    cok: CokernelResult         # of the first morphism
    img: ImageResult            # of ``via``; img.obj == obj

    @property
    def emb_to_cokernel(self) -> AdelMorphism:
        return self.img.emb

    @property
    def from_kernel(self) -> AdelMorphism:
        return self.img.corestriction


def homology(f: AdelMorphism, g: AdelMorphism) -> HomologyResult:
    """Homology of the composable pair ``(f, g)`` at the middle object; the
    composite ``f * g`` is not required to vanish."""
    if f.target != g.source:
        raise EndpointError("not a composable pair")
    kr = kernel(g)
    cr = cokernel(f)
    via = compose(kr.emb, cr.proj)
    img = image(via)
    return HomologyResult(img.obj, f, g, via, kr, cr, img)


def homology_comparison(h: HomologyResult, w: AdelObject,
                        datum_to_cok: MatMorphism) -> Optional[AdelMorphism]:
    """Lift a candidate presentation ``w`` into the homology object.

    ``datum_to_cok`` runs from the middle of ``w`` to the middle of the
    cokernel; when it defines a morphism that the image's cokernel kills,
    the lift ``w -> h.obj`` is returned, otherwise None.
    """
    theta = make_morphism(w, h.cok.obj, datum_to_cok)
    if theta is None:
        return None
    wp = is_zero_morphism(compose(theta, h.img.cok_of.proj))
    if wp is None:
        return None
    return kernel_lift(h.img.cok_of.proj, theta, wp)


def exactness_certificates(f: AdelMorphism, g: AdelMorphism):
    """Certificates behind the exactness test: the witness for ``f * g == 0``
    (required) and, when exact, the witness that the kernel-to-cokernel
    composite vanishes."""
    if f.target != g.source:
        raise EndpointError("not a composable pair")
    composite_wp = is_zero_morphism(compose(f, g))
    if composite_wp is None:
        raise CompositeNotZeroError("composite is not zero, exactness is undefined")
    kr = kernel(g)
    cr = cokernel(f)
    via = compose(kr.emb, cr.proj)
    via_wp = is_zero_morphism(via)
    return composite_wp, via, via_wp


def is_exact(f: AdelMorphism, g: AdelMorphism) -> bool:
    """Exactness at the middle object of a certified complex: the composite
    of the kernel embedding of ``g`` with the cokernel projection of ``f``
    must vanish."""
    _, _, via_wp = exactness_certificates(f, g)
    return via_wp is not None


def connecting_homomorphism(alpha: MatMorphism, beta: MatMorphism,
                            gamma: MatMorphism) -> AdelMorphism:
    """The connecting morphism of three consecutive morphisms whose full
    composite vanishes: datum ``beta`` from ``(alpha | beta*gamma)`` to
    ``(alpha*beta | gamma)``, with identity witnesses."""
    if alpha.target != beta.source or beta.target != gamma.source:
        raise EndpointError("morphisms are not consecutive")
    if not compose_mat(compose_mat(alpha, beta), gamma).is_zero():
        raise CompositeNotZeroError("triple composite is not zero")
    src = AdelObject(alpha, compose_mat(beta, gamma))
    tgt = AdelObject(compose_mat(alpha, beta), gamma)
    return AdelMorphism(src, tgt, beta,
                        identity_mat(alpha.source), identity_mat(gamma.target))


# -- functoriality of kernels, cokernels, homology ----------------------------

def kernel_map(k1: KernelResult, g2: AdelMorphism, vy: AdelMorphism) -> AdelMorphism:
    """Induced map on kernel objects for a square commuting over ``vy``:
    from the kernel ``k1`` of some ``g1`` with ``g1 * vz == vy * g2``."""
    composite = compose(k1.emb, vy)
    wp = is_zero_morphism(compose(composite, g2))
    if wp is None:
        raise SideConditionError("square does not induce a kernel map")
    return kernel_lift(g2, composite, wp)


def cokernel_map(f1: AdelMorphism, c2: CokernelResult,
                 vy: AdelMorphism) -> AdelMorphism:
    """Induced map on cokernel objects for a square commuting over ``vy``:
    from the cokernel of ``f1`` to ``c2``."""
    tau = compose(vy, c2.proj)
    wp = is_zero_morphism(compose(f1, tau))
    if wp is None:
        raise SideConditionError("square does not induce a cokernel map")
    return cokernel_colift(f1, tau, wp)


def homology_map(h1: HomologyResult, h2: HomologyResult,
                 vy: AdelMorphism) -> AdelMorphism:
    """Induced map on homology objects for compatible squares over the
    middle morphism ``vy``."""
    cmap = cokernel_map(h1.first, h2.cok, vy)
    m = compose(h1.img.emb, cmap)
    wp = is_zero_morphism(compose(m, h2.img.cok_of.proj))
    if wp is None:
        raise SideConditionError("squares do not induce a homology map")
    return kernel_lift(h2.img.cok_of.proj, m, wp)
