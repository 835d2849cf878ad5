import itertools
import random

import pytest

from adelcat.intlinalg import SmithInvariants
from adelcat.quivercat import (
    Arrow,
    CyclicQuiverError,
    EndpointError,
    Path,
    Quiver,
    QuiverError,
    RelationError,
    UnknownVertexError,
    compose_lin,
    dual_lin,
    enumerate_paths,
    format_lin,
    lin_equal,
    make_relation,
)


class TestQuiverValidation:
    def test_duplicate_vertices(self):
        with pytest.raises(QuiverError):
            Quiver(("a", "a"), ())

    def test_duplicate_arrow_labels(self):
        with pytest.raises(QuiverError):
            Quiver(("a", "b"), (Arrow("x", "a", "b"), Arrow("x", "a", "b")))

    def test_cycle_rejected(self):
        with pytest.raises(CyclicQuiverError):
            Quiver(("a", "b"), (Arrow("x", "a", "b"), Arrow("y", "b", "a")))

    def test_self_loop_rejected(self):
        with pytest.raises(CyclicQuiverError):
            Quiver(("a",), (Arrow("x", "a", "a"),))

    def test_unknown_endpoint(self):
        with pytest.raises(UnknownVertexError):
            Quiver(("a",), (Arrow("x", "a", "zz"),))


class TestPathEnumeration:
    def test_disconnected_pair_is_empty(self, snake_cat):
        assert enumerate_paths(snake_cat.quiver, "b", "a") == ()

    def test_identity_path_at_each_vertex(self, snake_cat):
        paths = enumerate_paths(snake_cat.quiver, "a", "a")
        assert len(paths) == 1
        assert paths[0].is_identity()

    def test_snake_a_to_c(self, snake_cat):
        paths = enumerate_paths(snake_cat.quiver, "a", "c")
        assert [p.arrows for p in paths] == [(0, 1)]

    def test_exhaustive_against_brute_force(self):
        # diamond with a doubled edge: enumerate all arrow words and filter
        q = Quiver(("a", "b", "c", "d"), (
            Arrow("p", "a", "b"),
            Arrow("q", "a", "c"),
            Arrow("r", "b", "d"),
            Arrow("s", "c", "d"),
            Arrow("t", "b", "d"),
        ))
        found = {p.arrows for p in enumerate_paths(q, "a", "d")}
        brute = set()
        for length in range(0, 4):
            for word in itertools.product(range(5), repeat=length):
                at = "a"
                ok = True
                for idx in word:
                    if q.arrows[idx].source != at:
                        ok = False
                        break
                    at = q.arrows[idx].target
                if ok and at == "d":
                    brute.add(word)
        assert found == brute

    def test_length_lex_order(self):
        q = Quiver(("a", "b", "c", "d"), (
            Arrow("p", "a", "b"),
            Arrow("q", "a", "c"),
            Arrow("r", "b", "d"),
            Arrow("s", "c", "d"),
            Arrow("t", "a", "d"),
        ))
        paths = [p.arrows for p in enumerate_paths(q, "a", "d")]
        assert paths == [(4,), (0, 2), (1, 3)]

    def test_unknown_vertex(self, snake_cat):
        with pytest.raises(UnknownVertexError):
            enumerate_paths(snake_cat.quiver, "a", "nope")


class TestRelationClosure:
    def test_no_relations_means_free(self, kronecker_cat):
        assert kronecker_cat.relation_subgroup("a", "b").rows == 0
        inv = kronecker_cat.hom_group_lin("a", "b").invariants()
        assert inv == SmithInvariants((), 2)

    def test_snake_full_composite_killed(self, snake_cat):
        rows = snake_cat.relation_subgroup("a", "d")
        assert rows.to_rows() == [[1]]
        assert snake_cat.hom_group_lin("a", "d").is_trivial()

    def test_torsion_hom_set(self, torsion_cat):
        inv = torsion_cat.hom_group_lin("a", "b").invariants().reduced()
        assert inv == SmithInvariants((2,), 0)

    def test_non_parallel_relation_rejected(self):
        q = Quiver(("a", "b", "c"), (Arrow("x", "a", "b"), Arrow("y", "b", "c")))
        with pytest.raises(RelationError):
            make_relation(q, [(1, Path("a", "b", (0,))), (-1, Path("b", "c", (1,)))])

    def test_two_sided_closure_reaches_all_hom_pairs(self, five_cat):
        # beta*zeta = epsilon*iota propagated to Hom(a, g) through alpha
        rows = five_cat.relation_subgroup("a", "g")
        assert rows.rows > 0
        assert five_cat.hom_group_lin("a", "g").is_trivial()


class TestComposition:
    def test_identity_units(self, snake_cat):
        be = snake_cat.arrow_lin("beta")
        assert compose_lin(snake_cat.identity_lin("b"), be) == be
        assert compose_lin(be, snake_cat.identity_lin("c")) == be

    def test_basis_concatenation(self, snake_cat):
        al = snake_cat.arrow_lin("alpha")
        be = snake_cat.arrow_lin("beta")
        ab = compose_lin(al, be)
        assert format_lin(ab) == "alpha*beta"

    def test_relation_kills_composite(self, snake_cat):
        al = snake_cat.arrow_lin("alpha")
        be = snake_cat.arrow_lin("beta")
        ga = snake_cat.arrow_lin("gamma")
        assert compose_lin(compose_lin(al, be), ga).is_zero()

    def test_endpoint_mismatch(self, snake_cat):
        al = snake_cat.arrow_lin("alpha")
        with pytest.raises(EndpointError):
            compose_lin(al, al)

    def test_associativity_and_bilinearity(self, five_cat, kronecker_cat, torsion_cat):
        rng = random.Random(17)
        for cat in (five_cat, kronecker_cat, torsion_cat):
            verts = cat.quiver.vertices
            for _ in range(60):
                a, b, c, d = (rng.choice(verts) for _ in range(4))
                if not (cat.paths(a, b) and cat.paths(b, c) and cat.paths(c, d)):
                    continue
                f = _random_lin(cat, a, b, rng)
                f2 = _random_lin(cat, a, b, rng)
                g = _random_lin(cat, b, c, rng)
                h = _random_lin(cat, c, d, rng)
                assert compose_lin(compose_lin(f, g), h) == compose_lin(f, compose_lin(g, h))
                assert compose_lin(f + f2, g) == compose_lin(f, g) + compose_lin(f2, g)


def _random_lin(cat, a, b, rng):
    n = len(cat.paths(a, b))
    return cat.lin(a, b, [rng.randint(-2, 2) for _ in range(n)])


class TestEquality:
    def test_reflexive(self, snake_cat):
        al = snake_cat.arrow_lin("alpha")
        assert lin_equal(al, al)

    def test_torsion_identification(self, torsion_cat):
        x = torsion_cat.arrow_lin("x")
        assert lin_equal(x, x.scale(3))
        assert not lin_equal(x, x.scale(2))
        assert x.scale(2).is_zero()

    def test_free_hom_set_is_faithful(self, snake_cat):
        al = snake_cat.arrow_lin("alpha")
        assert not lin_equal(al, snake_cat.zero_lin("a", "b"))

    def test_endpoint_mismatch(self, snake_cat):
        with pytest.raises(EndpointError):
            lin_equal(snake_cat.arrow_lin("alpha"), snake_cat.arrow_lin("beta"))


class TestAcyclicityConsequences:
    def test_endomorphisms_are_scalar(self, snake_cat, five_cat):
        for cat in (snake_cat, five_cat):
            for v in cat.quiver.vertices:
                assert len(cat.paths(v, v)) == 1
                assert cat.hom_group_lin(v, v).invariants() == SmithInvariants((), 1)

    def test_no_two_way_morphisms(self, snake_cat, five_cat):
        for cat in (snake_cat, five_cat):
            for a in cat.quiver.vertices:
                for b in cat.quiver.vertices:
                    if a != b:
                        assert not (cat.paths(a, b) and cat.paths(b, a))


class TestDuality:
    def test_opposite_is_involutive(self, snake_cat):
        assert snake_cat.opposite().opposite() is snake_cat

    def test_dual_lin_round_trip(self, five_cat):
        rng = random.Random(3)
        verts = five_cat.quiver.vertices
        for _ in range(40):
            a, b = rng.choice(verts), rng.choice(verts)
            if not five_cat.paths(a, b):
                continue
            f = _random_lin(five_cat, a, b, rng)
            assert dual_lin(dual_lin(f)) == f

    def test_dual_antimultiplicative(self, snake_cat):
        al = snake_cat.arrow_lin("alpha")
        be = snake_cat.arrow_lin("beta")
        left = dual_lin(compose_lin(al, be))
        right = compose_lin(dual_lin(be), dual_lin(al))
        assert left == right

    def test_opposite_relations_respected(self, snake_cat):
        op = snake_cat.opposite()
        assert op.hom_group_lin("d", "a").is_trivial()


def test_format_lin_round_names(snake_cat):
    al = snake_cat.arrow_lin("alpha")
    idb = snake_cat.identity_lin("b")
    assert format_lin(al) == "alpha"
    assert format_lin(idb) == "id(b)"
    assert format_lin(idb.scale(-2)) == "-2*id(b)"
    assert format_lin(snake_cat.zero_lin("a", "b")) == "0"
