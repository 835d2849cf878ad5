import json

import pytest

from adelcat.cli import (
    ParseError,
    Session,
    parse_category,
    parse_representation,
    parse_session,
    print_spec,
    run_command,
)

SNAKE_SRC = """
category snake {
  objects a b c d;
  arrows alpha: a -> b; beta: b -> c; gamma: c -> d;
  relations alpha*beta*gamma = 0;
}
object K = (alpha | beta*gamma);
object C = (alpha*beta | gamma);
let ab = alpha*beta;
"""


@pytest.fixture()
def snake_file(tmp_path):
    path = tmp_path / "snake.cat"
    path.write_text(SNAKE_SRC)
    return str(path)


@pytest.fixture()
def session():
    return Session(parse_session(SNAKE_SRC))


class TestParser:
    def test_round_trip(self):
        spec = parse_category(SNAKE_SRC)
        assert parse_category(print_spec(spec)) == spec

    def test_round_trip_with_two_sided_relation(self):
        src = """
        category five {
          objects b c f g;
          arrows beta: b -> c; epsilon: b -> f; zeta: c -> g; iota: f -> g;
          relations beta*zeta = epsilon*iota;
        }
        """
        spec = parse_category(src)
        assert parse_category(print_spec(spec)) == spec
        assert len(spec.relations[0]) == 2  # moved to one side

    def test_syntax_error_has_position(self):
        with pytest.raises(ParseError) as err:
            parse_category("category x {\n  objects a b\n}")
        assert "3:" in str(err.value)

    def test_cyclic_quiver_rejected(self):
        src = """
        category loop {
          objects a b;
          arrows f: a -> b; g: b -> a;
        }
        """
        from adelcat.quivercat import CyclicQuiverError
        with pytest.raises(CyclicQuiverError):
            Session(parse_session(src))

    def test_non_parallel_relation_rejected(self):
        src = """
        category bad {
          objects a b c;
          arrows f: a -> b; g: b -> c;
          relations f = g;
        }
        """
        from adelcat.quivercat import RelationError
        with pytest.raises(RelationError):
            Session(parse_session(src))

    def test_integer_coefficients(self, session):
        lin = session.parse_expr_text("2*alpha*beta - alpha*beta")
        assert lin == session.cat.lin("a", "c", [1])

    def test_zero_via_cancellation(self, session):
        lin = session.parse_expr_text("alpha*beta - alpha*beta")
        assert lin.is_zero()

    def test_let_names_resolve(self, session):
        assert session.parse_expr_text("ab") == session.cat.lin("a", "c", [1])

    def test_identity_factor(self, session):
        lin = session.parse_expr_text("id(b)*beta")
        assert lin == session.cat.lin("b", "c", [1])

    def test_object_forms(self, session):
        assert session.parse_object_text("b").middle.summands == ("b",)
        assert session.parse_object_text("emb(b)").middle.summands == ("b",)
        assert session.parse_object_text("zero").middle.summands == ()
        k = session.parse_object_text("K")
        assert k.middle.summands == ("b",)
        triple = session.parse_object_text("(alpha | beta*gamma)")
        assert triple == k
        ker_style = session.parse_object_text("(| beta)")
        assert ker_style.rel_source.summands == ()
        cok_style = session.parse_object_text("(beta |)")
        assert cok_style.corel_target.summands == ()

    def test_mismatched_triple(self, session):
        from adelcat.quivercat import RelationError
        with pytest.raises(RelationError):
            session.parse_object_text("(alpha | gamma)")


class TestRepresentationFiles:
    def test_parse_and_validate(self, session):
        text = """
        # snake with multiplication by two
        rank a = 1
        rank b = 1
        rank c = 1
        rank d = 1
        matrix alpha = [[2]]
        """
        rep = parse_representation(session, text)
        assert rep.matrices["alpha"].to_rows() == [[2]]
        assert rep.matrices["beta"].is_zero()

    def test_malformed_matrix(self, session):
        with pytest.raises(ParseError):
            parse_representation(session, "rank a = 1\nmatrix alpha = [[oops]]")

    def test_unknown_line(self, session):
        with pytest.raises(ParseError):
            parse_representation(session, "ranks a = 1")


class TestCommands:
    def test_prove_snake_passes(self, capsys):
        code = run_command(["prove", "snake"])
        out = capsys.readouterr().out
        assert code == 0
        assert "verdict: pass" in out

    def test_prove_snake_json(self, capsys):
        code = run_command(["prove", "snake", "--json", "--seed", "0"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["command"] == "prove"
        assert payload["verdict"] is True
        assert payload["inputs"]["seed"] == 0
        assert "timings" not in payload

    def test_json_requires_seed(self, capsys):
        code = run_command(["prove", "snake", "--json"])
        assert code == 2

    def test_json_byte_stability(self, capsys):
        run_command(["sweep", "--range", "-2..2", "--json", "--seed", "7"])
        first = capsys.readouterr().out
        run_command(["sweep", "--range", "-2..2", "--json", "--seed", "7"])
        second = capsys.readouterr().out
        assert first == second

    def test_timings_attached_on_request(self, capsys):
        code = run_command(["prove", "uniqueness", "--json", "--seed", "1", "--timings"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert "timings" in payload and "seconds" in payload["timings"]

    def test_sweep_results_map(self, capsys):
        code = run_command(["sweep", "--range", "-3..3", "--json", "--seed", "0"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["results"] == {
            "-3": False, "-2": False, "-1": True, "0": False,
            "1": True, "2": False, "3": False}

    def test_mutated_snake_fails_with_exit_one(self, capsys):
        code = run_command(["prove", "snake", "--connecting-scale", "2"])
        assert code == 1

    def test_hom_group_dowker(self, snake_file, capsys):
        code = run_command(["hom-group", "K", "C", "--category", snake_file,
                            "--json", "--seed", "0"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["invariant_factors"] == []
        assert payload["free_rank"] == 1
        assert len(payload["generators"]) == 1

    def test_check_equal(self, snake_file, capsys):
        code = run_command(["check-equal", "beta", "beta",
                            "--source", "K", "--target", "C",
                            "--category", snake_file])
        assert code == 0
        code = run_command(["check-equal", "beta", "0 - beta",
                            "--source", "K", "--target", "C",
                            "--category", snake_file])
        assert code == 1

    def test_kernel_cokernel(self, snake_file, capsys):
        code = run_command(["kernel", "beta", "--source", "b", "--target", "c",
                            "--category", snake_file, "--json", "--seed", "0"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["object"]["corel"]["entries"] == [[[1]]]
        code = run_command(["cokernel", "alpha", "--source", "a", "--target", "b",
                            "--category", snake_file])
        assert code == 0

    def test_is_exact(self, snake_file, capsys):
        code = run_command(["is-exact", "id(b)", "beta",
                            "--objects", "(| beta)", "b", "c",
                            "--category", snake_file])
        assert code == 0

    def test_is_exact_composite_error(self, snake_file, capsys):
        code = run_command(["is-exact", "alpha", "beta",
                            "--objects", "a", "b", "c",
                            "--category", snake_file])
        assert code == 2

    def test_predicates(self, snake_file, capsys):
        assert run_command(["is-mono", "id(c)", "--source", "(| gamma)",
                            "--target", "c", "--category", snake_file]) == 0
        assert run_command(["is-epi", "beta", "--source", "b", "--target", "c",
                            "--category", snake_file]) == 1
        assert run_command(["is-iso", "id(b)", "--source", "b", "--target", "b",
                            "--category", snake_file]) == 0

    def test_connecting(self, snake_file, capsys):
        code = run_command(["connecting", "alpha", "beta", "gamma",
                            "--category", snake_file, "--json", "--seed", "0"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["morphism"]["datum"]["entries"] == [[[1]]]

    def test_homology_command(self, snake_file, capsys):
        code = run_command(["homology", "alpha", "beta",
                            "--objects", "a", "b", "c",
                            "--category", snake_file])
        assert code == 0

    def test_eval_command(self, snake_file, tmp_path, capsys):
        rep = tmp_path / "rep.txt"
        rep.write_text("rank a = 1\nrank b = 1\nrank c = 1\nrank d = 1\n"
                       "matrix alpha = [[2]]\n")
        code = run_command(["eval", "--rep", str(rep), "--object", "(alpha |)",
                            "--category", snake_file, "--json", "--seed", "0"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["invariant_factors"] == [2]
        assert payload["free_rank"] == 0

    def test_eval_invalid_representation(self, snake_file, tmp_path, capsys):
        rep = tmp_path / "rep.txt"
        rep.write_text("rank a = 1\nrank b = 1\nrank c = 1\nrank d = 1\n"
                       "matrix alpha = [[1]]\nmatrix beta = [[1]]\nmatrix gamma = [[1]]\n")
        code = run_command(["eval", "--rep", str(rep), "--category", snake_file])
        assert code == 1

    def test_unknown_morphism_name(self, snake_file, capsys):
        code = run_command(["kernel", "nope", "--source", "b", "--target", "c",
                            "--category", snake_file])
        assert code == 2

    def test_missing_category(self, capsys):
        code = run_command(["kernel", "beta", "--source", "b", "--target", "c"])
        assert code == 2

    def test_unreadable_category_path(self, capsys):
        code = run_command(["kernel", "beta", "--source", "b", "--target", "c",
                            "--category", "/nonexistent/x.cat"])
        assert code == 2

    def test_usage_error_exit_two(self, capsys):
        assert run_command(["kernel"]) == 2
        assert run_command(["frobnicate"]) == 2

    def test_prove_d4(self, capsys):
        assert run_command(["prove", "d4"]) == 0
