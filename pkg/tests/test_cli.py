import json
import subprocess
import sys

import pytest

from choosable import Certificate, Decision, Instance, counterexample_list
from choosable.cli import (
    ParseError,
    emit_decision,
    emit_instance,
    main,
    parse_decision,
    parse_instance,
)
from helpers import L


PATH_DOC = '{"graph":"path","weights":[1,1],"lists":[[1,2],[2,3]]}'
BAD_PATH_DOC = '{"graph":"path","weights":[1,1],"lists":[[1],[1]]}'
COUNTEREXAMPLE_DOC = (
    '{"graph":"cycle","weights":[2,2,2,2],'
    '"lists":[[1,2,3,4],[1,2,3,4],[3,4,5,6],[1,2,5,6]],'
    '"forced":{"vertex":0,"colors":[1,2]}}'
)


class TestParseInstance:
    def test_path_document(self):
        inst = parse_instance(PATH_DOC)
        assert inst == Instance.path((1, 1), L({1, 2}, {2, 3}))

    def test_cycle_too_short(self):
        with pytest.raises(ValueError, match="three vertices"):
            parse_instance('{"graph":"cycle","weights":[1,1],"lists":[[1],[2]]}')

    def test_counterexample_document_matches_generator(self):
        assert parse_instance(COUNTEREXAMPLE_DOC) == counterexample_list(4, 2, 4)

    def test_duplicates_removed_with_warning(self):
        with pytest.warns(UserWarning, match="duplicate colors removed from list 0"):
            inst = parse_instance('{"graph":"path","weights":[1],"lists":[[1,1,2]]}')
        assert inst.lists == (frozenset({1, 2}),)

    def test_invalid_json_reports_position(self):
        with pytest.raises(ParseError, match="line 1 column"):
            parse_instance("{nope}")

    def test_missing_field_named(self):
        with pytest.raises(ParseError, match='"weights"'):
            parse_instance('{"graph":"path","lists":[[1]]}')

    def test_non_integer_color_named(self):
        with pytest.raises(ParseError, match=r"lists\[0\]\[1\]"):
            parse_instance('{"graph":"path","weights":[1],"lists":[[1,"x"]]}')

    def test_forced_requires_cycle(self):
        doc = '{"graph":"path","weights":[1],"lists":[[1]],"forced":{"vertex":0,"colors":[1]}}'
        with pytest.raises(ValueError, match="cycle"):
            parse_instance(doc)

    def test_unknown_graph_kind(self):
        with pytest.raises(ParseError, match='"graph"'):
            parse_instance('{"graph":"tree","weights":[1],"lists":[[1]]}')


class TestEmit:
    def test_colorable_document(self):
        d = Decision(True, coloring=L({1}, {2}))
        assert emit_decision(d) == '{"colorable": true, "coloring": [[1], [2]]}'

    def test_certificate_document(self):
        d = Decision(False, certificate=Certificate(0, 1, 1, 2))
        assert (
            emit_decision(d)
            == '{"colorable": false, "certificate": {"i": 0, "j": 1, "amplitude": 1, "demand": 2}}'
        )

    def test_decision_round_trip(self):
        for d in [
            Decision(True, coloring=L({2, 1}, set(), {5})),
            Decision(False, certificate=Certificate(1, 3, 4, 6)),
        ]:
            assert parse_decision(emit_decision(d)) == d

    def test_instance_round_trip(self):
        for obj in [
            Instance.path((1, 2), L({1, 2}, {3})),
            counterexample_list(4, 2, 4),
        ]:
            assert parse_instance(emit_instance(obj)) == obj


class TestMain:
    def _doc(self, tmp_path, text, name="inst.json"):
        f = tmp_path / name
        f.write_text(text)
        return str(f)

    def test_decide_colorable_exit_zero(self, tmp_path, capsys):
        rc = main(["decide", self._doc(tmp_path, PATH_DOC)])
        out = capsys.readouterr().out
        assert rc == 0
        assert json.loads(out) == {"colorable": True, "coloring": [[1], [2]]}

    def test_decide_not_colorable_exit_one(self, tmp_path, capsys):
        rc = main(["decide", self._doc(tmp_path, BAD_PATH_DOC)])
        assert rc == 1
        assert json.loads(capsys.readouterr().out)["colorable"] is False

    def test_decide_forced_cycle(self, tmp_path, capsys):
        rc = main(["decide", self._doc(tmp_path, COUNTEREXAMPLE_DOC)])
        assert rc == 1
        doc = json.loads(capsys.readouterr().out)
        assert doc["certificate"] == {"i": 0, "j": 4, "amplitude": 8, "demand": 10}

    def test_decide_bare_cycle_is_input_error(self, tmp_path, capsys):
        doc = '{"graph":"cycle","weights":[1,1,1],"lists":[[1],[2],[3]]}'
        rc = main(["decide", self._doc(tmp_path, doc)])
        assert rc == 2
        assert "forced" in capsys.readouterr().err

    def test_parse_error_exit_two(self, tmp_path, capsys):
        rc = main(["decide", self._doc(tmp_path, "{broken")])
        assert rc == 2
        assert "parse error" in capsys.readouterr().err

    def test_missing_file_exit_two(self, capsys):
        rc = main(["decide", "/nonexistent/file.json"])
        assert rc == 2

    def test_internal_invariant_exit_three(self, tmp_path, capsys, monkeypatch):
        import choosable.hall as hall
        from choosable import InternalInvariantError

        def boom(lists, weights):
            raise InternalInvariantError("forced failure")

        monkeypatch.setattr(hall, "construct_coloring_general", boom)
        rc = main(["decide", self._doc(tmp_path, PATH_DOC)])
        assert rc == 3
        assert "internal invariant" in capsys.readouterr().err

    def test_oracle_subcommand(self, tmp_path, capsys):
        doc = '{"graph":"cycle","weights":[1,1,1],"lists":[[1,2],[1,2],[1,2]]}'
        rc = main(["oracle", self._doc(tmp_path, doc)])
        assert rc == 1
        assert json.loads(capsys.readouterr().out)["colorable"] is False

    def test_oracle_budget_exit_two(self, tmp_path, capsys):
        doc = json.dumps(
            {
                "graph": "path",
                "weights": [1] * 6,
                "lists": [[1, 2, 3, 4]] * 6,
            }
        )
        rc = main(["oracle", "--budget", "3", self._doc(tmp_path, doc)])
        assert rc == 2
        assert "budget" in capsys.readouterr().err

    def test_waterfall_subcommand(self, tmp_path, capsys):
        doc = '{"graph":"path","weights":[1,1,1],"lists":[[1],[1,2],[1,3]]}'
        rc = main(["waterfall", self._doc(tmp_path, doc)])
        assert rc == 0
        out = json.loads(capsys.readouterr().out)
        assert out["lists"] == [[1], [1, 2], [3, 4]]
        assert out["report"]["replacements"] == [
            {"old": 1, "new": 4, "start": 2, "end": 2}
        ]
        assert out["report"]["iterations"] == 1

    def test_waterfall_rejects_non_good(self, tmp_path, capsys):
        doc = '{"graph":"path","weights":[1,1,1],"lists":[[1,2,3],[1],[1,2,3]]}'
        assert main(["waterfall", self._doc(tmp_path, doc)]) == 2

    def test_verify_valid_and_invalid(self, tmp_path, capsys):
        inst = self._doc(tmp_path, PATH_DOC)
        good = self._doc(tmp_path, '{"coloring":[[1],[2]]}', "good.json")
        bad = self._doc(tmp_path, "[[2],[2]]", "bad.json")
        assert main(["verify", inst, good]) == 0
        assert json.loads(capsys.readouterr().out) == {"valid": True}
        assert main(["verify", inst, bad]) == 1

    def test_verify_accepts_decision_document(self, tmp_path, capsys):
        inst = self._doc(tmp_path, PATH_DOC)
        main(["decide", inst])
        decision_doc = self._doc(tmp_path, capsys.readouterr().out, "decision.json")
        assert main(["verify", inst, decision_doc]) == 0

    def test_verify_forced_cycle_checks_pin(self, tmp_path, capsys):
        inst = self._doc(tmp_path, COUNTEREXAMPLE_DOC)
        # proper cycle coloring of those lists, but ignoring the forced pin
        unpinned = self._doc(tmp_path, "[[3,4],[1,2],[5,6],[1,2]]", "c.json")
        assert main(["verify", inst, unpinned]) == 1

    def test_fchr_subcommand(self, capsys):
        assert main(["fchr", "--n", "7"]) == 0
        assert json.loads(capsys.readouterr().out) == {"n": 7, "fchr": {"num": 7, "den": 3}}

    def test_free_choosable_exit_codes(self, capsys):
        assert main(["free-choosable", "--a", "5", "--b", "2", "--n", "4"]) == 0
        assert json.loads(capsys.readouterr().out)["free_choosable"] is True
        assert main(["free-choosable", "--a", "7", "--b", "3", "--n", "4"]) == 1

    def test_counterexample_pipes_into_decide_and_oracle(self, tmp_path, capsys):
        assert main(["counterexample", "--a", "4", "--b", "2", "--n", "4"]) == 0
        doc = capsys.readouterr().out
        assert parse_instance(doc) == counterexample_list(4, 2, 4)
        path = self._doc(tmp_path, doc, "ce.json")
        assert main(["decide", path]) == 1
        capsys.readouterr()
        assert main(["oracle", path]) == 1

    def test_counterexample_at_threshold_exit_two(self, capsys):
        assert main(["counterexample", "--a", "5", "--b", "2", "--n", "4"]) == 2

    def test_quiet_suppresses_warnings(self, tmp_path, capsys, recwarn):
        doc = self._doc(tmp_path, '{"graph":"path","weights":[1],"lists":[[1,1]]}')
        rc = main(["--quiet", "decide", doc])
        assert rc == 0
        assert not [w for w in recwarn.list if "duplicate" in str(w.message)]


class TestDeterminism:
    def test_repeated_runs_byte_identical(self, tmp_path, capsys):
        f = tmp_path / "inst.json"
        f.write_text(COUNTEREXAMPLE_DOC)
        outputs = []
        for _ in range(3):
            main(["decide", str(f)])
            outputs.append(capsys.readouterr().out.encode())
        assert outputs[0] == outputs[1] == outputs[2]

    def test_subprocess_runs_byte_identical(self, tmp_path):
        f = tmp_path / "inst.json"
        f.write_text(PATH_DOC)
        runs = [
            subprocess.run(
                [sys.executable, "-m", "choosable", "decide", str(f)],
                capture_output=True,
            )
            for _ in range(2)
        ]
        assert runs[0].stdout == runs[1].stdout
        assert runs[0].returncode == runs[1].returncode == 0
