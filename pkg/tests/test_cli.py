import json
import subprocess
import sys

import pytest

from systolic.arborescent import hex_disk
from systolic.cli import RunConfig, main, run
from systolic.core import from_facets, full_simplex
from systolic.corpus import octahedron
from systolic.dot import chain_dot, hasse_dot, node_id
from systolic.errors import InputError, MalformedInput
from systolic.formats import dumps, parse_facets, read_complex, write_complex
from systolic.morse import gradient_matching, replay
from systolic.verify import full_cycles_shorter_than


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, K in [("octahedron", octahedron()), ("hexdisk2", hex_disk(2)),
                    ("hexdisk3", hex_disk(3)), ("triangle", full_simplex(2))]:
        p = tmp_path / f"{name}.facets"
        write_complex(K, p, comment=name)
        out[name] = str(p)
    return out


def call(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestFormats:
    def test_text_and_json_agree(self, tmp_path):
        K = hex_disk(1)
        write_complex(K, tmp_path / "a.facets", comment="disk")
        write_complex(K, tmp_path / "a.json")
        assert read_complex(tmp_path / "a.facets") == read_complex(tmp_path / "a.json") == K
        assert (tmp_path / "a.facets").read_text().startswith("# disk\n")

    def test_comments_and_blank_lines(self):
        assert parse_facets("# c\n\n0 1 2\n 2 3 \n") == [[0, 1, 2], [2, 3]]

    @pytest.mark.parametrize("text", ["0 x\n", '{"facets": 3}', "{bad json"])
    def test_malformed(self, text):
        with pytest.raises(MalformedInput):
            parse_facets(text)

    def test_dumps_is_canonical(self):
        assert dumps({"b": 1, "a": [2]}) == '{"a": [2], "b": 1}\n'


class TestDot:
    def test_node_ids(self):
        assert node_id((0, 1, 2)) == "0-1-2"

    def test_hasse_matched_edges_reversed(self):
        K = full_simplex(2)
        V = gradient_matching(K, 0)
        text = hasse_dot(K, V.pairs, V.critical)
        assert text.startswith("digraph hasse {")
        assert '"0-1" -> "1" [style=bold' in text
        assert '"0" -> "0-1" [color=gray]' in text
        assert '"0" [label="{0}", peripheries=2]' in text

    def test_chain(self):
        text = chain_dot([[(0,), (1, 2), (3,)]])
        assert '"0" -> "1-2";' in text and '"1-2" -> "3";' in text


class TestCommands:
    def test_check_octahedron(self, files, capsys):
        code, out, _ = call(["check", "--k", "6", files["octahedron"]], capsys)
        assert code == 1
        report = json.loads(out)
        cyc = report["k_large"]["witness_cycle"]
        assert len(cyc) == 4
        # the witness re-verifies with the library alone
        K = read_complex(files["octahedron"])
        assert sorted(cyc) in [sorted(c) for c in full_cycles_shorter_than(K, 5)]

    def test_check_hexdisk(self, files, capsys):
        code, out, _ = call(["check", files["hexdisk3"]], capsys)
        assert code == 0 and json.loads(out)["verdict"] is True

    def test_collapse(self, files, capsys, tmp_path):
        target = tmp_path / "seq.json"
        code, _, _ = call(["collapse", "--base", "0", "-o", str(target), files["hexdisk2"]], capsys)
        assert code == 0
        report = json.loads(target.read_text())
        assert report["final"] == [0]
        seq = [(tuple(s), tuple(t)) for s, t in report["sequence"]]
        assert replay(hex_disk(2), seq).faces == {(0,)}

    def test_geodesic(self, files, capsys):
        code, out, _ = call(["geodesic", "--from", "0", "--to", "7", files["hexdisk3"]], capsys)
        report = json.loads(out)
        assert code == 0 and report["geodesic"] == [[0], [1], [7]]
        assert report["is_directed_geodesic"]

    def test_morse_text(self, files, capsys):
        code, out, _ = call(["morse", "--base", "0", "--format", "text", files["triangle"]], capsys)
        assert code == 0 and "[1, 2] -> [0, 1, 2]" in out and "critical: [[0]]" in out

    def test_morse_lemma_violation(self, files, capsys):
        code, out, err = call(["morse", "--base", "0", files["octahedron"]], capsys)
        assert code == 3 and json.loads(out)["error"] == "LemmaViolation"
        assert "consistency error" in err

    def test_balls(self, files, capsys):
        code, out, _ = call(["balls", "--base", "0", "--radius", "2", files["hexdisk3"]], capsys)
        report = json.loads(out)
        assert code == 0 and [len(lv["vertices"]) for lv in report["levels"]] == [1, 7, 19]

    def test_filtration(self, capsys):
        code, out, _ = call(["filtration", "--hex-plane", "--radius", "2", "--format", "text"], capsys)
        assert code == 0 and "verdict: True" in out

    def test_filtration_files(self, files, capsys, tmp_path):
        p = tmp_path / "hex1.facets"
        write_complex(hex_disk(1), p)
        code, out, _ = call(["filtration", str(p), files["hexdisk2"]], capsys)
        assert code == 0 and json.loads(out)["verdict"]

    def test_export_dot(self, files, capsys):
        code, out, _ = call(["export-dot", "--base", "0", files["triangle"]], capsys)
        assert code == 0 and out.startswith("digraph hasse")
        code, out, _ = call(["export-dot", "--from", "0", "--to", "7", files["hexdisk3"]], capsys)
        assert code == 0 and out.startswith("digraph geodesic")

    def test_deterministic_bytes(self, files, tmp_path):
        outs = []
        for i in range(2):
            target = tmp_path / f"morse{i}.json"
            assert main(["morse", "--base", "3", "-o", str(target), files["hexdisk3"]]) == 0
            outs.append(target.read_bytes())
        assert outs[0] == outs[1]


class TestErrors:
    def test_missing_file(self, capsys):
        code, _, err = call(["check", "/nonexistent.facets"], capsys)
        assert code == 2 and "error" in err

    def test_unknown_vertex(self, files, capsys):
        code, _, _ = call(["collapse", "--base", "99", files["triangle"]], capsys)
        assert code == 2

    def test_small_k(self, files, capsys):
        assert call(["check", "--k", "3", files["triangle"]], capsys)[0] == 2

    def test_unreachable_geodesic(self, tmp_path, capsys):
        p = tmp_path / "two.facets"
        p.write_text("0 1\n2 3\n")
        assert call(["geodesic", "--from", "0", "--to", "3", str(p)], capsys)[0] == 2

    def test_no_dot_for_check(self, files, capsys):
        assert call(["check", "--format", "dot", files["triangle"]], capsys)[0] == 2

    def test_config_validation(self):
        with pytest.raises(InputError):
            RunConfig("balls", ["x"]).validate()
        with pytest.raises(InputError):
            RunConfig("filtration").validate()
        assert run(RunConfig("nope", ["x"])) == 2

    def test_usage_error_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["collapse"])
        assert exc.value.code == 2


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "systolic", "check", files["triangle"]],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["verdict"]
