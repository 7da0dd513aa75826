import io
import subprocess
import sys

import pytest

from posetkit.cli import main
from posetkit.documents import ParseError, parse

DIV6 = """posetkit/1 poset
elements 1 2 3 6
relation cover
pair 1 2
pair 1 3
pair 2 6
pair 3 6
end
"""


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


@pytest.fixture
def div6_file(tmp_path):
    p = tmp_path / "div6.poset"
    p.write_text(DIV6)
    return str(p)


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


# ---------------------------------------------------------------- validate


def test_validate_ok(div6_file):
    code, out = run("validate", div6_file)
    assert code == 0
    assert out.splitlines() == ["nonempty PASS", "reflexivity PASS", "antisymmetry PASS", "transitivity PASS"]


def test_validate_two_cycle(tmp_path):
    f = write(tmp_path, "cyc", "posetkit/1 poset\nelements a b\nrelation cover\npair a b\npair b a\nend\n")
    code, out = run("validate", f)
    assert code == 1
    assert "antisymmetry FAIL (a,b)" in out


def test_validate_truncated(tmp_path):
    f = write(tmp_path, "trunc", DIV6[: DIV6.index("pair 2 6")])
    code, _ = run("validate", f)
    assert code == 3


def test_validate_missing_file(tmp_path):
    assert run("validate", str(tmp_path / "nope"))[0] == 3


def test_validate_duplicate_label(tmp_path):
    f = write(tmp_path, "dup", "posetkit/1 poset\nelements a a\nrelation cover\nend\n")
    assert run("validate", f)[0] == 3


def test_validate_empty_carrier(tmp_path):
    f = write(tmp_path, "empty", "posetkit/1 poset\nelements\nrelation cover\nend\n")
    code, out = run("validate", f)
    assert code == 1 and "nonempty FAIL" in out


# ---------------------------------------------------------------- decompose


def test_decompose_dilworth(div6_file):
    code, out = run("decompose", div6_file, "--theorem", "dilworth", "--method", "perles")
    assert code == 0
    assert "part 1 2 6\npart 3\n" in out
    assert out.rstrip().endswith("width=2 cover=2")


def test_decompose_mirsky(div6_file):
    code, out = run("decompose", div6_file, "--theorem", "mirsky")
    assert code == 0
    assert "part 1\npart 2 3\npart 6\n" in out
    assert out.rstrip().endswith("height=3 cover=3")


def test_decompose_antichain(tmp_path):
    code, gen = run("gen", "--kind", "antichain", "--n", "5")
    f = write(tmp_path, "a5", gen)
    code, out = run("decompose", f)
    assert code == 0
    assert sum(1 for line in out.splitlines() if line.startswith("part ")) == 5


def test_decompose_method_mismatch(div6_file):
    assert run("decompose", div6_file, "--theorem", "mirsky", "--method", "perles")[0] == 3


def test_decompose_invalid_poset(tmp_path):
    f = write(tmp_path, "cyc", "posetkit/1 poset\nelements a b\nrelation cover\npair a b\npair b a\nend\n")
    assert run("decompose", f)[0] == 1


def test_decompose_large_bypasses_perles(tmp_path):
    _, gen = run("gen", "--kind", "random_dag", "--n", "30", "--seed", "3", "--p", "0.1")
    f = write(tmp_path, "big", gen)
    code, out = run("decompose", f)
    assert code == 0
    assert "perles route bypassed" in out and "method matching" in out


def test_decompose_is_canonical(div6_file):
    assert run("decompose", div6_file)[1] == run("decompose", div6_file)[1]


# ---------------------------------------------------------------- verify


def test_verify_roundtrip(tmp_path, div6_file):
    for theorem in ("dilworth", "mirsky"):
        _, out = run("decompose", div6_file, "--theorem", theorem)
        cert = write(tmp_path, f"{theorem}.cert", out)
        code, text = run("verify", div6_file, cert)
        assert code == 0, text
        assert text.startswith("ok\ncertificate:")


def test_verify_missing_element(tmp_path, div6_file):
    cov = write(tmp_path, "c", "posetkit/1 cover\nflavor chains\npart 1 2 6\nend\n")
    code, out = run("verify", div6_file, cov)
    assert code == 2
    assert "NotACover: element 3 uncovered" in out


def test_verify_pigeonhole(tmp_path, div6_file):
    cov = write(tmp_path, "c", "posetkit/1 cover\nflavor chains\npart 1 2 3 6\nend\n")
    wit = write(tmp_path, "w", "posetkit/1 witness\nrole antichain\nmembers 2 3\nend\n")
    code, out = run("verify", div6_file, cov, "--witness", wit)
    assert code == 2
    assert out.startswith("NotAChain: part 0 is not a chain (2, 3)")


def test_verify_bound_only(tmp_path, div6_file):
    cov = write(tmp_path, "c", "posetkit/1 cover\nflavor chains\npart 1 2 6\npart 3\nend\n")
    wit = write(tmp_path, "w", "posetkit/1 witness\nrole antichain\nmembers 6\nend\n")
    code, out = run("verify", div6_file, cov, "--witness", wit)
    assert code == 0 and "bound: witness=1 <= cover=2" in out


def test_verify_unknown_label(tmp_path, div6_file):
    cov = write(tmp_path, "c", "posetkit/1 cover\nflavor chains\npart 1 2 7\nend\n")
    assert run("verify", div6_file, cov)[0] == 3


# ---------------------------------------------------------------- hasse


def test_hasse_divisor(div6_file):
    code, out = run("hasse", div6_file)
    assert code == 0
    edges = [line.strip() for line in out.splitlines() if "->" in line]
    assert edges == ['"1" -> "2";', '"1" -> "3";', '"2" -> "6";', '"3" -> "6";']
    assert sum(1 for line in out.splitlines() if line.strip().endswith('";') and "->" not in line) == 4


def test_hasse_chain_and_antichain(tmp_path):
    _, chain = run("gen", "--kind", "total_order", "--n", "3")
    out = run("hasse", write(tmp_path, "t", chain))[1]
    assert [line.strip() for line in out.splitlines() if "->" in line] == ['"0" -> "1";', '"1" -> "2";']
    _, anti = run("gen", "--kind", "antichain", "--n", "3")
    assert "->" not in run("hasse", write(tmp_path, "a", anti))[1]


# ---------------------------------------------------------------- gen


def test_gen_divisor():
    code, out = run("gen", "--kind", "divisor", "--n", "6")
    assert code == 0 and out == DIV6


def test_gen_deterministic():
    a = run("gen", "--kind", "random_dag", "--n", "8", "--seed", "42", "--p", "0.3")[1]
    b = run("gen", "--kind", "random_dag", "--n", "8", "--seed", "42", "--p", "0.3")[1]
    assert a == b


def test_gen_cube():
    out = run("gen", "--kind", "boolean_lattice", "--n", "3")[1]
    doc = parse(out)[0]
    assert len(doc.elements) == 8 and len(doc.pairs) == 12


def test_gen_bad_params():
    assert run("gen", "--kind", "random_dag", "--n", "0")[0] == 3
    assert run("gen", "--kind", "random_dag", "--n", "4", "--p", "2")[0] == 3
    assert run("gen", "--kind", "wat", "--n", "4")[0] == 3


def test_usage_error():
    assert run()[0] == 3


# ---------------------------------------------------------------- format


def test_parse_rejects_garbage():
    with pytest.raises(ParseError):
        parse("hello\n")
    with pytest.raises(ParseError):
        parse("posetkit/1 poset\nelements a\nrelation sideways\nend\n")
    with pytest.raises(ParseError):
        parse("")


def test_console_script(div6_file):
    proc = subprocess.run(
        [sys.executable, "-m", "posetkit.cli", "decompose", div6_file],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "width=2 cover=2" in proc.stdout
