import os

import pytest

from gcdperm.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_generate_csv(capsys):
    code, out, _ = run(capsys, "generate", "--a", "3", "--n", "24")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,f_n"
    assert len(lines) == 25
    assert lines[1] == "1,1" and lines[2] == "2,3" and lines[24] == "24,25"


def test_generate_identity_seed(capsys):
    code, out, _ = run(capsys, "generate", "--a", "2", "--n", "5")
    assert code == 0
    assert out.splitlines()[1:] == ["1,1", "2,2", "3,3", "4,4", "5,5"]


def test_generate_f36_tail(capsys):
    code, out, _ = run(capsys, "generate", "--a", "36", "--n", "38")
    assert code == 0
    lines = out.splitlines()
    assert lines[-2] == "37,35" and lines[-1] == "38,38"


def test_generate_plain_and_derivative(tmp_path, capsys):
    plain = tmp_path / "f3.txt"
    code, _, _ = run(capsys, "generate", "--a", "3", "--n", "10", "--format", "plain",
                     "--out", str(plain))
    assert code == 0
    assert plain.read_text().splitlines()[:3] == ["1 1", "2 3", "3 2"]

    code, out, _ = run(capsys, "generate", "--a", "3", "--n", "8", "--with-derivative")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,f_n,g_n"
    assert lines[7] == "7,6,5"  # g(7) = 11 - 6
    assert len(lines) == 9


def test_generate_deterministic(tmp_path, capsys):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    run(capsys, "generate", "--a", "3", "--n", "500", "--out", str(a))
    run(capsys, "generate", "--a", "3", "--n", "500", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_records_csv(capsys):
    code, out, _ = run(capsys, "records", "--limit", "31")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "index,record,turning_point,jump,is_composite"
    assert lines[1] == "1,5,4,1,0"
    assert lines[8] == "8,25,24,1,1"
    assert len(lines) == 11


def test_records_cache_roundtrip(tmp_path, capsys):
    cache = tmp_path / "cache.txt"
    csv1 = tmp_path / "r1.csv"
    csv2 = tmp_path / "r2.csv"
    code, _, _ = run(capsys, "records", "--limit", "500", "--cache", str(cache),
                     "--out", str(csv1))
    assert code == 0 and cache.exists()
    first_cache = cache.read_bytes()
    # second run consumes the cache and must produce identical downstream CSV
    code, _, _ = run(capsys, "records", "--limit", "500", "--cache", str(cache),
                     "--out", str(csv2))
    assert code == 0
    assert csv1.read_bytes() == csv2.read_bytes()
    assert cache.read_bytes() == first_cache
    # growing the limit extends the cached chain in place
    code, _, _ = run(capsys, "records", "--limit", "1000", "--cache", str(cache),
                     "--out", str(csv2))
    assert code == 0
    assert cache.read_text().splitlines()[-1] == "997"


def test_records_cache_env(tmp_path, capsys, monkeypatch):
    cache = tmp_path / "env-cache.txt"
    monkeypatch.setenv("GCDPERM_CACHE", str(cache))
    code, _, _ = run(capsys, "records", "--limit", "100")
    assert code == 0
    assert cache.exists()


@pytest.mark.parametrize(
    "suite,flags",
    [
        ("thm1", ["--limit", "2000"]),
        ("cor1", ["--limit", "2000"]),
        ("prop1", ["--limit", "1000"]),
        ("prop2", ["--limit", "1000"]),
        ("prop3", []),
        ("thm2", ["--bound", "99"]),
        ("thm3", ["--bound", "120"]),
        ("thm4", ["--bound", "120"]),
        ("thm5", ["--n", "3"]),
        ("thm6", ["--n", "3"]),
        ("thm7", ["--n", "3"]),
        ("thm8-recurrence", ["--n", "4"]),
        ("thm10", ["--bound", "120"]),
        ("cor2", []),
    ],
)
def test_verify_suites_pass(capsys, suite, flags):
    code, out, _ = run(capsys, "verify", suite, *flags)
    assert code == 0, out
    assert "FAIL" not in out
    assert "checks passed" in out


def test_verify_thm6_n4(capsys):
    code, out, _ = run(capsys, "verify", "thm6", "--n", "4")
    assert code == 0
    assert "maximal range k in [9, 2101]" in out


def test_verify_unknown_suite(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nope"])
    assert exc.value.code == 2


def test_diff_bfile_agreement(tmp_path, capsys):
    bfile = tmp_path / "b.txt"
    run(capsys, "generate", "--a", "3", "--n", "100", "--format", "plain",
        "--out", str(bfile))
    code, out, _ = run(capsys, "diff-bfile", str(bfile), "--a", "3")
    assert code == 0
    assert "agreement: 100 terms" in out


def test_diff_bfile_ten_thousand_terms(tmp_path, capsys):
    bfile = tmp_path / "b10000.txt"
    run(capsys, "generate", "--a", "3", "--n", "10000", "--format", "plain",
        "--out", str(bfile))
    code, out, _ = run(capsys, "diff-bfile", str(bfile), "--a", "3")
    assert code == 0
    assert "agreement: 10000 terms" in out


def test_diff_bfile_comments_and_empty(tmp_path, capsys):
    bfile = tmp_path / "b.txt"
    bfile.write_text("# comment\n\n1 1\n2 3\n")
    code, out, _ = run(capsys, "diff-bfile", str(bfile))
    assert code == 0 and "agreement: 2 terms" in out

    empty = tmp_path / "empty.txt"
    empty.write_text("# only a comment\n")
    code, _, err = run(capsys, "diff-bfile", str(empty))
    assert code == 0
    assert "warning" in err


def test_diff_bfile_tamper(tmp_path, capsys):
    bfile = tmp_path / "b.txt"
    run(capsys, "generate", "--a", "3", "--n", "100", "--format", "plain",
        "--out", str(bfile))
    lines = bfile.read_text().splitlines()
    n, v = lines[56].split()
    lines[56] = f"{n} {int(v) + 1}"
    bfile.write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, "diff-bfile", str(bfile))
    assert code == 1
    assert "mismatch at n=57" in out


def test_diff_bfile_offset_and_from(tmp_path, capsys):
    shifted = tmp_path / "shifted.txt"
    buf_lines = [f"{i + 5} {v}" for i, v in enumerate([1, 3, 2, 5, 4, 7, 6, 11], start=1)]
    shifted.write_text("\n".join(buf_lines) + "\n")
    code, out, _ = run(capsys, "diff-bfile", str(shifted), "--offset", "-5")
    assert code == 0 and "agreement: 8 terms" in out

    head_diff = tmp_path / "head.txt"
    head_diff.write_text("1 9\n2 9\n3 9\n4 5\n5 4\n6 7\n")
    code, _, _ = run(capsys, "diff-bfile", str(head_diff))
    assert code == 1
    code, out, _ = run(capsys, "diff-bfile", str(head_diff), "--from", "4")
    assert code == 0 and "agreement: 3 terms" in out


def test_diff_bfile_malformed(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("1 1\n2 3 9\n")
    code, _, err = run(capsys, "diff-bfile", str(bad))
    assert code == 3
    assert "bad.txt:2" in err

    missing = tmp_path / "missing.txt"
    code, _, err = run(capsys, "diff-bfile", str(missing))
    assert code == 3


def test_export_figures(tmp_path, capsys):
    out_dir = tmp_path / "figs"
    code, out, _ = run(capsys, "export-figures", "fig2", "--out-dir", str(out_dir),
                       "--limit", "200")
    assert code == 0
    lines = (out_dir / "fig2.csv").read_text().splitlines()
    assert lines[0] == "t,g_t"
    assert len(lines) == 201
    assert lines[7] == "7,5"  # g(7) = 11 - 6

    code, _, _ = run(capsys, "export-figures", "fig1", "--out-dir", str(out_dir),
                     "--limit", "100")
    assert code == 0
    lines = (out_dir / "fig1.csv").read_text().splitlines()
    assert lines[0] == "j,m_j,M_j,gap_a,gap_b"
    assert lines[2] == "2,5,7,1,3"

    code, _, _ = run(capsys, "export-figures", "fig3", "--out-dir", str(out_dir),
                     "--limit", "50")
    lines = (out_dir / "fig3.csv").read_text().splitlines()
    assert lines[0] == "n,ratio_ln" and len(lines) == 51

    code, _, _ = run(capsys, "export-figures", "fig4", "--out-dir", str(out_dir),
                     "--limit", "50")
    lines = (out_dir / "fig4.csv").read_text().splitlines()
    assert lines[0] == "n,primes_among_records" and len(lines) == 51


def test_export_deterministic(tmp_path, capsys):
    d1 = tmp_path / "one"
    d2 = tmp_path / "two"
    for d in (d1, d2):
        code, _, _ = run(capsys, "export-figures", "all", "--out-dir", str(d),
                         "--limit", "60")
        assert code == 0
    for name in ("fig1.csv", "fig2.csv", "fig3.csv", "fig4.csv"):
        assert (d1 / name).read_bytes() == (d2 / name).read_bytes()


def test_scan_csv(tmp_path, capsys):
    out = tmp_path / "scan.csv"
    code, _, _ = run(capsys, "scan", "--bound", "40", "--out", str(out))
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "a,verdict,witness,record_test,primorial_test,agree"
    assert lines[1] == "2,identity,1,1,1,1"
    rows = {line.split(",")[0]: line for line in lines[1:]}
    assert rows["36"] == "36,identity,38,1,1,1"


def test_io_error_exit_code(tmp_path, capsys):
    target = tmp_path / "no" / "such" / "dir" / "out.csv"
    code, _, err = run(capsys, "generate", "--a", "3", "--n", "5", "--out", str(target))
    assert code == 3
    assert err


def test_cap_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("GCDPERM_MAX_TERMS", "100")
    code, _, err = run(capsys, "generate", "--a", "3", "--n", "200")
    assert code == 2
    assert "cap" in err


def test_verify_budget_exhaustion_exit_codes(capsys):
    # a budget too small to certify anything: thm2 propagates as usage,
    # thm3 surfaces the undecided seeds as a failing check
    code, _, err = run(capsys, "verify", "thm2", "--bound", "9", "--budget", "3")
    assert code == 2
    assert "budget" in err
    code, out, _ = run(capsys, "verify", "thm3", "--bound", "120", "--budget", "3")
    assert code == 1
    assert "FAIL" in out
