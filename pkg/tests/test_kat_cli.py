"""KAT file format and command-line behavior."""

import pytest

from scabbard import kat
from scabbard.cli import main
from scabbard.params import params_by_name

MASTER = "ab" * 32


def test_kat_two_runs_identical():
    p = params_by_name("sable", "low")
    a = kat.format_file(p, kat.generate(p, bytes.fromhex(MASTER), 4))
    b = kat.format_file(p, kat.generate(p, bytes.fromhex(MASTER), 4))
    assert a == b


def test_kat_header_and_fields():
    p = params_by_name("espada", "high")
    text = kat.format_file(p, kat.generate(p, bytes(32), 1))
    lines = text.splitlines()
    assert lines[0] == "# scabbard-kat v1 espada high"
    keys = [line.split(" = ")[0] for line in lines if " = " in line]
    assert keys == ["count", "seed", "pk", "sk", "ct", "ss"]
    # uppercase hex payloads
    payload = lines[3].split(" = ")[1]
    assert payload == payload.upper()


def test_kat_record_derivation_layout():
    seed = kat.record_seeds(bytes(32), 3)
    assert len(seed) == 128
    # index is little-endian in the stream seed
    assert kat.record_seeds(bytes(32), 3) != kat.record_seeds(bytes(32), 0x0300)


def test_kat_parse_roundtrip():
    p = params_by_name("florete", "low")
    records = kat.generate(p, bytes(32), 3)
    parsed_p, parsed = kat.parse_file(kat.format_file(p, records))
    assert parsed_p is p
    assert parsed == records


def test_kat_verify_catches_any_field(tmp_path):
    p = params_by_name("sable", "medium")
    text = kat.format_file(p, kat.generate(p, bytes.fromhex(MASTER), 2))
    assert kat.verify(text, bytes.fromhex(MASTER)) == 2
    # flip one hex digit inside the ct field of record 1
    lines = text.splitlines()
    idx = [i for i, line in enumerate(lines) if line.startswith("ct = ")][1]
    payload = lines[idx].split(" = ")[1]
    flipped = ("0" if payload[10] != "0" else "1")
    lines[idx] = "ct = " + payload[:10] + flipped + payload[11:]
    with pytest.raises(kat.KatMismatch) as err:
        kat.verify("\n".join(lines), bytes.fromhex(MASTER))
    assert err.value.field == "ct"
    assert err.value.count == 1


# ---------------------------------------------------------------------------
# CLI


def test_cli_roundtrip_all_sets(tmp_path, scheme_params):
    p = scheme_params
    scheme = p.scheme_id.scheme.value
    level = p.scheme_id.level.value
    pk, sk = tmp_path / "pk", tmp_path / "sk"
    ct, ss1, ss2 = tmp_path / "ct", tmp_path / "ss1", tmp_path / "ss2"
    base = ["--scheme", scheme, "--level", level]
    assert main(["keygen", *base, "--pk", str(pk), "--sk", str(sk)]) == 0
    assert pk.stat().st_size == p.pk_bytes
    assert sk.stat().st_size == p.sk_bytes
    assert main(["encaps", *base, "--pk", str(pk), "--ct", str(ct),
                 "--ss", str(ss1)]) == 0
    assert ct.stat().st_size == p.ct_bytes
    assert main(["decaps", *base, "--sk", str(sk), "--ct", str(ct),
                 "--ss", str(ss2)]) == 0
    assert ss1.read_bytes() == ss2.read_bytes()


def test_cli_deterministic_keygen(tmp_path):
    base = ["keygen", "--scheme", "sable", "--level", "medium",
            "--seed-a", "00" * 32, "--seed-s", "11" * 32, "--z", "22" * 32]
    p1, s1 = tmp_path / "p1", tmp_path / "s1"
    p2, s2 = tmp_path / "p2", tmp_path / "s2"
    assert main(base + ["--pk", str(p1), "--sk", str(s1)]) == 0
    assert main(base + ["--pk", str(p2), "--sk", str(s2)]) == 0
    assert p1.read_bytes() == p2.read_bytes()
    assert s1.read_bytes() == s2.read_bytes()


def test_cli_partial_seeds_rejected(tmp_path):
    with pytest.raises(SystemExit) as err:
        main(["keygen", "--scheme", "sable", "--level", "low",
              "--seed-a", "00" * 32,
              "--pk", str(tmp_path / "pk"), "--sk", str(tmp_path / "sk")])
    assert err.value.code == 2


def test_cli_truncated_ct_exit_2(tmp_path):
    base = ["--scheme", "sable", "--level", "low"]
    pk, sk = tmp_path / "pk", tmp_path / "sk"
    main(["keygen", *base, "--pk", str(pk), "--sk", str(sk)])
    bad_ct = tmp_path / "ct"
    bad_ct.write_bytes(bytes(100))
    code = main(["decaps", *base, "--sk", str(sk), "--ct", str(bad_ct),
                 "--ss", str(tmp_path / "ss")])
    assert code == 2


def test_cli_sizes_output(capsys):
    assert main(["sizes"]) == 0
    out = capsys.readouterr().out
    assert "florete medium 896 1152 1248" in out
    assert len(out.strip().splitlines()) == 9


def test_cli_kat_generate_verify_edit(tmp_path, capsys):
    path = tmp_path / "vectors.kat"
    base = ["--scheme", "florete", "--level", "low", "--master-seed", MASTER]
    assert main(["kat", str(path), *base, "--count", "2"]) == 0
    first = path.read_text()
    assert main(["kat", str(path), *base, "--count", "2"]) == 0
    assert path.read_text() == first
    assert main(["kat-verify", str(path), "--master-seed", MASTER]) == 0
    # one hex digit edit must fail verification, naming the field
    text = first.replace("pk = ", "pk = ", 1)
    pos = text.index("pk = ") + 5
    swap = "0" if text[pos] != "0" else "1"
    (tmp_path / "vectors.kat").write_text(text[:pos] + swap + text[pos + 1:])
    capsys.readouterr()
    assert main(["kat-verify", str(path), "--master-seed", MASTER]) == 1
    assert "pk" in capsys.readouterr().err


def test_cli_kat_count_validation(tmp_path):
    with pytest.raises(SystemExit) as err:
        main(["kat", str(tmp_path / "k"), "--scheme", "sable", "--level", "low",
              "--master-seed", MASTER, "--count", "0"])
    assert err.value.code == 2


def test_cli_bench_iters_validation():
    with pytest.raises(SystemExit) as err:
        main(["bench", "--iters", "0"])
    assert err.value.code == 2


def test_cli_bench_runs(capsys):
    assert main(["bench", "--scheme", "sable", "--level", "low",
                 "--iters", "2", "--backend", "auto"]) == 0
    out = capsys.readouterr().out
    lines = out.strip().splitlines()
    assert len(lines) == 3
    for op in ("keygen", "encaps", "decaps"):
        assert any(f" {op} " in line and line.endswith("ns") for line in lines)


def test_cli_bad_scheme_rejected():
    with pytest.raises(SystemExit) as err:
        main(["keygen", "--scheme", "saber", "--level", "low",
              "--pk", "x", "--sk", "y"])
    assert err.value.code == 2
