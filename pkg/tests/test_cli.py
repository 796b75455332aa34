import json

import pytest

from lienardqm.cli import main
from lienardqm.params import AmbiguityParams, PhysicalParams, derive_params


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def test_spectrum_csv_schema_and_values(tmp_path):
    out = tmp_path / "spec.csv"
    code = main(["spectrum", "--omega", "1", "--k", "1", "--alpha", "0",
                 "--gamma", "0", "--n-max", "5", "--output", str(out)])
    assert code == 0
    lines = _read(out).splitlines()
    assert lines[0] == "n,energy,hbar_omega_units"
    energies = [float(line.split(",")[1]) for line in lines[1:]]
    assert energies == [0.5, 1.5, 2.5, 3.5, 4.5, 5.5]


def test_spectrum_constraint_violation_exit_code(tmp_path):
    code = main(["spectrum", "--k", "1", "--alpha", "-9", "--gamma", "9",
                 "--omega", "1", "--output", str(tmp_path / "x.csv")])
    assert code == 2


def test_unknown_flag_exits_2():
    with pytest.raises(SystemExit) as info:
        main(["spectrum", "--frequency", "1"])
    assert info.value.code == 2


def test_classical_csv_schema(tmp_path):
    out = tmp_path / "classical.csv"
    code = main(["classical", "--omega", "1", "--k", "1", "--step", "0.01",
                 "--output", str(out)])
    assert code == 0
    lines = _read(out).splitlines()
    assert lines[0] == "t,x_numeric,x_analytic,abs_err"
    worst = max(float(line.split(",")[3]) for line in lines[1:])
    assert worst < 1e-6


def test_wavefn_csv_schema(tmp_path):
    out = tmp_path / "wf.csv"
    code = main(["wavefn", "--omega", "1", "--k", "1", "--alpha", "19",
                 "--gamma", "1", "--level", "2", "--samples", "301",
                 "--output", str(out)])
    assert code == 0
    lines = _read(out).splitlines()
    assert lines[0] == "p,y,psi"
    assert len(lines) == 302


def test_byte_identical_reruns(tmp_path):
    args = ["spectrum", "--omega", "1.7", "--k", "0.3", "--alpha", "2",
            "--gamma", "3", "--n-max", "4"]
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(args + ["--output", str(out1)]) == 0
    assert main(args + ["--output", str(out2)]) == 0
    assert _read(out1) == _read(out2)


def test_json_round_trip(tmp_path):
    out = tmp_path / "spec.json"
    code = main(["spectrum", "--omega", "1", "--k", "1", "--alpha", "19",
                 "--gamma", "1", "--n-max", "3", "--format", "json",
                 "--output", str(out)])
    assert code == 0
    payload = json.loads(_read(out))
    assert set(payload) == {"meta", "rows"}
    assert payload["meta"]["version"]
    assert payload["meta"]["params"]["alpha"] == 19.0
    energies = [row["energy"] for row in payload["rows"]]
    assert energies == [1.5, 2.5, 3.5, 4.5]
    # serialize again: identical bytes
    text = json.dumps(payload, sort_keys=True, indent=1) + "\n"
    assert text == _read(out)


def test_config_file_and_flag_precedence(tmp_path):
    config = tmp_path / "run.json"
    config.write_text(json.dumps({"alpha": 19.0, "gamma": 1.0, "n_max": 2}))
    out = tmp_path / "o.csv"
    # config supplies alpha/gamma; flag overrides n_max
    code = main(["spectrum", "--config", str(config), "--omega", "1",
                 "--k", "1", "--n-max", "1", "--output", str(out)])
    assert code == 0
    lines = _read(out).splitlines()
    assert len(lines) == 3  # header + n in {0, 1}
    assert float(lines[1].split(",")[1]) == 1.5  # shift from config alpha*gamma


def test_config_file_unknown_key_rejected(tmp_path):
    config = tmp_path / "bad.json"
    config.write_text(json.dumps({"omegaa": 2.0}))
    assert main(["spectrum", "--config", str(config)]) == 2


def test_output_dir_env_override(tmp_path, monkeypatch):
    monkeypatch.setenv("LIENARDQM_OUTDIR", str(tmp_path))
    code = main(["spectrum", "--omega", "1", "--k", "1", "--alpha", "0",
                 "--gamma", "0"])
    assert code == 0
    assert (tmp_path / "spectrum.csv").exists()


def test_limit_command_studies(tmp_path):
    out = tmp_path / "limit.csv"
    code = main(["limit", "--omega", "1", "--k", "1", "--n-max", "1",
                 "--k-sequence", "0.1,0.01", "--a-values", "1e2,1e4",
                 "--output", str(out)])
    assert code == 0
    lines = _read(out).splitlines()
    assert lines[0] == "study,n,scale,value"
    studies = {line.split(",")[0] for line in lines[1:]}
    assert studies == {"wavefn-deviation", "laguerre-hermite",
                       "gamma-asymptotic"}
    # deviations decrease along the k sequence for each level
    rows = [line.split(",") for line in lines[1:]
            if line.startswith("wavefn-deviation,0,")]
    devs = [float(r[3]) for r in rows]
    assert devs[1] < devs[0]


def test_sweep_sorted_and_consistent(tmp_path):
    out = tmp_path / "sweep.csv"
    code = main(["sweep", "--omega-values", "2,1", "--k-values", "1,0.5",
                 "--alpha", "19", "--gamma", "1", "--output", str(out)])
    assert code == 0
    lines = _read(out).splitlines()
    assert lines[0] == "omega,k,alpha,gamma,a_script,lambda,shift,e0"
    rows = [tuple(float(tok) for tok in line.split(",")) for line in lines[1:]]
    assert rows == sorted(rows)
    assert len(rows) == 4
    for row in rows:
        omega, k, alpha, gamma = row[:4]
        derived = derive_params(PhysicalParams(omega=omega, k=k),
                                AmbiguityParams(alpha=alpha, gamma=gamma))
        assert row[4] == pytest.approx(derived.a_script, rel=1e-15)
        assert row[6] == pytest.approx(derived.shift, rel=1e-12)


def test_sweep_invalid_tuple_exit_2(tmp_path):
    code = main(["sweep", "--alpha-values=-9,-200", "--gamma", "9",
                 "--omega", "1", "--k", "1",
                 "--output", str(tmp_path / "s.csv")])
    assert code == 2


def test_verify_passes_and_fails_by_exit_code(tmp_path):
    out = tmp_path / "verify.csv"
    code = main(["verify", "--omega", "1", "--k", "1", "--alpha", "19",
                 "--gamma", "1", "--output", str(out)])
    assert code == 0
    lines = _read(out).splitlines()
    assert lines[0] == "check,params,measured,expected,tolerance,pass"
    assert all(line.endswith(",true") for line in lines[1:])
    # a deliberately coarse momentum step blows the eigenrelation tolerance
    code = main(["verify", "--omega", "1", "--k", "1", "--alpha", "19",
                 "--gamma", "1", "--h-p", "0.05",
                 "--output", str(tmp_path / "verify_fail.csv")])
    assert code == 1
