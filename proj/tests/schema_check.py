"""Runs the monideal binary over a spread of commands and validates every
JSON report against tools/report.schema.json."""

import json
import subprocess
import sys

import jsonschema


def main() -> int:
    binary, schema_path, data = sys.argv[1], sys.argv[2], sys.argv[3]
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)

    commands = [
        ["ideal", "power", "--in", f"{data}/I.txt", "--t", "2"],
        ["ideal", "closure", "--in", f"{data}/x2y2.txt"],
        ["ideal", "dual", "--in", f"{data}/ni_c4.txt"],
        ["graph", "C5", "--out", "di"],
        ["graph", "K2,3", "--out", "domsets"],
        ["graph", "wheel:1,5,[1,2,3]", "--out", "ni"],
        ["check", "normal", "K2,2-ni"],
        ["check", "normal", f"{data}/x2y2.txt"],
        ["check", "normal", "C6-di", "--bound", "2"],
        ["check", "integrally-closed", f"{data}/x2y2.txt"],
        ["check", "ass", "K2,3-ni", "--bound", "3"],
        ["check", "persistence", "K2,3-ni"],
        ["check", "strong-persistence", "C5-di"],
        ["check", "ssp", "C5-di", "--bound", "3"],
        ["check", "ntf", "K2,3-ni", "--bound", "3"],
        ["check", "nntf", "K2,2-di"],
        ["check", "criterion", "meet-power", "--I", f"{data}/ni_c4.txt", "--ell", "2"],
        ["check", "criterion", "add-monomial", "--I", f"{data}/x2y2.txt",
         "--H", f"{data}/x2y2.txt", "--monomial", "1"],
        ["--timeout-sec", "0.000001", "check", "normal", "C7-di"],
    ]
    failures = 0
    for cmd in commands:
        proc = subprocess.run([binary, "--json", *cmd], capture_output=True, text=True)
        try:
            report = json.loads(proc.stdout)
            validator.validate(report)
            if report["exit_code"] != proc.returncode:
                raise ValueError(f"exit_code {report['exit_code']} != {proc.returncode}")
            print("ok  ", " ".join(cmd))
        except Exception as e:  # noqa: BLE001
            failures += 1
            print("FAIL", " ".join(cmd), "->", e)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
