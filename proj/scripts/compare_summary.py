#!/usr/bin/env python3
"""Compare a resroc estimate run against expected summary values.

Runs `resroc estimate` on a scores file and checks the JSON output against
an expected-values file, element by element, within a numeric tolerance.
The expected file mirrors the estimate JSON but may omit anything; only the
leaves it provides are compared. Example:

    {
      "methods": [
        {"method": "pl", "report": {"theta_hat": 2.05, "tau_hat": 0.67}},
        {"method": "mw", "report": {"theta_hat": 2.11}}
      ]
    }

Method entries are matched by their "method" name, so the expected file can
list any subset in any order. Exits 0 when every compared value is within
tolerance, 1 otherwise.
"""

import argparse
import json
import subprocess
import sys


def walk(expected, actual, tol, path, failures):
    if isinstance(expected, dict):
        if not isinstance(actual, dict):
            failures.append(f"{path}: expected an object, got {type(actual).__name__}")
            return
        for key, sub in expected.items():
            if key not in actual:
                failures.append(f"{path}.{key}: missing from output")
                continue
            walk(sub, actual[key], tol, f"{path}.{key}", failures)
    elif isinstance(expected, list):
        if not isinstance(actual, list):
            failures.append(f"{path}: expected an array, got {type(actual).__name__}")
            return
        if expected and all(isinstance(e, dict) and "method" in e for e in expected):
            by_name = {a.get("method"): a for a in actual if isinstance(a, dict)}
            for e in expected:
                name = e["method"]
                if name not in by_name:
                    failures.append(f"{path}[method={name}]: missing from output")
                    continue
                walk(e, by_name[name], tol, f"{path}[{name}]", failures)
            return
        if len(expected) != len(actual):
            failures.append(f"{path}: length {len(actual)}, expected {len(expected)}")
            return
        for i, (e, a) in enumerate(zip(expected, actual)):
            walk(e, a, tol, f"{path}[{i}]", failures)
    elif isinstance(expected, bool) or isinstance(expected, str) or expected is None:
        if actual != expected:
            failures.append(f"{path}: got {actual!r}, expected {expected!r}")
    else:
        try:
            got = float(actual)
        except (TypeError, ValueError):
            failures.append(f"{path}: got non-numeric {actual!r}")
            return
        if abs(got - float(expected)) > tol:
            failures.append(
                f"{path}: got {got:.6g}, expected {float(expected):.6g} (tol {tol:g})"
            )
        else:
            print(f"  ok  {path}: {got:.6g} ~ {float(expected):.6g}")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--scores", required=True, help="score,label CSV file")
    parser.add_argument("--expected", required=True, help="expected-values JSON file")
    parser.add_argument("--binary", default="resroc", help="resroc executable to run")
    parser.add_argument("--tol", type=float, default=0.01, help="numeric tolerance")
    parser.add_argument(
        "--arg",
        action="append",
        default=[],
        dest="extra",
        help="extra argument passed through to the estimate command (repeatable)",
    )
    args = parser.parse_args()

    cmd = [args.binary, "estimate", args.scores, "--format", "json", *args.extra]
    proc = subprocess.run(cmd, capture_output=True, text=True)
    if proc.returncode != 0:
        sys.stderr.write(proc.stderr)
        sys.stderr.write(f"estimate run failed with exit code {proc.returncode}\n")
        return 1
    actual = json.loads(proc.stdout)

    with open(args.expected, encoding="utf-8") as f:
        expected = json.load(f)

    failures = []
    walk(expected, actual, args.tol, "$", failures)
    for line in failures:
        print(f"FAIL  {line}")
    print(f"{len(failures)} mismatches" if failures else "all compared values within tolerance")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
