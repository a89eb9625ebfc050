"""
Manifest round trip
===================

Everything the command line does is available in-process: parse a manifest,
dispatch a command, read the report.  This walks the shipped reflection
manifest through the same path `orbifunctor verify-theorem` uses.
"""

import importlib.resources
import json

from orbifunctor import cli

text = (importlib.resources.files("orbifunctor")
        / "manifests" / "z2_reflection_sphere.json").read_text()
manifest = cli.parse_manifest(text)

print("input digest:", manifest.digest)
print("sections:", ", ".join(sorted(manifest.sections)))
print()

report = cli.run("verify-theorem", manifest)
print(report.human())
print("exit status would be:", 0 if report.passed else 1)

# The machine-readable report is byte stable: same manifest, same bytes.
blob = report.to_json()
again = cli.run("verify-theorem", manifest).to_json()
assert blob == again
payload = json.loads(blob)
print("\nreport keys:", sorted(payload))
print("verdict count:", len(payload["verdicts"]))

# Demos run without any manifest at all.
print()
print(cli.run("demo-classifying", None).human())
