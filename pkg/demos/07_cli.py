"""The command line front end, driven on the files in demos/data."""

import pathlib
import subprocess
import sys

data = pathlib.Path(__file__).parent / "data"

for argv in (
    ["classify", data / "c5.json"],
    ["certify", data / "fan.json", "-p", "3"],
    ["certify", data / "q2.json", "--sample", "8"],
    ["certify", data / "c5.json"],
    ["massey", data / "edge.json", data / "chars_obstructed.json", "--oracle"],
    ["demushkin", "-p", "3", "-d", "4"],
    ["oracle", data / "nested.json", "-n", "3"],
):
    cmd = [sys.executable, "-m", "praag", *map(str, argv)]
    proc = subprocess.run(cmd, capture_output=True, text=True)
    print("$ praag", " ".join(str(a) if not isinstance(a, pathlib.Path) else a.name for a in argv))
    out = proc.stdout.strip().splitlines()
    print("\n".join(out[:6] + (["..."] + out[-1:] if len(out) > 7 else out[6:])))
    print(f"[exit {proc.returncode}]\n")
