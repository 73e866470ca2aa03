"""End-to-end checks of the qeslab command-line interface."""

import csv
import io
import json
import subprocess
import sys

BIN = sys.argv[1]
failures = []


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True)


def check(name, cond):
    print(("ok   " if cond else "FAIL ") + name)
    if not cond:
        failures.append(name)


# Fixture F1: n=1 double-well analogue.
r = run("spectrum", "--space", "sphere", "--n", "1", "--k", "1",
        "--gamma", "0,0", "--a", "-5/8")
d = json.loads(r.stdout)
check("F1 exit 0", r.returncode == 0)
check("F1 values", d["values"] == ["1/4", "-5/4"])

# Fixture F2.
r = run("spectrum", "--space", "sphere", "--n", "2", "--k", "1",
        "--gamma", "0,0,0", "--a", "1/2")
check("F2 values", json.loads(r.stdout)["values"] == ["-1/2", "-1", "-3/2"])

# ES point at G = 0, n = 2, k = 2: {0, -3/2 (x2), -5 (x3)}.
rj = run("spectrum", "--n", "2", "--k", "2", "--gamma", "0,0,0", "--a", "0")
rc = run("spectrum", "--n", "2", "--k", "2", "--gamma", "0,0,0", "--a", "0",
         "--format", "csv")
dj = json.loads(rj.stdout)
mj = {(l["value"], l["multiplicity"]) for l in dj["lines"]}
rows = list(csv.DictReader(io.StringIO(rc.stdout)))
mc = {(row["value"], int(row["multiplicity"])) for row in rows}
check("ES multiset", mj == {("0", 1), ("-3/2", 2), ("-5", 3)})
check("CSV/JSON same multiset", mj == mc)

# Byte-identical reruns for identical config + seed.
a1 = run("verify", "--suite", "gauge", "--n", "2", "--seed", "42")
a2 = run("verify", "--suite", "gauge", "--n", "2", "--seed", "42")
check("verify deterministic", a1.stdout == a2.stdout and a1.stdout)
s1 = run("spectrum", "--n", "1", "--k", "2", "--gamma", "1/3,1/5", "--a", "1/7")
s2 = run("spectrum", "--n", "1", "--k", "2", "--gamma", "1/3,1/5", "--a", "1/7")
check("spectrum deterministic", s1.stdout == s2.stdout and s1.stdout)

# Verify suite outcomes and exit codes.
r = run("verify", "--suite", "integrals", "--n", "3", "--seed", "7")
d = json.loads(r.stdout)
check("verify integrals exit 0", r.returncode == 0)
check("verify no inconclusive",
      all(i["status"] in ("pass", "deviation") for i in d["items"]))
r = run("verify", "--suite", "closedforms", "--n", "2", "--k", "1")
d = json.loads(r.stdout)
dev = {i["id"] for i in d["items"] if i["status"] == "deviation"}
check("closedforms n2k1 deviation", "S34-N2-K1-EPM" in dev)
check("unknown suite exit 2", run("verify", "--suite", "bogus").returncode == 2)
check("closedforms out of range exit 3",
      run("verify", "--suite", "closedforms", "--n", "4").returncode == 3)

# Separation chains.
r = run("separate", "--n", "2", "--k", "1", "--gamma", "0,0,0", "--a", "1/2")
d = json.loads(r.stdout)
check("F2 chains", len(d["chains"]) == 2)
check("F2 chain energies",
      sorted(len(c["energies"]) for c in d["chains"]) == [1, 2])
check("F2 complete", d["complete"] is True)
r = run("separate", "--n", "2", "--k", "0", "--gamma", "1/3,1/5,1/7", "--a", "2")
d = json.loads(r.stdout)
check("k=0 single chain E=0",
      len(d["chains"]) == 1 and d["chains"][0]["energies"][0]["value"] == "0")
r = run("separate", "--n", "3", "--k", "1", "--gamma", "0,0,0,0", "--a", "1")
check("n3 k1 energy count", json.loads(r.stdout)["energy_count"] == 4)
check("separate n<2 exit 2",
      run("separate", "--n", "1", "--gamma", "0,0", "--a", "1").returncode == 2)

# Contraction probes: corrected map converges at order 2 in eps.
r = run("contract", "--n", "2", "--k", "1", "--gamma", "1/3,1/5",
        "--omega", "2", "--b", "3")
d = json.loads(r.stdout)
from fractions import Fraction
cd = [Fraction(p["corrected_diff"]) for p in d["probes"]]
pd = [Fraction(p["printed_diff"]) for p in d["probes"]]
check("contract corrected shrinks", all(x > y for x, y in zip(cd, cd[1:])))
check("contract order 2",
      all(Fraction(3, 1) < x / y < Fraction(5, 1)
          for x, y in zip(cd, cd[1:])))
check("contract printed does not converge", pd[-1] > Fraction(1, 2))

# Config errors.
check("bad gamma count exit 2",
      run("spectrum", "--n", "2", "--gamma", "0,0", "--a", "1").returncode == 2)
check("bad rational exit 2",
      run("spectrum", "--n", "1", "--gamma", "0,0", "--a", "x").returncode == 2)
check("bad space exit 2",
      run("spectrum", "--space", "torus", "--n", "1").returncode == 2)

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
