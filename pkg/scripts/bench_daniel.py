"""Reproduce the three-potential sextic benchmark and print a comparison table."""
import json
import sys

from qespoly.cli import run

if __name__ == "__main__":
    import contextlib
    import io

    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        status = run(["bench-daniel", *sys.argv[1:]])
    out = json.loads(buf.getvalue())
    if status:
        print(out["error"])
        sys.exit(status)
    print(f"{'V':<3} {'L':>4} {'E_ref':>10} {'E_qes':>12} {'E_fd':>12} {'dE_qes':>9} {'dE_fd':>9}")
    for r in out["results"]["rows"]:
        print(f"{r['potential']:<3} {r['L']:>4.1f} {r['E_reference']:>10.6f} {r['E_qes']:>12.8f} "
              f"{r['E_fd']:>12.8f} {r['dE_qes']:>9.2e} {r['dE_fd']:>9.2e}")
    print("pass" if out["results"]["pass"] else "FAIL")
