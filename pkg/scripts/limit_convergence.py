"""Deviation of the Pöschl–Teller source from its sextic and PT-anharmonic limits."""
import numpy as np

from qespoly import PoschlTellerParams, PTAnharmonicParams
from qespoly.potentials import Family, PotentialFamily, sextic_limit_params
from qespoly.verify import limit_convergence

ALPHAS = [0.4, 0.2, 0.1, 0.05, 0.025]
X = np.linspace(0.3, 2.0, 60)


def show(title, rep):
    print(title, "->", rep.verdict)
    prev = None
    for al, d in rep.residual_table:
        ratio = "" if prev is None else f"  ratio {prev / d:.2f}"
        print(f"  alpha={al:<6} max dev={d:.4e}{ratio}")
        prev = d


if __name__ == "__main__":
    src = PoschlTellerParams(0.5, 1.0, 0.3, 1.0, 2)
    show("sextic", limit_convergence(PotentialFamily(Family.SEXTIC, sextic_limit_params(src)), ALPHAS, X))
    target = PotentialFamily(Family.PT_ANHARMONIC, PTAnharmonicParams(1.0, 1.0, 0.5, 0.3, 1))
    show("pt-anharmonic", limit_convergence(target, ALPHAS, X))
