"""QES energies against the finite-difference oracle for the real families."""
import argparse

import numpy as np

from qespoly import PoschlTellerParams, SexticParams
from qespoly.potentials import family_for, transform_half_coordinate
from qespoly.spectra import lambda_spectrum_roots
from qespoly.verify import GridConfig, fd_spectrum

CASES = [
    ("poschl-teller", family_for(PoschlTellerParams(1.0, 4.0, 0.2, 1.0, 2)), 4.0),
    ("generalized-pt", transform_half_coordinate(PoschlTellerParams(1.0, 4.0, 0.2, 1.0, 2)), 8.0),
    ("sextic", family_for(SexticParams(0.5, 1.0, 1.0, 0.3, 3)), 6.0),
]

if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-points", type=int, default=4001)
    args = ap.parse_args()
    for name, fam, x_max in CASES:
        qes = lambda_spectrum_roots(fam).energies
        rep = fd_spectrum(fam, GridConfig(0.0, x_max, args.n_points), len(qes) + 2)
        fd = np.array(rep.richardson_estimate)
        print(name)
        for E in qes:
            k = int(np.argmin(np.abs(fd - E)))
            print(f"  E_qes={E:.10f}  level {k}  E_fd={fd[k]:.10f}  |dE|={abs(fd[k] - E):.2e}")
