"""Which energy offset m makes the closed-form state an eigenfunction? Scan m and print residuals."""
import numpy as np

from qespoly import PoschlTellerParams
from qespoly.potentials import family_for
from qespoly.spectra import energy_poschl_teller, lambda_spectrum_roots
from qespoly.verify import residual_check
from qespoly.wavefunctions import make_eigenfunction

if __name__ == "__main__":
    p = PoschlTellerParams(1.2, 2.5, 0.3, 1.0, 2)
    fam = family_for(p)
    xs = np.linspace(0.3, 1.5, 11)
    print("lambda        " + "".join(f"m={m:<10}" for m in range(4)))
    for lam in lambda_spectrum_roots(p).lambda_roots:
        spec = make_eigenfunction(fam, lam)
        res = [residual_check(fam, energy_poschl_teller(lam, p, m), spec, xs).metadata["max_scaled_residual"]
               for m in range(4)]
        print(f"{lam:<13.6f} " + "".join(f"{r:<12.2e}" for r in res))
