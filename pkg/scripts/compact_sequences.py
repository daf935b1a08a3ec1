"""Single-step dt-scaling of the compact order-3/4 sequences, with and without measurements."""

import numpy as np

from zenolab.compact import compact_sequence, solve_compact_coefficients
from zenolab.metrics import fit_loglog, zeno_error_measurement, zeno_error_unitary
from zenolab.system import example_zz_x


def main():
    s = example_zz_x(1.0, 0.1)
    dts = np.geomspace(2e-2, 0.3, 10)
    for order in (3, 4):
        c = solve_compact_coefficients(order)
        print(f"order {order}: coefficients {np.round(c.values, 12).tolist()}")
        for meas in (True, False):
            pts = []
            for dt in dts:
                U = compact_sequence(s, c, dt, meas)
                if meas:
                    pts.append((dt, zeno_error_measurement(s, U, dt)))
                else:
                    pts.append((dt, zeno_error_unitary(s, U, dt, True, len(c.durations) - 1)))
            fit = fit_loglog(pts, "full")
            print(f"  {'with' if meas else 'without'} measurements: {fit.summary()}")


if __name__ == "__main__":
    main()
