"""Regenerates the synthetic fixtures in this directory.

au_drude_optical.csv   n, k of a pure Drude metal (wp 9.0 eV, gamma 0.035 eV)
                       from 0.125 eV to 1e4 eV, 60 points per decade.
plasma_pressure_fixture.csv
                       pressures of plasma-model gold (wp 9.0 eV) at 300 K with
                       uniform noise inside the stated errors (0.5 % of |P|, seed 2024).
"""
import numpy as np
from scipy.integrate import quad

HC = 0.1973269804
KB = 8.617333262e-5
WP = 9.0
GAMMA = 0.035


def optical_table(path):
    w = np.logspace(np.log10(0.125), 4.0, int(round(60 * (4.0 - np.log10(0.125)))) + 1)
    eps = 1.0 - WP**2 / (w * (w + 1j * GAMMA))
    nk = np.sqrt(eps)
    with open(path, "w") as f:
        f.write("# synthetic Drude metal: wp = 9.0 eV, gamma = 0.035 eV\n")
        f.write("energy_eV,n,k\n")
        for e, z in zip(w, nk):
            f.write(f"{e:.10e},{z.real:.12e},{z.imag:.12e}\n")


def plasma_pressure(a, temperature):
    def coeffs(xi, k):
        q = np.sqrt(k * k + (xi / HC) ** 2)
        kl = np.sqrt(q * q + (WP / HC) ** 2)
        if xi == 0.0:
            return 1.0, (k - kl) / (k + kl)
        eps = 1.0 + (WP / xi) ** 2
        return (eps * q - kl) / (eps * q + kl), (q - kl) / (q + kl)

    def kernel(xi):
        y0 = 2 * a * xi / HC

        def f(y):
            q = y / (2 * a)
            k = np.sqrt(max(q * q - (xi / HC) ** 2, 0.0))
            e = np.exp(-y)
            return y * y * sum(r * r * e / (1 - r * r * e) for r in coeffs(xi, k))

        return quad(f, y0, y0 + 70, epsabs=0, epsrel=1e-11, limit=300)[0]

    step = 2 * np.pi * KB * temperature
    total = 0.5 * kernel(0.0)
    l = 1
    while True:
        t = kernel(l * step)
        total += t
        if t < 1e-12 * total:
            break
        l += 1
    return -KB * temperature / (8 * np.pi * a**3) * total


def fixture(path):
    rng = np.random.default_rng(2024)
    separations = np.round(np.linspace(0.16, 0.75, 25), 4)
    with open(path, "w") as f:
        f.write("separation_um,value,total_error\n")
        for a in separations:
            p = plasma_pressure(a, 300.0)
            err = 0.005 * abs(p)
            f.write(f"{a:.4f},{p + rng.uniform(-0.8, 0.8) * err:.12e},{err:.6e}\n")


if __name__ == "__main__":
    optical_table("au_drude_optical.csv")
    fixture("plasma_pressure_fixture.csv")
