"""Regenerates the JSON oracles in this directory (numpy, scipy, mpmath)."""
import json
import pathlib

import mpmath as mp
import numpy as np
from scipy.special import roots_genlaguerre

mp.mp.dps = 40
HERE = pathlib.Path(__file__).resolve().parent


def dump(name, payload):
    (HERE / name).write_text(json.dumps(payload, indent=1) + "\n")


def rules():
    out = []
    for n in (5, 20, 80):
        x, w = np.polynomial.hermite.hermgauss(n)
        out.append({"kind": "gauss_hermite", "n": n, "alpha": 0.0, "nodes": x.tolist(), "weights": w.tolist()})
    for n, a in ((10, 0.0), (40, 0.0), (12, 1.5)):
        x, w = roots_genlaguerre(n, a)
        out.append({"kind": "gauss_laguerre", "n": n, "alpha": a, "nodes": x.tolist(), "weights": w.tolist()})
    for n in (8, 32):
        x, w = np.polynomial.legendre.leggauss(n)
        out.append({"kind": "gauss_legendre", "n": n, "alpha": 0.0, "nodes": x.tolist(), "weights": w.tolist()})
    dump("rules.json", out)


def unit_of(v):
    v = [mp.mpf(c) for c in v]
    s = mp.sqrt(sum(c * c for c in v))
    return [c / s for c in v]


def qhermite_slice(m, n, z):
    zb = mp.conj(z)
    return sum((-1) ** j * mp.factorial(j) * mp.binomial(m, j) * mp.binomial(n, j) * z ** (m - j) * zb ** (n - j)
               for j in range(min(m, n) + 1))


def lift(c, unit):
    return [float(mp.re(c))] + [float(mp.im(c) * u) for u in unit]


def qhermite_values():
    rng = np.random.default_rng(20240611)
    cases = []
    for m, n in ((0, 0), (1, 0), (0, 1), (2, 1), (3, 3), (5, 2), (2, 7), (8, 8), (12, 11), (12, 12)):
        for _ in range(3):
            v = rng.normal(size=3)
            unit = unit_of(v)
            x, y = rng.uniform(-2.0, 2.0), abs(rng.uniform(0.1, 2.0))
            z = mp.mpc(x, y)
            q = lift(z, unit)
            cases.append({"m": m, "n": n, "q": q, "value": lift(qhermite_slice(m, n, z), unit)})
    dump("qhermite.json", cases)


def kernels():
    unit = unit_of([1.0, -2.0, 2.0])
    cases = []
    for m, z, w in ((0, mp.mpc(0.3, 0.4), mp.mpc(-0.5, 1.1)), (2, mp.mpc(1.0, 0.2), mp.mpc(0.7, 0.9)),
                    (5, mp.mpc(-1.2, 0.6), mp.mpc(0.4, 1.3))):
        k = mp.exp(z * mp.conj(w)) * mp.laguerre(m, 0, abs(z - w) ** 2) / mp.pi
        cases.append({"m": m, "q": lift(z, unit), "qprime": lift(w, unit), "value": lift(k, unit)})
    dump("kernel.json", cases)


def hermite_fn(k, t):
    return mp.exp(-t * t / 2) * mp.hermite(k, t)


def wigner():
    cases = []
    for m, n, x, y in ((0, 0, 0.0, 0.0), (1, 0, 0.5, -0.3), (2, 3, -0.7, 0.4), (4, 1, 0.9, 0.8)):
        re = mp.quad(lambda t: mp.cos(y * t) * hermite_fn(m, t + x / 2) * hermite_fn(n, t - x / 2), [-mp.inf, mp.inf])
        im = mp.quad(lambda t: mp.sin(y * t) * hermite_fn(m, t + x / 2) * hermite_fn(n, t - x / 2), [-mp.inf, mp.inf])
        s = 1 / mp.sqrt(2 * mp.pi)
        cases.append({"m": m, "n": n, "x": x, "y": y, "re": float(re * s), "im": float(im * s)})
    dump("wigner.json", cases)


def divergence():
    mu, n = mp.mpf("0.5"), 20
    f = lambda t: t ** n * mp.hyp1f1(-mu, n + 1, t) ** 2 * mp.exp(-t)
    rows = [{"T": T, "integral": float(mp.quad(f, mp.linspace(0, T, int(T) + 1)))} for T in (20, 30, 40, 60)]
    dump("divergence.json", {"mu": 0.5, "n": n, "rows": rows})


if __name__ == "__main__":
    rules()
    qhermite_values()
    kernels()
    wigner()
    divergence()
