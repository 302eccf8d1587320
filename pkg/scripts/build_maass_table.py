"""Build the bundled table of Hecke-Maass cusp forms for the full modular group.

Offline data-generation script (not part of the installed library).  It locates
the discrete spectrum sqrt(lambda - 1/4) = t on an interval, solves for Hecke
eigenvalues lam(n), and computes the first-coefficient spectral weights

    alpha = |rho(1)|^2 / cosh(pi t)

for L^2-normalized forms, writing one JSON record per form to data/maass.jsonl.

Method: collocation on pulled-back horocycle points (Hejhal's algorithm).  The
K-Bessel kernel kappa_t(w) = e^{pi t/2} K_{it}(w) is produced by Taylor-series
integration of  y''(tau) = (e^{2 tau} - t^2) y  (tau = log w), seeded from four
high-precision Bessel values at the top of the range; downward integration is
stable because the contaminating solution decays toward small w.  Eigenvalues
are located by requiring coefficient vectors solved at two different horocycle
heights to agree; coefficients above the collocation range are then extracted
at a ladder of lower heights from the automorphic expansion itself, picking per
mode whichever of two staggered heights gives the better-conditioned divisor.

The emitted lam(n) table is the multiplicative closure of the extracted
prime values, so Hecke relations hold to floating-point accuracy by
construction; raw extracted composites are compared against that closure and
the worst deviation is reported as a genuineness diagnostic.

Run:  python scripts/build_maass_table.py --t-hi 32.2 --out data/maass.jsonl
"""
from __future__ import annotations

import argparse
import json
import math
import sys
import time

import numpy as np
import mpmath as mp

SQ3_2 = math.sqrt(3.0) / 2.0
ORDER = 30                      # Taylor order of the ODE stepper
W_HI_LOG = 42.0                 # kappa decayed by e^-42 at the top seed point
W_USE_LOG = math.log(1e5)       # extraction headroom: divisor decayed <= 1e5
_J2F = np.array([2.0 ** j / math.factorial(j) for j in range(ORDER + 1)])


def wkb_cut(t: float, target_log: float) -> float:
    """w > t where the WKB decay exponent of K_{it} reaches target_log."""
    phi = lambda w: math.sqrt(max(w * w - t * t, 0.0)) - t * math.acos(min(t / w, 1.0))
    lo, hi = t + 1e-9, t + 10.0
    while phi(hi) < target_log:
        hi += 10.0
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if phi(mid) < target_log:
            lo = mid
        else:
            hi = mid
    return hi


class KappaODE:
    """Dense-output kappa_t(w) = e^{pi t/2} K_{it}(w) on [w_lo, w_hi]."""

    def __init__(self, t: float, w_lo: float):
        self.t = float(t)
        self.w_hi = wkb_cut(t, W_HI_LOG)
        self.w_lo = float(w_lo)
        mp.mp.dps = 30
        tt = mp.mpf(self.t)
        order = mp.mpc(0, tt)
        scale = mp.exp(mp.pi * tt / 2)
        w0 = mp.mpf(self.w_hi)
        k0 = mp.besselk(order, w0) * scale
        kp = -(mp.besselk(order - 1, w0) + mp.besselk(order + 1, w0)) / 2 * scale
        self._integrate(float(k0.real), float(kp.real) * self.w_hi)

    def _integrate(self, y0: float, y1: float) -> None:
        t2 = self.t * self.t
        tau = math.log(self.w_hi)
        tau_end = math.log(self.w_lo)
        taus, steps, coeffs = [], [], []
        while tau > tau_end + 1e-15:
            w = math.exp(tau)
            h = -min(2.2 / max(w, self.t, 2.0), 0.35)
            if tau + h < tau_end:
                h = tau_end - tau
            E = w * w
            a = np.zeros(ORDER + 1)
            a[0], a[1] = y0, y1
            for k in range(ORDER - 1):
                s = float(np.dot(_J2F[k::-1], a[: k + 1]))
                a[k + 2] = (E * s - t2 * a[k]) / ((k + 2) * (k + 1))
            taus.append(tau)
            steps.append(h)
            coeffs.append(a)
            y0 = a[ORDER]
            for k in range(ORDER - 1, -1, -1):
                y0 = y0 * h + a[k]
            y1 = ORDER * a[ORDER]
            for k in range(ORDER - 1, 0, -1):
                y1 = y1 * h + k * a[k]
            tau += h
        self.taus = np.array(taus)
        self.coeffs = np.array(coeffs)

    def __call__(self, w):
        """Vectorized evaluation; w >= w_hi gives 0 (negligible regime)."""
        w = np.atleast_1d(np.asarray(w, dtype=float))
        out = np.zeros_like(w)
        inside = (w < self.w_hi) & (w > 0)
        if np.any(inside & (w < self.w_lo * 0.999999)):
            raise ValueError("kappa query below tabulated range")
        tau = np.log(np.where(inside, w, 1.0))
        idx = np.clip(np.searchsorted(-self.taus, -tau, side="right") - 1,
                      0, len(self.taus) - 1)
        sel = np.flatnonzero(inside)
        for i in np.unique(idx[sel]):
            mask = sel[idx[sel] == i]
            d = tau[mask] - self.taus[i]
            a = self.coeffs[i]
            v = np.full(d.shape, a[ORDER])
            for k in range(ORDER - 1, -1, -1):
                v = v * d + a[k]
            out[mask] = v
        return out


def pullback(x, y):
    """Map x+iy into the standard fundamental domain (vectorized)."""
    x = np.array(x, dtype=float)
    y = np.array(y, dtype=float)
    for _ in range(400):
        x -= np.round(x)
        r2 = x * x + y * y
        need = r2 < 1.0 - 1e-15
        if not np.any(need):
            break
        inv = np.where(need, r2, 1.0)
        x = np.where(need, -x / inv, x)
        y = np.where(need, y / inv, y)
    x -= np.round(x)
    return x, y


# ---------------------------------------------------------------- phase 1

def _solve_at_height(t, parity, Y, M, Q, ode):
    """Coefficients c(1..M) (c(1)=1) from collocation at horocycle height Y."""
    j = np.arange(Q)
    xj = (j + 0.5) / Q
    xs, ys = pullback(xj, np.full(Q, Y))
    m = np.arange(1, M + 1)
    args = 2 * np.pi * ys[:, None] * m[None, :]
    K = ode(args.ravel()).reshape(args.shape)
    cs = np.cos if parity == "even" else np.sin
    R = np.sqrt(ys)[:, None] * K * cs(2 * np.pi * xs[:, None] * m[None, :])
    C = (2.0 / Q) * cs(2 * np.pi * np.outer(m, xj)) @ R
    V = np.sqrt(Y) * ode(2 * np.pi * Y * m)
    A = C - np.diag(V)
    sol, *_ = np.linalg.lstsq(A[:, 1:], -A[:, 0], rcond=None)
    return np.concatenate([[1.0], sol])


def _phase1_setup(t):
    M = int(math.ceil((t + W_HI_LOG) / (2 * np.pi * SQ3_2))) + 2
    Y1 = min(0.45, (t + 12.0) / (2 * np.pi * M))
    Y2 = 0.85 * Y1
    whi = wkb_cut(t, W_HI_LOG)
    Q = 1 << int(math.ceil(math.log2(M + whi / (2 * np.pi * Y2) + 8)))
    return M, Y1, Y2, Q


def consistency(t, parity, probes=(2, 3, 5), ode=None):
    """Probe differences between two collocation heights, plus coefficients."""
    M, Y1, Y2, Q = _phase1_setup(t)
    if ode is None:
        ode = KappaODE(t, w_lo=2 * np.pi * Y2 * 0.99)
    c1 = _solve_at_height(t, parity, Y1, M, Q, ode)
    c2 = _solve_at_height(t, parity, Y2, M, Q, ode)
    d = c1 - c2
    return np.array([d[p - 1] for p in probes]), c1


def scan_parity(parity, t_lo, t_hi, step, progress=True):
    """Bracket sign changes of the first two probes on a uniform grid."""
    ts = np.arange(t_lo, t_hi + step / 2, step)
    g = np.empty((len(ts), 2))
    t0 = time.time()
    for i, t in enumerate(ts):
        probes, _ = consistency(t, parity, probes=(2, 3))
        g[i] = probes
        if progress and i % 200 == 0:
            print(f"  scan {parity} {t:.3f}  [{time.time()-t0:.0f}s]",
                  file=sys.stderr, flush=True)
    brackets = set()
    for k in range(2):
        flips = np.flatnonzero(g[:-1, k] * g[1:, k] < 0)
        for i in flips:
            brackets.add((ts[i], ts[i + 1], k))
    return sorted(brackets)


def refine_root(parity, lo, hi, probe_idx, tol=1e-11):
    """Secant refinement of a bracketed consistency zero; None if spurious."""
    probes = (2, 3, 5, 7)
    f = lambda t: consistency(t, parity, probes=probes)[0][probe_idx]
    x0, x1 = lo, hi
    f0, f1 = f(x0), f(x1)
    for _ in range(40):
        if f1 == f0:
            break
        x2 = x1 - f1 * (x1 - x0) / (f1 - f0)
        x2 = min(max(x2, min(lo, hi) - 2e-3), max(lo, hi) + 2e-3)
        x0, f0 = x1, f1
        x1, f1 = x2, f(x2)
        if abs(x1 - x0) < tol:
            break
    g, c = consistency(x1, parity, probes=probes)
    if np.max(np.abs(g)) > 1e-8:
        return None
    return x1, c


# ---------------------------------------------------------------- phase 2

def extract_coefficients(t, parity, c_low, n_max, report):
    """lam(n) for n <= n_max via height-ladder extraction from c_low."""
    w_use = wkb_cut(t, W_USE_LOG)
    w_hi = wkb_cut(t, W_HI_LOG)
    M = len(c_low)
    lam = np.zeros(n_max + 1)
    lam[1:M + 1] = c_low
    have = M
    ode = None
    overlap_worst = 0.0
    stagger_worst = 0.0
    while have < n_max:
        n_top = min(n_max, int(have * w_use / t * 0.97))
        if n_top <= have:
            n_top = have + 1
        Ya = w_use / (2 * np.pi * n_top)
        vals = np.zeros((2, n_top + 1))
        divs = np.zeros((2, n_top + 1))
        for h, Y in enumerate((Ya, 0.93 * Ya)):
            Q = 1 << int(math.ceil(math.log2(n_top + w_hi / (2 * np.pi * Y) + 8)))
            if ode is None or 2 * np.pi * Y < ode.w_lo:
                ode = KappaODE(t, w_lo=2 * np.pi * 0.93 * Ya * 0.9)
            j = np.arange(Q)
            xj = (j + 0.5) / Q
            xs, ys = pullback(xj, np.full(Q, Y))
            m = np.arange(1, M + 1)
            args = 2 * np.pi * ys[:, None] * m[None, :]
            K = ode(args.ravel()).reshape(args.shape)
            cs = np.cos if parity == "even" else np.sin
            u = (np.sqrt(ys)[:, None] * K
                 * cs(2 * np.pi * xs[:, None] * m[None, :])) @ c_low
            spec = np.fft.rfft(u)
            n = np.arange(1, n_top + 1)
            # u = sum c(n) sqrt(Y) kappa cs(2 pi n x_j), x_j offset by 1/(2Q)
            phase = np.exp(-2j * np.pi * n * 0.5 / Q)
            proj = spec[1:n_top + 1] * phase * (2.0 / Q)
            comp = proj.real if parity == "even" else -proj.imag
            div = np.sqrt(Y) * ode(2 * np.pi * Y * n)
            vals[h, 1:] = np.where(div != 0, comp / np.where(div == 0, 1, div), 0.0)
            divs[h, 1:] = np.abs(div)
        pick = np.argmax(divs, axis=0)
        new = vals[pick, np.arange(n_top + 1)]
        both = (divs[0] > 1e-3) & (divs[1] > 1e-3)
        if np.any(both):
            stagger_worst = max(stagger_worst,
                                float(np.max(np.abs(vals[0, both] - vals[1, both]))))
        old = lam[1:have + 1]
        overlap_worst = max(overlap_worst,
                            float(np.max(np.abs(new[1:have + 1] - old))))
        lam[have + 1:n_top + 1] = new[have + 1:]
        have = n_top
    report["overlap_worst"] = overlap_worst
    report["stagger_worst"] = stagger_worst
    return lam[1:]


def hecke_closure(lam_raw, n_max):
    """Multiplicative closure of the extracted prime values."""
    lam = np.zeros(n_max + 1)
    lam[1] = 1.0
    spf = np.zeros(n_max + 1, dtype=np.int64)
    for p in range(2, n_max + 1):
        if spf[p] == 0:
            spf[p::p][spf[p::p] == 0] = p
    for n in range(2, n_max + 1):
        p = spf[n]
        q, k = n, 0
        while q % p == 0:
            q //= p
            k += 1
        if q > 1:
            lam[n] = lam[p ** k] * lam[q]
        elif k == 1:
            lam[n] = lam_raw[n - 1]
        else:
            lam[n] = lam[p] * lam[p ** (k - 1)] - lam[p ** (k - 2)]
    return lam[1:]


# ---------------------------------------------------------------- norms

def l2_norm_sq(t, parity, c_low, ode=None):
    """<u,u> over the fundamental domain for u = sum c(n) sqrt(y) kappa cs."""
    if ode is None:
        ode = KappaODE(t, w_lo=2.0)
    M = len(c_low)
    total = 0.0
    # cusp part: (1/2) sum_n c(n)^2 int_1^{ymax} kappa(2 pi n y)^2 dy/y
    nodes, wts = np.polynomial.legendre.leggauss(12)
    for n in range(1, M + 1):
        y_hi = ode.w_hi / (2 * np.pi * n)
        if y_hi <= 1.0:
            break
        panels = max(8, int(4 * (t + 10) * math.log(y_hi) / (2 * np.pi)) + 8)
        edges = np.exp(np.linspace(0.0, math.log(y_hi), panels + 1))
        lo, hi = edges[:-1], edges[1:]
        y = 0.5 * (hi + lo)[:, None] + 0.5 * (hi - lo)[:, None] * nodes[None, :]
        w = 0.5 * (hi - lo)[:, None] * wts[None, :]
        k = ode(2 * np.pi * n * y.ravel()).reshape(y.shape)
        total += 0.5 * c_low[n - 1] ** 2 * float(np.sum(w * k * k / y))
    # strip below y=1: 2 * int_{sqrt3/2}^1 dy/y^2 int_{sqrt(1-y^2)}^{1/2} |u|^2 dx
    ny, nx = 40, 40
    ynod, ywt = np.polynomial.legendre.leggauss(ny)
    xnod, xwt = np.polynomial.legendre.leggauss(nx)
    ys = 0.5 * (1 + SQ3_2) + 0.5 * (1 - SQ3_2) * ynod
    ywts = 0.5 * (1 - SQ3_2) * ywt
    cs = np.cos if parity == "even" else np.sin
    m = np.arange(1, M + 1)
    for y, wy in zip(ys, ywts):
        x0 = math.sqrt(max(1 - y * y, 0.0))
        if x0 >= 0.5:
            continue
        xs = 0.5 * (0.5 + x0) + 0.5 * (0.5 - x0) * xnod
        xws = 0.5 * (0.5 - x0) * xwt
        k = ode(2 * np.pi * y * m)
        u = (np.sqrt(y) * k * c_low) @ cs(2 * np.pi * np.outer(m, xs))
        total += 2.0 * wy / (y * y) * float(np.sum(xws * u * u))
    return total


# ---------------------------------------------------------------- driver

def build(t_lo, t_hi, step, n_max, out_path):
    print(f"scanning ({t_lo}, {t_hi}] step {step} ...", flush=True)
    roots = []
    for parity in ("even", "odd"):
        brackets = scan_parity(parity, t_lo, t_hi, step)
        done = []
        for lo, hi, k in brackets:
            if any(abs(0.5 * (lo + hi) - d) < step for d in done):
                continue
            r = refine_root(parity, lo, hi, k)
            if r is None:
                continue
            t, c = r
            if any(p == parity and abs(t - tt) < 1e-7 for tt, p, _ in roots):
                continue
            done.append(0.5 * (lo + hi))
            roots.append((t, parity, c))
            print(f"  {parity:5s} t = {t:.9f}", flush=True)
    roots.sort(key=lambda r: r[0])
    n_even = sum(1 for r in roots if r[1] == "even")
    n_odd = len(roots) - n_even
    print(f"found {len(roots)} forms ({n_even} even, {n_odd} odd); "
          f"Weyl main term ~ {t_hi**2 / 12:.1f}", flush=True)

    records = []
    for t, parity, c in roots:
        rep = {}
        tt0 = time.time()
        lam_raw = extract_coefficients(t, parity, c, n_max, rep)
        lam = hecke_closure(lam_raw, n_max)
        closure_dev = float(np.max(np.abs(lam - lam_raw)))
        norm2 = l2_norm_sq(t, parity, c)
        alpha = 1.0 / (2.0 * (1.0 + math.exp(-2 * math.pi * t)) * norm2)
        ram = float(np.max(np.abs(lam_raw[np.array(
            [p - 1 for p in range(2, n_max + 1) if all(p % q for q in range(2, int(p**0.5) + 1))])])))
        print(f"  t={t:11.7f} {parity:5s} alpha={alpha:8.5f} "
              f"closure_dev={closure_dev:.2e} overlap={rep['overlap_worst']:.2e} "
              f"stagger={rep['stagger_worst']:.2e} max|lam(p)|={ram:.3f} "
              f"[{time.time()-tt0:.1f}s]", flush=True)
        records.append({
            "t": t, "parity": parity, "alpha": alpha,
            "lambda": [float(v) for v in lam],
        })

    header = {"t_max_complete": float(t_hi - 0.2), "n_max": n_max}
    with open(out_path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(header) + "\n")
        for rec in records:
            fh.write(json.dumps(rec) + "\n")
    print(f"wrote {out_path}", flush=True)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--t-lo", type=float, default=8.0)
    ap.add_argument("--t-hi", type=float, default=32.2)
    ap.add_argument("--step", type=float, default=0.004)
    ap.add_argument("--n-max", type=int, default=4096)
    ap.add_argument("--out", default="data/maass.jsonl")
    args = ap.parse_args()
    build(args.t_lo, args.t_hi, args.step, args.n_max, args.out)
