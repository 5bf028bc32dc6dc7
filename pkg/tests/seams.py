"""Straddle pairs across the internal routing boundaries.

Each generator yields ``((mu, x, y), (mu, x, y))`` pairs one float apart
that the dispatcher sends to different branches.
"""

import math

import numpy as np

from marcum import select_method
from marcum.asymp_large_mu import band_bounds

UP = 1e300


def x30(rng, count):
    out = []
    while len(out) < count:
        mu = rng.uniform(1, 300)
        y = rng.uniform(0.5, 2 * (30 + mu))
        a, b = (mu, math.nextafter(30.0, 0.0), y), (mu, 30.0, y)
        if select_method(*a) != select_method(*b):
            out.append((a, b))
    return out


def xi30(rng, count):
    out = []
    while len(out) < count:
        x = rng.uniform(30, 100)
        mu = rng.uniform(1, math.sqrt(60) * 0.999)
        y = 225.0 / x
        while 2 * math.sqrt(x * y) <= 30:
            y = math.nextafter(y, UP)
        a, b = (mu, x, math.nextafter(y, 0.0)), (mu, x, y)
        if select_method(*a) != select_method(*b):
            out.append((a, b))
    return out


def mu_sq_2xi(rng, count):
    out = []
    while len(out) < count:
        x = rng.uniform(30, 300)
        y = rng.uniform(0.2 * x, 3 * x)
        mu = math.sqrt(4 * math.sqrt(x * y))
        while mu * mu < 4 * math.sqrt(x * y):
            mu = math.nextafter(mu, UP)
        a, b = (math.nextafter(mu, 0.0), x, y), (mu, x, y)
        if select_method(*a) != select_method(*b):
            out.append((a, b))
    return out


def band_edge(rng, count, which):
    out = []
    while len(out) < count:
        x = rng.uniform(30, 2000)
        mu = rng.uniform(1, 1000)
        f = band_bounds(x, mu)[which]
        if f <= 0:
            continue
        a, b = (f, math.nextafter(f, UP)) if which == 0 else (math.nextafter(f, 0.0), f)
        a, b = (mu, x, a), (mu, x, b)
        if select_method(*a) != select_method(*b):
            out.append((a, b))
    return out


def mu135(rng, count):
    out = []
    lo = math.nextafter(135.0, 0.0)
    while len(out) < count:
        x = rng.uniform(30, 2000)
        f1, f2 = band_bounds(x, 135.0)
        y = rng.uniform(max(f1, 0.0), f2)
        a, b = (lo, x, y), (135.0, x, y)
        if select_method(*a) != select_method(*b):
            out.append((a, b))
    return out


BOUNDARIES = {
    "x=30": x30,
    "xi=30": xi30,
    "mu^2=2xi": mu_sq_2xi,
    "y=f1": lambda rng, n: band_edge(rng, n, 0),
    "y=f2": lambda rng, n: band_edge(rng, n, 1),
    "mu=135": mu135,
}


def relative_gap(r1, r2) -> float:
    """Largest relative difference of the two P and the two Q values."""
    gap = 0.0
    for a, b in ((r1.p, r2.p), (r1.q, r2.q)):
        if a != b:
            gap = max(gap, abs(a - b) / max(abs(a), abs(b)))
    return gap


def worst_gap(name, count=100, seed=3):
    from marcum import marcum

    rng = np.random.default_rng(seed)
    return max(relative_gap(marcum(*a), marcum(*b)) for a, b in BOUNDARIES[name](rng, count))
