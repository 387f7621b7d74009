import numpy as np


def rel_err(actual, expected):
    """Max-norm error relative to the max-norm of ``expected``."""
    actual = np.asarray(actual)
    expected = np.asarray(expected)
    return float(np.max(np.abs(actual - expected)) / max(np.max(np.abs(expected)), 1e-300))


def diagonalizable(rng, n, min_sep=1e-3):
    """``S D S^-1`` with a real block-diagonal D of separated eigenvalues.

    Eigenvalues lie in the box |Re| <= 2, |Im| <= 1.5; ``S`` is kept
    reasonably conditioned so the oracle itself stays accurate.
    """
    while True:
        d = np.zeros((n, n))
        eig = []
        i = 0
        while i < n:
            if i + 1 < n and rng.random() < 0.4:
                re, im = rng.uniform(-1.5, 1.5), rng.uniform(0.2, 1.5)
                d[i:i + 2, i:i + 2] = [[re, -im], [im, re]]
                eig += [complex(re, im), complex(re, -im)]
                i += 2
            else:
                v = rng.uniform(-2, 2)
                d[i, i] = v
                eig.append(complex(v))
                i += 1
        sep = min(abs(a - b) for j, a in enumerate(eig) for b in eig[j + 1:])
        if sep > min_sep:
            s = rng.normal(size=(n, n)) + 2 * np.eye(n)
            if np.linalg.cond(s) < 50:
                return s @ d @ np.linalg.inv(s)
