"""Reference computations that share no code with the package."""

import mpmath as mp


def dft_distribution(t, phi, dps=40):
    """Measurement probabilities by a literal double sum at high precision."""
    with mp.workdps(dps):
        n = 2**t
        phi = mp.mpf(phi.numerator) / phi.denominator if hasattr(phi, "denominator") else mp.mpf(phi)
        x = [mp.expjpi(2 * phi * k) / mp.sqrt(n) for k in range(n)]
        probs = []
        for j in range(n):
            amp = mp.fsum(mp.expjpi(-mp.mpf(2 * j * k) / n) * x[k] for k in range(n))
            probs.append(abs(amp / mp.sqrt(n)) ** 2)
        return probs


def failure_by_dft(s, p, a, symmetric=True, b=3):
    t = s + p
    n = 2**t
    b %= n
    with mp.workdps(40):
        probs = dft_distribution(t, (b + mp.mpf(a)) / n)
        e = 2 ** (p - 1)
        lo = -e + 1 if symmetric else -e
        return float(1 - mp.fsum(probs[(b + ell) % n] for ell in range(lo, e + 1)))


def trigamma_half(n):
    with mp.workdps(40):
        return float(mp.psi(1, n + mp.mpf(1) / 2))
