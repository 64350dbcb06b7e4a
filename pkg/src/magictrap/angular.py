"""Exact Wigner 3j/6j symbols and hyperfine dipole matrix elements.

Quantum numbers are handled as doubled integers internally so that
half-integer arguments stay exact.  The Racah sums are evaluated with
exact big-integer factorials (one rational sum, one rational radicand)
and converted to float once at the end; this keeps better than 12
significant digits for the moderate j used here (j <= 15/2 and a bit
beyond).
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial, sqrt


def _twice(x) -> int:
    """Quantum number -> exact doubled integer. Rejects non-(half-)integers."""
    d = 2 * Fraction(x).limit_denominator(4)
    if d.denominator != 1 or abs(2 * x - float(d)) > 1e-9:
        raise ValueError(f"quantum number {x!r} is not integer or half-integer")
    return int(d)


def _triangle_ok(a: int, b: int, c: int) -> bool:
    # doubled-integer triangle rule incl. parity of the triad sum
    return (abs(a - b) <= c <= a + b) and ((a + b + c) % 2 == 0)


def _tri_frac(a: int, b: int, c: int) -> Fraction:
    # triangle coefficient Delta^2 as an exact rational (doubled args)
    return Fraction(
        factorial((a + b - c) // 2)
        * factorial((a - b + c) // 2)
        * factorial((-a + b + c) // 2),
        factorial((a + b + c) // 2 + 1),
    )


@lru_cache(maxsize=None)
def _w3j(dj1: int, dj2: int, dj3: int, dm1: int, dm2: int, dm3: int) -> float:
    if dm1 + dm2 + dm3 != 0:
        return 0.0
    if not _triangle_ok(dj1, dj2, dj3):
        return 0.0
    if abs(dm1) > dj1 or abs(dm2) > dj2 or abs(dm3) > dj3:
        return 0.0

    # Racah sum limits (all plain integers once divided by 2)
    t1 = (dj2 - dj3 - dm1) // 2
    t2 = (dj1 - dj3 + dm2) // 2
    t3 = (dj1 + dj2 - dj3) // 2
    t4 = (dj1 - dm1) // 2
    t5 = (dj2 + dm2) // 2
    tmin = max(0, t1, t2)
    tmax = min(t3, t4, t5)
    if tmax < tmin:
        return 0.0

    ssum = Fraction(0)
    for t in range(tmin, tmax + 1):
        den = (
            factorial(t)
            * factorial(t - t1)
            * factorial(t - t2)
            * factorial(t3 - t)
            * factorial(t4 - t)
            * factorial(t5 - t)
        )
        ssum += Fraction(-1 if t % 2 else 1, den)
    if ssum == 0:
        return 0.0

    rad = _tri_frac(dj1, dj2, dj3) * Fraction(
        factorial((dj1 + dm1) // 2)
        * factorial((dj1 - dm1) // 2)
        * factorial((dj2 + dm2) // 2)
        * factorial((dj2 - dm2) // 2)
        * factorial((dj3 + dm3) // 2)
        * factorial((dj3 - dm3) // 2)
    )
    phase = -1 if ((dj1 - dj2 - dm3) // 2) % 2 else 1
    return phase * (1 if ssum > 0 else -1) * sqrt(float(rad * ssum * ssum))


@lru_cache(maxsize=None)
def _w6j(dj1: int, dj2: int, dj3: int, dj4: int, dj5: int, dj6: int) -> float:
    triads = (
        (dj1, dj2, dj3),
        (dj1, dj5, dj6),
        (dj4, dj2, dj6),
        (dj4, dj5, dj3),
    )
    for a, b, c in triads:
        if not _triangle_ok(a, b, c):
            return 0.0

    t1 = (dj1 + dj2 + dj3) // 2
    t2 = (dj1 + dj5 + dj6) // 2
    t3 = (dj4 + dj2 + dj6) // 2
    t4 = (dj4 + dj5 + dj3) // 2
    t5 = (dj1 + dj2 + dj4 + dj5) // 2
    t6 = (dj2 + dj3 + dj5 + dj6) // 2
    t7 = (dj1 + dj3 + dj4 + dj6) // 2

    ssum = Fraction(0)
    for t in range(max(t1, t2, t3, t4), min(t5, t6, t7) + 1):
        den = (
            factorial(t - t1)
            * factorial(t - t2)
            * factorial(t - t3)
            * factorial(t - t4)
            * factorial(t5 - t)
            * factorial(t6 - t)
            * factorial(t7 - t)
        )
        ssum += Fraction((-1 if t % 2 else 1) * factorial(t + 1), den)
    if ssum == 0:
        return 0.0

    rad = (
        _tri_frac(dj1, dj2, dj3)
        * _tri_frac(dj1, dj5, dj6)
        * _tri_frac(dj4, dj2, dj6)
        * _tri_frac(dj4, dj5, dj3)
    )
    return (1 if ssum > 0 else -1) * sqrt(float(rad * ssum * ssum))


def wigner3j(j1, j2, j3, m1, m2, m3) -> float:
    """Wigner 3j symbol; 0 when the triangle rule or m1+m2+m3=0 fails.

    Arguments may be integers or half-integers; j and m must share parity.
    """
    dj = [_twice(j) for j in (j1, j2, j3)]
    dm = [_twice(m) for m in (m1, m2, m3)]
    for j, m in zip(dj, dm):
        if j < 0:
            raise ValueError("negative angular momentum")
        if (j - m) % 2:
            raise ValueError("j and m must both be integer or both half-integer")
    return _w3j(*dj, *dm)


def wigner6j(j1, j2, j3, j4, j5, j6) -> float:
    """Wigner 6j symbol; 0 when any of the four triads is not triangular."""
    dj = [_twice(j) for j in (j1, j2, j3, j4, j5, j6)]
    if any(j < 0 for j in dj):
        raise ValueError("negative angular momentum")
    return _w6j(*dj)


def hyperfine_dipole_factor(f_to, f_from, m_to, m_from, p, j_to, j_from, l_from, i) -> float:
    """Angular factor turning a reduced level dipole into a sublevel element.

    phase * sqrt((2F'+1)(2F+1)) * 3j(F',1,F; m',p,-m) * 6j{J,J',1; F',F,I}
    with the phase exponent 2F' + L + I + m (integerized by floor when I is
    half-odd, which only flips a global sign that cancels in every observable
    built from squares or convention-consistent products).
    """
    df_to, df_from = _twice(f_to), _twice(f_from)
    dm_to, dm_from = _twice(m_to), _twice(m_from)
    dj_to, dj_from, di = _twice(j_to), _twice(j_from), _twice(i)

    w3 = _w3j(df_to, 2, df_from, dm_to, _twice(p), -dm_from)
    if w3 == 0.0:
        return 0.0
    w6 = _w6j(dj_from, dj_to, 2, df_to, df_from, di)
    if w6 == 0.0:
        return 0.0
    exponent = (2 * df_to + 2 * l_from + (di + dm_from) // 2 * 2) // 2
    phase = -1 if exponent % 2 else 1
    return phase * sqrt((df_to + 1.0) * (df_from + 1.0)) * w3 * w6


def dipole_element(from_state, to_state, p: int, dataset) -> float:
    """Hyperfine transition dipole element <to|d_p|from> in units of e*a0.

    Requires a reduced dipole linking the two fine levels; vanishing 3j/6j
    selection rules return 0.  Only p in {-1, 0, +1}; the trap model itself
    always uses p = 0 (linear pi polarization).
    """
    if p not in (-1, 0, 1):
        raise ValueError("polarization index must be -1, 0 or +1")
    d_red = dataset.reduced_dipole(from_state.level, to_state.level)
    i = dataset.species.nuclear_spin
    factor = hyperfine_dipole_factor(
        to_state.f, from_state.f, to_state.m_f, from_state.m_f, p,
        to_state.level.j, from_state.level.j, from_state.level.l, i,
    )
    return d_red * factor
