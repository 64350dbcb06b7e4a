"""Physical constants and the unit conversions used across the package.

Internal convention: frequencies are angular (rad/s) inside the numerics,
level energies come in cm^-1, hyperfine constants in MHz, and every
user-facing number is an ordinary frequency (Hz) or a display unit
(GHz, GW/m^2, uK, Gauss).  All conversions live here.
"""

from scipy.constants import physical_constants

c = physical_constants["speed of light in vacuum"][0]  # m/s
h = physical_constants["Planck constant"][0]  # J s
hbar = physical_constants["reduced Planck constant"][0]  # J s
epsilon_0 = physical_constants["vacuum electric permittivity"][0]  # F/m
k_B = physical_constants["Boltzmann constant"][0]  # J/K
mu_B = physical_constants["Bohr magneton"][0]  # J/T
e_a0 = physical_constants["atomic unit of electric dipole mom."][0]  # C m, = 8.4783536e-30

g_s = 2.00231930436  # free-electron spin g-factor (magnitude)

TWO_PI = 6.283185307179586

GAUSS_TO_TESLA = 1e-4
MHZ = 1e6
UK = 1e-6  # microkelvin in K


def cm1_to_hz(energy_cm1: float) -> float:
    """Level energy in cm^-1 to ordinary frequency in Hz."""
    return c * 100.0 * energy_cm1


def cm1_to_rad(energy_cm1: float) -> float:
    """Level energy in cm^-1 to angular frequency in rad/s."""
    return TWO_PI * cm1_to_hz(energy_cm1)


def hz_to_rad(f_hz: float) -> float:
    return TWO_PI * f_hz


def rad_to_hz(w_rad: float) -> float:
    return w_rad / TWO_PI


def wavelength_nm(frequency_hz: float) -> float:
    """Vacuum wavelength in nm for an ordinary frequency in Hz."""
    return c / frequency_hz * 1e9
