"""Closed-form checks kept apart from the code under test."""
import math

# Scenario constants written out by hand
N_H = 480000.0
B = 1.0
BETA_MH = BETA_HM = 0.375
MU_H = 1.0 / (71 * 365)
ETA_H = 1.0 / 3
MU_M = 1.0 / 11
MU_B = 6.0
MU_A = 0.25
ETA_A = 0.08
ETA_M = 1.0 / 11
NU_H = 0.25
M = 6.0
K_LARVAE = 3.0
CAPACITY = K_LARVAE * N_H


def mosquito_equilibrium(c):
    bracket = 1 - (ETA_A + MU_A) * (MU_M + c) / (MU_B * ETA_A)
    if bracket <= 0:
        return 0.0, 0.0
    A = CAPACITY * bracket
    return A, ETA_A * A / (MU_M + c)


def r0_closed_form(c):
    _, S_m = mosquito_equilibrium(c)
    sq = (B * B * BETA_MH * BETA_HM * NU_H * ETA_M * (S_m / N_H)
          / ((NU_H + MU_H) * (ETA_H + MU_H) * (MU_M + ETA_M + c) * (MU_M + c)))
    return math.sqrt(sq)


def bisect(f, lo, hi, tol=1e-12):
    flo = f(lo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if (f(mid) > 0) == (flo > 0):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
