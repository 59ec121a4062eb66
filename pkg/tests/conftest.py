"""Shared golden data: the running tableau, its encodings, and the
matrices of the worked decomposition examples."""

import pytest

from doublecrystal import BinaryMatrix, IntegralMatrix, SST, Tableau

# semistandard tableau of shape (9,8,5,5,3)/(4,1) and weight (2,3,3,2,4,4,7)
T_CHAIN = (
    (4, 1),
    (5, 2),
    (5, 3, 2),
    (6, 3, 3, 1),
    (6, 4, 3, 2),
    (7, 5, 4, 3),
    (9, 5, 5, 3, 1),
    (9, 8, 5, 5, 3),
)

M_BIN = BinaryMatrix([
    [0, 1, 0, 0, 1, 0, 0, 0, 0],
    [1, 1, 1, 0, 0, 0, 0, 0, 0],
    [1, 0, 1, 0, 0, 1, 0, 0, 0],
    [0, 1, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 1, 0, 1, 0, 0],
    [1, 0, 0, 0, 1, 0, 0, 1, 1],
    [0, 1, 1, 1, 1, 1, 1, 1, 0],
])

M_INT = IntegralMatrix([
    [1, 0, 1, 0, 1, 2, 0],
    [1, 1, 0, 1, 1, 0, 3],
    [0, 2, 1, 0, 1, 1, 0],
    [0, 0, 1, 1, 1, 0, 2],
    [0, 0, 0, 0, 0, 1, 2],
])

P_BIN = BinaryMatrix([
    [1, 1, 1, 0, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 1, 1, 1, 0],
    [1, 1, 1, 1, 1, 0, 0, 0, 0],
    [0, 1, 0, 1, 1, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
])

Q_BIN = BinaryMatrix([
    [1, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 1, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 1, 0, 0, 0, 0, 0],
    [1, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 1, 1, 0, 0, 0],
    [1, 0, 0, 0, 1, 0, 1, 1, 0],
    [0, 1, 1, 1, 1, 1, 1, 1, 0],
])

P_INT = IntegralMatrix([
    [2, 1, 1, 0, 2, 2, 0],
    [0, 2, 0, 1, 1, 1, 3],
    [0, 0, 2, 0, 1, 0, 2],
    [0, 0, 0, 1, 0, 0, 2],
    [0, 0, 0, 0, 0, 1, 0],
])

Q_INT = IntegralMatrix([
    [5, 0, 0, 0, 0, 0, 0],
    [2, 5, 0, 0, 0, 0, 0],
    [1, 2, 2, 0, 0, 0, 0],
    [0, 1, 2, 2, 0, 0, 0],
    [0, 0, 1, 1, 1, 0, 0],
])

LAMBDA = (8, 8, 5, 3, 1)

# S of the running example: the rectification of T
S_CHAIN = ((), (2,), (3, 2), (4, 2, 2), (4, 3, 2, 1), (6, 4, 3, 1),
           (8, 5, 3, 1, 1), (8, 8, 5, 3, 1))

# Lbar: the Burge recording tableau
LBAR_CHAIN = ((), (5,), (7, 5), (8, 7, 2), (8, 8, 4, 2), (8, 8, 5, 3, 1))

# R: the reverse transpose recording tableau of the column-insertion dual RSK
R_CHAIN = ((8, 8, 5, 3, 1), (7, 7, 4, 3, 1), (6, 6, 3, 2, 1), (5, 5, 2, 2),
           (5, 4, 1, 1), (4, 3), (3, 2), (2, 1), (1,), ())

# R*: the Schutzenberger dual of R
RSTAR_CHAIN = ((), (1, 1, 1), (2, 2, 2, 1), (3, 3, 3, 2), (4, 4, 4, 2),
               (5, 5, 5, 2, 1), (6, 5, 5, 3, 1), (7, 6, 5, 3, 1),
               (8, 7, 5, 3, 1), (8, 8, 5, 3, 1))

# Lbar*: the Schutzenberger dual of Lbar
LBARSTAR_CHAIN = ((8, 8, 5, 3, 1), (8, 5, 5, 2), (5, 5, 3), (5, 3), (3,), ())

PTILDE_BIN = BinaryMatrix([
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 1, 1, 0, 0, 1, 0, 0, 0],
    [1, 1, 1, 1, 1, 0, 0, 0, 0],
    [1, 1, 1, 1, 1, 0, 1, 1, 1],
    [1, 1, 1, 1, 1, 1, 1, 1, 0],
])

# the 3 x 13 matrix of the binary crystal move examples
M3X13 = BinaryMatrix([
    [1, 0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 1],
    [0, 1, 1, 1, 1, 0, 0, 1, 1, 0, 1, 1, 1],
    [0, 1, 0, 1, 0, 0, 1, 1, 1, 0, 1, 0, 1],
])

# the 2 x 9 matrix of the integral transfer examples
M2X9 = IntegralMatrix([
    [1, 2, 1, 3, 3, 1, 2, 4, 0],
    [2, 1, 1, 4, 2, 0, 5, 2, 0],
])


@pytest.fixture
def running_tableau():
    return Tableau(SST, T_CHAIN)
