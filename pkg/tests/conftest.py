import pytest

from auxfield.model import (
    GaussianWell,
    Identical,
    Kinematics,
    PotentialTerm,
    PowerLaw,
    QuantumNumbers,
    Scope,
    SystemSpec,
)


def power_system(
    n,
    m,
    kinematics,
    one=None,
    pair=None,
):
    """System with optional (coefficient, exponent) power terms per scope."""
    one_body = ()
    pairwise = ()
    if one is not None:
        one_body = (PotentialTerm(Scope.ONE_BODY, PowerLaw(*one)),)
    if pair is not None:
        pairwise = (PotentialTerm(Scope.PAIRWISE, PowerLaw(*pair)),)
    return SystemSpec(
        n=n,
        masses=Identical(m),
        kinematics=kinematics,
        one_body=one_body,
        pairwise=pairwise,
    )


def gaussian_system(n, m, depth, range_):
    return SystemSpec(
        n=n,
        masses=Identical(m),
        kinematics=Kinematics.NONRELATIVISTIC,
        pairwise=(PotentialTerm(Scope.PAIRWISE, GaussianWell(depth, range_)),),
    )


def ground(n):
    return QuantumNumbers.ground(n)


@pytest.fixture
def nr():
    return Kinematics.NONRELATIVISTIC


@pytest.fixture
def sr():
    return Kinematics.SEMIRELATIVISTIC
