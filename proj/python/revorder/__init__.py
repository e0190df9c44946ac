"""Moore-Penrose pseudoinverses and the reverse-order law pinv(AB) = pinv(B) pinv(A)."""

from ._core import (
    AmbientMismatch,
    BlockShapeMismatch,
    DimensionMismatch,
    EmptySubspace,
    Error,
    InvalidArgument,
    IoError,
    NotOrthonormal,
    NotUnitary,
    ParseError,
    PlanInfeasible,
    RolNotSatisfied,
    aligned_svds,
    classify,
    construct_pair,
    construct_partner,
    derived_rols,
    penrose,
    pinv,
    pinv_oracle,
    principal_angles,
    svd,
)

__all__ = [name for name in dir() if not name.startswith("_")]
