"""Self-dual code classification by Kneser neighbors, with exact Hecke spectra."""

from ._kneser import (
    ClassDatabase,
    Code,
    TypeSpec,
    __version__,
    canonical_form,
    classify,
    cwe,
    database_from_json,
    filtration_dims,
    hecke_matrix,
    neighbors,
    spectrum,
    verify,
)

__all__ = [
    "ClassDatabase",
    "Code",
    "TypeSpec",
    "__version__",
    "canonical_form",
    "classify",
    "cwe",
    "database_from_json",
    "filtration_dims",
    "hecke_matrix",
    "neighbors",
    "spectrum",
    "verify",
]
