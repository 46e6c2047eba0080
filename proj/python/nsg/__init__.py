"""Factorization invariants of numerical semigroups."""

from ._core import (
    NsgError,
    NumericalSemigroup,
    apery_set,
    betti_elements,
    catenary,
    catenary_of_element,
    characterize,
    delta_max,
    delta_set,
    dim3_params,
    factorizations,
    frobenius,
    gaps,
    genus,
    length_set,
    mu_of_element,
    pseudo_frobenius,
    r_classes,
    report,
    run_examples,
    symmetry_class,
)

__all__ = [
    "NsgError",
    "NumericalSemigroup",
    "apery_set",
    "betti_elements",
    "catenary",
    "catenary_of_element",
    "characterize",
    "delta_max",
    "delta_set",
    "dim3_params",
    "factorizations",
    "frobenius",
    "gaps",
    "genus",
    "length_set",
    "mu_of_element",
    "pseudo_frobenius",
    "r_classes",
    "report",
    "run_examples",
    "symmetry_class",
]
