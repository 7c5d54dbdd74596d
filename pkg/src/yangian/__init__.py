"""Exact computations in the Yangian Y(gl_n).

Elements are kept in PBW normal form over the rationals; series in ``u^{-1}``
are truncated at a cutoff; Drinfeld and parabolic generators come from the
Gauss factorization of ``T(u)``.
"""

from .algebra import (
    AlgebraError,
    ContextMismatch,
    Element,
    IndexBoundError,
    ParseError,
    TermCapExceeded,
    TensorEnveloping,
    TensorYangian,
    Yangian,
    commutator,
    degree,
    elem_commutator,
    elem_mul,
    format_element,
    normal_form,
    parse_element,
    set_term_cap,
)
from .generators import (
    center_series,
    drinfeld_generators,
    lookup_generator,
    parabolic_generators,
    quantum_minor,
    root_vector,
    sl_generators,
)
from .morphisms import (
    MorphismDescriptor,
    antipode,
    apply_omega,
    coproduct,
    counit,
    kappa_l,
    psi_embed,
)
from .series import (
    Series,
    SeriesMatrix,
    gauss_factorize,
    matrix_invert,
    quasi_det,
    series_invert,
    series_shift,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraError", "ContextMismatch", "Element", "IndexBoundError", "ParseError",
    "TermCapExceeded", "TensorEnveloping", "TensorYangian", "Yangian", "commutator",
    "degree", "elem_commutator", "elem_mul", "format_element", "normal_form",
    "parse_element", "set_term_cap",
    "center_series", "drinfeld_generators", "lookup_generator", "parabolic_generators",
    "quantum_minor", "root_vector", "sl_generators",
    "MorphismDescriptor", "antipode", "apply_omega", "coproduct", "counit", "kappa_l",
    "psi_embed",
    "Series", "SeriesMatrix", "gauss_factorize", "matrix_invert", "quasi_det",
    "series_invert", "series_shift",
]
