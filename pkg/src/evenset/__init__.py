"""Maximally even subsets of Z_c via the discrete Fourier transform."""

from .core import (
    EnumerationTooLarge,
    EvensetError,
    PitchClassSet,
    TranslationClass,
    canonical_class,
    complement,
    invert,
    period,
    translate,
)
from .spectral import (
    IntervalVector,
    Spectrum,
    dft_function,
    dft_subset,
    interval_content,
    inverse_dft,
    verify_hexachord,
    verify_lewin,
)
from .maxeven import (
    MEQuery,
    MEResult,
    is_maximally_even,
    me_class_count,
    me_formula,
    me_oracle,
    verify_generated,
)
from .classify import (
    MEClassification,
    TypeIIIWitness,
    classify,
    decompose,
    find_generator,
    lemma_witness,
    type_iii_search,
)
from .properties import (
    angular_interval_sum,
    cardinality_variety,
    distance_sum_argmax,
    euclidean_chord_sum,
    generic_interval_spectrum,
    inclusion_in_complement,
    myhill_check,
    second_order_me,
    step_pattern,
)

__version__ = "0.1.0"
